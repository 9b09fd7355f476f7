"""Patience sorting, barred pattern avoidance, shadow diagrams and invertibility counts."""

from .perms import *  # noqa: F401,F403
from .patience import *  # noqa: F401,F403
from .patterns import *  # noqa: F401,F403
from .geometry import *  # noqa: F401,F403
from .series import *  # noqa: F401,F403
from .enumeration import *  # noqa: F401,F403
from .sweep import *  # noqa: F401,F403

__version__ = "0.1.0"
