"""
Exhaustive sweeps over S_n, sharded across worker processes.

Shards are fixed by the input alone, never by the worker count: a full sweep
of S_n splits on the first entry, an avoidance count splits on the pattern
of the first few entries. Results are merged with a commutative reduction,
so they do not depend on ``PS_THREADS``.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Hashable, Iterable, Sequence

from .perms import Permutation
from .patience import patience_sort
from .patterns import GenPattern, iter_avoiders

__all__ = ["thread_count", "tally", "count_where", "count_avoiders_sharded",
           "unique_preimage_count", "preimage_class_sizes"]

_SHARD_DEPTH = 3


def thread_count() -> int:
    """Worker count from PS_THREADS, else the machine's CPU count."""
    raw = os.environ.get("PS_THREADS", "").strip()
    if raw:
        try:
            k = int(raw)
        except ValueError:
            raise ValueError(f"PS_THREADS must be a positive integer, got {raw!r}") from None
        if k < 1:
            raise ValueError(f"PS_THREADS must be a positive integer, got {raw!r}")
        return k
    return os.cpu_count() or 1


def _map(fn: Callable, shards: Sequence, threads: int | None) -> list:
    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(shards) <= 1:
        return [fn(s) for s in shards]
    with ProcessPoolExecutor(max_workers=min(threads, len(shards))) as pool:
        return list(pool.map(fn, shards))


def _tally_shard(key: Callable[[Permutation], Hashable], n: int, first: int) -> Counter:
    rest = [v for v in range(1, n + 1) if v != first]
    out: Counter = Counter()
    for tail in itertools.permutations(rest):
        out[key(Permutation((first,) + tail))] += 1
    return out


def tally(n: int, key: Callable[[Permutation], Hashable],
          threads: int | None = None) -> Counter:
    """Counter of ``key(p)`` over all p in S_n. ``key`` must be picklable."""
    if n == 0:
        return Counter({key(Permutation(())): 1})
    parts = _map(partial(_tally_shard, key, n), list(range(1, n + 1)), threads)
    return sum(parts, Counter())


def count_where(n: int, predicate: Callable[[Permutation], bool],
                threads: int | None = None) -> int:
    return tally(n, predicate, threads)[True]


def _standard_prefixes(depth: int) -> list[tuple[int, ...]]:
    return [tuple(w) for w in itertools.permutations(range(1, depth + 1))]


def _count_shard(n: int, pats: Sequence[GenPattern | str], prefix: tuple[int, ...]) -> int:
    return sum(1 for _ in iter_avoiders(n, pats, prefix=prefix))


def count_avoiders_sharded(n: int, pats: Iterable[GenPattern | str],
                           threads: int | None = None) -> int:
    """|S_n(pats)|, with the search tree split on the pattern of the first entries."""
    pats = list(pats)
    prefixes = _standard_prefixes(min(_SHARD_DEPTH, n))
    return sum(_map(partial(_count_shard, n, pats), prefixes, threads))


def preimage_class_sizes(n: int, threads: int | None = None) -> Counter:
    """For each pile configuration on n cards, how many permutations sort to it."""
    return tally(n, patience_sort, threads)


def unique_preimage_count(n: int, threads: int | None = None) -> int:
    """Number of permutations that are the only preimage of their pile configuration."""
    return sum(1 for size in preimage_class_sizes(n, threads).values() if size == 1)
