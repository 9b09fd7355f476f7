# %% [markdown]
# # Shadow diagrams
#
# Plot (i, p(i)) and peel off the points with nothing below-left of them;
# each layer's boundary is a shadowline. The layers carry the piles: line i's
# heights are pile i of R, its abscissae pile i of S. Iterating on the
# southwest corners of each line gives further diagrams, whose lines may
# cross.

# %%
import sys
import tempfile
from pathlib import Path

from patience_sorting import (
    Permutation, crossings, exhaustive_iterates, piles_from_diagram, render,
    salient_points,
)

p = Permutation.parse("64518723")
for d in exhaustive_iterates(p):
    print(f"iterate {d.iterate}:")
    for i, line in enumerate(d.lines, start=1):
        print(f"  line {i}: anchors {[tuple(a) for a in line.anchors]}"
              f"  corners {[tuple(s) for s in salient_points(line)]}")
    for c in crossings(d):
        print(f"  lines {c.line_a} and {c.line_b} meet at ({c.point[0]}, {c.point[1]})")

# %%
print(piles_from_diagram(exhaustive_iterates(p)[0]).to_json())

# %% [markdown]
# 45312 has strongly monotone piles, yet its two lines cross twice.

# %%
q = Permutation.parse("45312")
print([(str(c.point[0]), str(c.point[1])) for c in crossings(exhaustive_iterates(q)[0])])

# %%
out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.gettempdir()) / "shadow_64518723.svg"
out.write_text(render(exhaustive_iterates(p), "svg"), encoding="utf-8")
print("wrote", out)
