# %% [markdown]
# # Barred pattern avoidance
#
# A pattern such as `3-!1-42` is avoided when every occurrence of its core
# `3-42` (the barred letter deleted) sits inside an occurrence of `3-1-42`.
# Avoiders of this pattern are exactly the reverse patience words, and they
# are counted by the Bell numbers.

# %%
from patience_sorting import (
    Permutation, avoids, bell, count_avoiders, inverse, parse_pattern,
)

pat = parse_pattern("3-!1-42")
print("core:", pat.core(), " unbarred:", pat.strip())
for w in ("64152873", "45312"):
    print(w, "avoids 3-!1-42:", avoids(Permutation.parse(w), pat))

# %%
print(" n  |S_n(3-!1-42)|  |S_n(23-1)|  B_n")
for n in range(1, 10):
    print(f"{n:2}  {count_avoiders(n, ['3-!1-42']):13}  {count_avoiders(n, ['23-1']):11}  {bell(n)}")

# %% [markdown]
# Taking inverses moves a pattern's letters between positions and values.
# For 3-!1-42 the transported pattern has dashes everywhere: `!2-4-1-3`.
# The variant `!2-41-3`, with 4 and 1 adjacent, already has 53 avoiders
# at n = 5.

# %%
for text in ("!2-4-1-3", "!2-41-3"):
    print(text, [count_avoiders(n, [text]) for n in range(1, 8)])
p = Permutation.parse("31452")
print("31452 avoids 3-!1-42:", avoids(p, pat),
      " inverse avoids !2-41-3:", avoids(inverse(p), parse_pattern("!2-41-3")),
      " inverse avoids !2-4-1-3:", avoids(inverse(p), parse_pattern("!2-4-1-3")))

# %% [markdown]
# Permutations avoiding both 3-!1-42 and 3-!1-24 are the ones with a unique
# preimage under patience sorting.

# %%
print([count_avoiders(n, ["3-!1-42", "3-!1-24"]) for n in range(0, 10)])
