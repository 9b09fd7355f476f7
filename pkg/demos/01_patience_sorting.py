# %% [markdown]
# # Patience sorting and its extension
#
# Deal the cards of a permutation onto piles: each card goes on the left-most
# pile whose top card is larger, or starts a new pile. Recording the time each
# card arrived gives a second set of piles, and the pair determines the
# permutation again.

# %%
from patience_sorting import (
    Permutation, extended_patience_sort, gather, invert_extended, patience_sort,
    preimages, reverse_patience_word, shape_of,
)

p = Permutation.parse("64518723")
r = patience_sort(p)
print("piles:", r)
print("gathered:", gather(r))
print("longest increasing subsequence length:", len(r))

# %% [markdown]
# The extended algorithm returns the insertion piles R and the recording
# piles S. Both have the same shape.

# %%
pair = extended_patience_sort(p)
print(pair.to_json())
print("shape:", shape_of(pair.insertion).parts)
print("RPW(R) =", reverse_patience_word(pair.insertion).compact())
print("RPW(S) =", reverse_patience_word(pair.recording).compact())
print("inverted:", invert_extended(pair).compact())

# %% [markdown]
# Different permutations can share their insertion piles. 3142 and 3412 do;
# the identity is alone in its class.

# %%
for r in (patience_sort(Permutation.parse("3142")), patience_sort(Permutation.identity(4))):
    print(r, "<-", [q.compact() for q in preimages(r)])
