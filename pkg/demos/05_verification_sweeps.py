# %% [markdown]
# # Exhaustive verification sweeps
#
# Every suite checks its properties on all permutations up to a size bound
# and reports the first counterexample it finds. Statements marked
# "as published" are checked word for word; where one fails, a corrected
# form follows it.
#
# Set PS_THREADS to control how many worker processes the sweeps use.

# %%
from patience_sorting.verify import SUITES, run_suite

BOUNDS = {"thm3.6": 7, "thm3.9": 20, "series": 12}

for key, suite in SUITES.items():
    n = BOUNDS.get(key, 7)
    print(f"\n{key}: {suite.header} (n <= {n})")
    for r in run_suite(key, n):
        mark = "PASS" if r.passed else "FAIL"
        print(f"  {mark}  {r.name}" + (f"  [{r.counterexample}]" if r.counterexample else ""))
