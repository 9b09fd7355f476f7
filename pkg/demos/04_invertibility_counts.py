# %% [markdown]
# # Counting permutations with a unique preimage
#
# f(n) counts the permutations that are the only preimage of their piles.
# It comes out of a two-index recurrence, out of a sum weighted by the
# convolved Fibonacci numbers, and out of a lower-triangular solve.

# %%
from patience_sorting import (
    f_alt, f_table, inverse_I_minus_A, kernel_identity_check, kernel_radical,
    matrix_A, matrix_solve, neumann_check, phi_equation_check,
    unique_preimage_count,
)

print("recurrence  ", f_table(12).f_n)
print("weighted sum", f_alt(12))
print("matrix solve", matrix_solve(13))
print("brute force ", [unique_preimage_count(n, threads=1) for n in range(0, 9)])

# %%
for name, M in (("A", matrix_A(8)), ("(I - A)^-1", inverse_I_minus_A(8))):
    print(name)
    for row in M:
        print("  " + " ".join(f"{v:3}" for v in row))
print("Neumann series check:", neumann_check(8, 4))

# %% [markdown]
# The generating functions satisfy a bivariate functional equation. The
# kernel method then gives a one-variable identity in
# s(x) = (sqrt(1 + 2x + 5x^2) - x - 1)/2. Both are checked on exact
# truncated series.

# %%
print("s(x) =", [str(c) for c in kernel_radical(8).coeffs])
print("bivariate equation to degree 14:", phi_equation_check(14))
print("kernel identity to degree 30:", kernel_identity_check(30))
