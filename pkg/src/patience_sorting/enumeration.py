"""
Counting: Bell and Fibonacci numbers, the table f(n, k) of permutations
avoiding 3-!1-42 and 3-!1-24 that start with k, the convolved Fibonacci
triangle, and checks of the generating-function identities on truncated
series.

All arithmetic is on Python ints or Fractions; nothing is rounded.

>>> f_table(10).f_n
[1, 1, 2, 4, 9, 23, 66, 209, 718, 2645, 10373]
>>> matrix_A(5)[4]
[2, 2, 1, 0, 0]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import BivariateSeries, CompositionNotWellDefined, TruncatedSeries

__all__ = [
    "CountTable", "bell", "bell_numbers", "fib", "f_table", "convolved_fib",
    "c_coeffs", "f_alt", "matrix_A", "inverse_I_minus_A", "matrix_solve",
    "neumann_check", "phi_series", "phi_equation_check", "kernel_radical",
    "kernel_identity_check", "CompositionNotWellDefined",
]

Matrix = list[list[int]]


def bell_numbers(n_max: int) -> list[int]:
    """B_0..B_{n_max} from the Bell triangle."""
    out = [1]
    row = [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        out.append(row[0])
    return out


def bell(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return bell_numbers(n)[n]


@lru_cache(maxsize=None)
def _fibs(n: int) -> tuple[int, ...]:
    out = [1, 1]
    while len(out) <= n:
        out.append(out[-1] + out[-2])
    return tuple(out[: n + 1])


def fib(n: int) -> int:
    """Fibonacci numbers indexed so that F_0 = F_1 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _fibs(n)[n]


@dataclass(frozen=True)
class CountTable:
    n_max: int
    f_nk: tuple[tuple[int, ...], ...]  # f_nk[n][k], 0 <= k <= n
    f_n: list[int]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        return self.f_nk[n][k] if 0 <= k <= n <= self.n_max else 0


def f_table(n_max: int) -> CountTable:
    """
    Fill f(n, k) from the boundary rules f(n,0) = 0, f(n,1) = f(n,n) = f(n-1),
    f(n,2) = 0 (n >= 3) and, for the remaining 3 <= k < n,
    f(n,k) = f(n,k-1) + f(n-1,k-1) + f(n-2,k-2).

    The boundary rules win where they overlap the general one, so the
    f(n,k-1) term at k = 3 is the already-fixed f(n,2) = 0.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rows: list[list[int]] = [[1]]
    f = [1]

    def get(n, k):
        return rows[n][k] if 0 <= n < len(rows) and 0 <= k <= n else 0

    for n in range(1, n_max + 1):
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            if k == 1 or k == n:
                row[k] = f[n - 1]
            elif k == 2:
                row[k] = 0
            else:
                row[k] = row[k - 1] + get(n - 1, k - 1) + get(n - 2, k - 2)
        rows.append(row)
        f.append(sum(row))
    return CountTable(n_max, tuple(tuple(r) for r in rows), f)


def _fib_power(parts: int, length: int) -> list[int]:
    """Coefficients 0..length-1 of (sum F_j x^j)^parts."""
    fibs = _fibs(max(length, 1))
    out = [1] + [0] * (length - 1)
    for _ in range(parts):
        out = [sum(out[i] * fibs[d - i] for i in range(d + 1)) for d in range(length)]
    return out


def convolved_fib(n: int, k: int) -> int:
    """
    a(n, k): the sum of F_{n_0} F_{n_1} ... F_{n_k} over the ways of writing
    n - k - 2 as an ordered sum of k + 1 nonnegative parts, i.e. the
    coefficient of x^n in x^(k+2) / (1 - x - x^2)^(k+1); zero when n < k + 2.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    d = n - k - 2
    if d < 0:
        return 0
    return _fib_power(k + 1, d + 1)[d]


def c_coeffs(k_max: int) -> Matrix:
    """
    c[k][m] for 0 <= m <= k <= k_max from c(2,0) = 1 and
    c(k,m) = c(k-1,m-1) + c(k-1,m) + c(k-2,m), vanishing for k < 2, m < 0
    or m > k - 2.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    c = [[0] * (k + 1) for k in range(k_max + 1)]

    def get(k, m):
        return c[k][m] if k >= 2 and 0 <= m <= k - 2 else 0

    c[2][0] = 1
    for k in range(3, k_max + 1):
        for m in range(k - 1):
            c[k][m] = get(k - 1, m - 1) + get(k - 1, m) + get(k - 2, m)
    return c


def f_alt(n_max: int) -> list[int]:
    """
    f(n) via f(n,1) = f(n,n) = f(n-1) and, for n >= k >= 2,
    f(n,k) = sum_{m=0}^{k-3} c(k-1,m) f(n-k+m) + [n = k] F_{k-2}.

    The coefficient is taken one row up the c triangle; with c(k,m) itself
    the sum already disagrees with the direct table at f(5,4).
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    c = c_coeffs(max(n_max, 2))
    f = [1]
    for n in range(1, n_max + 1):
        total = f[n - 1]  # k = 1
        for k in range(2, n + 1):
            if k == n and n > 1:
                v = sum(c[k - 1][m] * f[m] for m in range(k - 2)) + fib(k - 2)
            else:
                v = sum(c[k - 1][m] * f[n - k + m] for m in range(k - 2))
            total += v
        f.append(total)
    return f


def matrix_A(N: int) -> Matrix:
    """The N x N corner of A = (a(n, k))."""
    return [[convolved_fib(n, k) for k in range(N)] for n in range(N)]


def inverse_I_minus_A(N: int) -> Matrix:
    """(I - A)^{-1} on the N x N corner, by forward substitution (I - A is unit lower triangular)."""
    A = matrix_A(N)
    inv = [[0] * N for _ in range(N)]
    for col in range(N):
        for row in range(col, N):
            inv[row][col] = (row == col) + sum(A[row][j] * inv[j][col] for j in range(col, row))
    return inv


def _rhs(N: int) -> list[int]:
    return [1] + [fib(i) for i in range(N - 1)]


def matrix_solve(N: int) -> list[int]:
    """Solve (I - A) X = (1, F_0, F_1, ...) for X = (f(0), ..., f(N-1))."""
    if N < 1:
        raise ValueError("N must be positive")
    A = matrix_A(N)
    F = _rhs(N)
    X: list[int] = []
    for n in range(N):
        X.append(F[n] + sum(A[n][m] * X[m] for m in range(n)))
    return X


def _matmul(P: Matrix, Q: Matrix) -> Matrix:
    N = len(P)
    return [[sum(P[i][k] * Q[k][j] for k in range(N)) for j in range(N)] for i in range(N)]


def neumann_check(N: int, terms: int) -> bool:
    """
    Check on the N x N corner that (I - A)^{-1} is the sum of A^j for
    j = 0..terms, that A^j vanishes on the 2j diagonals at and below the
    main one, and that the inverse has no negative entries.
    """
    if terms < -(-N // 2):
        raise ValueError("need terms >= ceil(N/2)")
    A = matrix_A(N)
    power = [[int(i == j) for j in range(N)] for i in range(N)]
    total = [row[:] for row in power]
    for j in range(1, terms + 1):
        power = _matmul(power, A)
        if any(power[r][c] for r in range(N) for c in range(N) if r - c < 2 * j):
            return False
        total = [[t + p for t, p in zip(tr, pr)] for tr, pr in zip(total, power)]
    inv = inverse_I_minus_A(N)
    return total == inv and all(v >= 0 for row in inv for v in row)


def phi_series(table: CountTable, order: int) -> BivariateSeries:
    """Phi(x, y) = sum f(n,k) x^n y^k, truncated at total degree ``order``."""
    return BivariateSeries({(n, k): table[n, k] for n in range(order + 1)
                            for k in range(n + 1) if n + k <= order}, order)


def phi_equation_check(order: int = 14) -> bool:
    """
    Compare both sides of
    (1-y-xy-x^2y^2) Phi(x,y) = 1-y-xy+xy^2 - xy^2 Phi(xy,1) + xy(1-y-xy) Phi(x,1)
    coefficientwise up to total degree ``order``.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    t = f_table(order)
    B = BivariateSeries
    x = B.monomial(1, 0, order)
    y = B.monomial(0, 1, order)
    phi = phi_series(t, order)
    phi_x1 = B({(n, 0): t.f_n[n] for n in range(order + 1)}, order)
    phi_xy1 = B({(n, n): t.f_n[n] for n in range(order // 2 + 1)}, order)
    lhs = (1 - y - x * y - x * x * y * y) * phi
    rhs = (1 - y - x * y + x * y * y - x * y * y * phi_xy1
           + x * y * (1 - y - x * y) * phi_x1)
    return lhs == rhs


def kernel_radical(order: int) -> TruncatedSeries:
    """s(x) = (sqrt(1 + 2x + 5x^2) - x - 1) / 2."""
    root = TruncatedSeries([1, 2, 5], order).sqrt()
    return (root - TruncatedSeries([1, 1], order)) * TruncatedSeries([Fraction(1, 2)], order)


def kernel_identity_check(order: int = 30) -> bool:
    """
    Check x + 1 + s(x) F(x) - F(s(x)/x) = 0 up to degree ``order``, where
    F(x) = sum f(n) x^n. Raises CompositionNotWellDefined if s(x)/x has a
    nonzero constant term.
    """
    if order < 4:
        raise ValueError("order must be at least 4")
    F = TruncatedSeries(f_table(order).f_n, order)
    # s/x loses one order, so build s one degree deeper
    s = kernel_radical(order + 1)
    inner = s.div_x()
    total = TruncatedSeries([1, 1], order) + s.truncate(order) * F - F.compose(inner)
    return all(c == 0 for c in total.coeffs)

