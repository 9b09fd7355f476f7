"""
Exact truncated power series over the rationals, in one or two variables.

Everything is ``Fraction`` arithmetic; truncation is the only approximation
and it is explicit: a univariate series keeps degrees ``0..order`` and a
bivariate one keeps monomials of total degree at most ``order``.

>>> s = TruncatedSeries([1, 2, 5], order=6).sqrt()
>>> [str(c) for c in s.coeffs]
['1', '1', '2', '-2', '0', '4', '-6']
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["TruncatedSeries", "BivariateSeries", "CompositionNotWellDefined"]


class CompositionNotWellDefined(ValueError):
    """The inner series of a composition has a nonzero constant term."""


def _is_square(q: Fraction) -> Fraction | None:
    from math import isqrt
    if q <= 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


class TruncatedSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        c = [Fraction(v) for v in coeffs][: order + 1]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = c
        self.order = order

    @classmethod
    def x(cls, order: int) -> TruncatedSeries:
        return cls([0, 1], order)

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], self.order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def __add__(self, other):
        o = self._coerce(other)
        m = min(self.order, o.order)
        return TruncatedSeries([self[k] + o[k] for k in range(m + 1)], m)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            f = Fraction(other)
            return TruncatedSeries([c * f for c in self.coeffs], self.order)
        m = min(self.order, other.order)
        out = [Fraction(0)] * (m + 1)
        for i, a in enumerate(self.coeffs[: m + 1]):
            if a:
                for j in range(m + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, m)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        m = min(self.order, o.order)
        return all(self[k] == o[k] for k in range(m + 1))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def div_x(self) -> TruncatedSeries:
        """Divide by x; the constant term must vanish. Loses one order."""
        if self.coeffs[0] != 0:
            raise ValueError("constant term is nonzero; cannot divide by x")
        return TruncatedSeries(self.coeffs[1:], self.order - 1)

    def reciprocal(self) -> TruncatedSeries:
        """1/self by Newton iteration g <- g(2 - self*g)."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        g = TruncatedSeries([1 / self.coeffs[0]], 0)
        prec = 0
        while prec < self.order:
            prec = min(2 * prec + 1, self.order)
            g = TruncatedSeries(g.coeffs, prec)
            g = g * (2 - self.truncate(prec) * g)
        return g.truncate(self.order)

    def sqrt(self) -> TruncatedSeries:
        """Square root by Newton iteration g <- (g + self/g)/2, doubling precision."""
        root = _is_square(self.coeffs[0])
        if root is None:
            raise ValueError("constant term must be the square of a positive rational")
        g = TruncatedSeries([root], 0)
        prec = 0
        while prec < self.order:
            prec = min(2 * prec + 1, self.order)
            g = TruncatedSeries(g.coeffs, prec)
            g = (g + self.truncate(prec) * g.reciprocal()) * Fraction(1, 2)
        return g.truncate(self.order)

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """self(inner(x)), by Horner's rule; ``inner`` must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise CompositionNotWellDefined(
                f"inner series has constant term {inner.coeffs[0]}")
        m = min(self.order, inner.order)
        inner = inner.truncate(m)
        out = TruncatedSeries([self[m]], m)
        for k in range(m - 1, -1, -1):
            out = out * inner + self[k]
        return out


class BivariateSeries:
    """Series in x, y keeping monomials x^i y^j with i + j <= order."""

    __slots__ = ("terms", "order")

    def __init__(self, terms: Mapping[tuple[int, int], object], order: int):
        self.order = order
        self.terms = {(i, j): Fraction(c) for (i, j), c in terms.items()
                      if i + j <= order and c != 0}

    @classmethod
    def monomial(cls, i: int, j: int, order: int, coeff=1) -> BivariateSeries:
        return cls({(i, j): coeff}, order)

    def _coerce(self, other) -> BivariateSeries:
        if isinstance(other, BivariateSeries):
            return other
        return BivariateSeries({(0, 0): other}, self.order)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __add__(self, other):
        o = self._coerce(other)
        m = min(self.order, o.order)
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0) + c
        return BivariateSeries(out, m)

    __radd__ = __add__

    def __neg__(self):
        return BivariateSeries({k: -c for k, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        m = min(self.order, o.order)
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in o.terms.items():
                if i + j + k + l <= m:
                    out[(i + k, j + l)] = out.get((i + k, j + l), 0) + a * b
        return BivariateSeries(out, m)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        m = min(self.order, o.order)
        keys = {k for k in set(self.terms) | set(o.terms) if sum(k) <= m}
        return all(self[k] == o[k] for k in keys)

    def __repr__(self) -> str:
        return f"BivariateSeries({ {k: str(v) for k, v in sorted(self.terms.items())} }, order={self.order})"
