"""
Permutations, pile configurations and the left-to-right minima/maxima
decompositions that everything else is built on.

Positions and values are 1-based. A permutation is stored as a tuple of its
one-line word, so ``Permutation((6, 4, 5, 1, 8, 7, 2, 3))`` is 64518723.

>>> p = Permutation.parse("64518723")
>>> [s.values for s in left_to_right_minima_decomposition(p)]
[(6, 4, 1), (5, 2), (8, 7, 3)]
>>> str(complement(p))
'3,5,4,8,1,2,7,6'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "PartialPermutation", "Pile", "PileConfig", "Shape",
    "left_to_right_minima_decomposition", "left_to_right_maxima_decomposition",
    "reverse_patience_word", "reverse", "complement", "inverse", "shape_of",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read "6,4,5,1,8,7,2,3" or, for n <= 9, the digit word "64518723"."""
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",")))
        if not text.isdigit() or "0" in text:
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __getitem__(self, i):
        return self.word[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.word))

    def compact(self) -> str:
        """Digit-word form; only meaningful for n <= 9."""
        if len(self.word) > 9:
            raise ValueError("compact form needs n <= 9")
        return "".join(map(str, self.word))


@dataclass(frozen=True)
class PartialPermutation:
    """
    A subsequence of a permutation. ``positions`` are the 1-based positions
    in the host word, kept so the subsequence can be lined up against the
    abscissae of a shadow diagram.
    """

    positions: tuple[int, ...]
    values: tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.positions) != len(self.values):
            raise ValueError("positions and values differ in length")
        if len(set(self.values)) != len(self.values):
            raise ValueError("repeated value in partial permutation")
        if any(v < 1 or v > self.n for v in self.values):
            raise ValueError("value outside 1..n")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Pile:
    """Cards listed bottom to top; they strictly decrease going up."""

    cards: tuple[int, ...]

    def __post_init__(self):
        cards = tuple(self.cards)
        object.__setattr__(self, "cards", cards)
        if not cards:
            raise ValueError("empty pile")
        if any(a <= b for a, b in zip(cards, cards[1:])):
            raise ValueError(f"pile must decrease bottom to top: {cards}")

    @property
    def top(self) -> int:
        return self.cards[-1]

    @property
    def bottom(self) -> int:
        return self.cards[0]

    def __len__(self) -> int:
        return len(self.cards)


@dataclass(frozen=True)
class PileConfig:
    """Ordered piles, left to right, holding exactly the cards 1..n."""

    piles: tuple[Pile, ...]

    def __post_init__(self):
        piles = tuple(p if isinstance(p, Pile) else Pile(tuple(p)) for p in self.piles)
        object.__setattr__(self, "piles", piles)
        cards = sorted(c for p in piles for c in p.cards)
        if cards != list(range(1, len(cards) + 1)):
            raise ValueError("piles must hold exactly the cards 1..n")

    @classmethod
    def of(cls, piles: Iterable[Sequence[int]]) -> PileConfig:
        return cls(tuple(Pile(tuple(p)) for p in piles))

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.piles)

    def __len__(self) -> int:
        return len(self.piles)

    def as_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.cards for p in self.piles)

    def is_valid(self) -> bool:
        """True iff this configuration is an output of patience sorting."""
        from .patience import patience_sort
        return patience_sort(reverse_patience_word(self)) == self

    def __str__(self) -> str:
        return " | ".join(" ".join(map(str, p.cards)) for p in self.piles)


@dataclass(frozen=True)
class Shape:
    """Composition of n given by the pile sizes."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(k < 1 for k in parts):
            raise ValueError("shape parts must be positive")

    @property
    def n(self) -> int:
        return sum(self.parts)


def _peel(p: Permutation, better) -> list[PartialPermutation]:
    remaining = list(enumerate(p.word, start=1))
    out = []
    while remaining:
        kept, rest = [], []
        for pos, v in remaining:
            if not kept or better(v, kept[-1][1]):
                kept.append((pos, v))
            else:
                rest.append((pos, v))
        out.append(PartialPermutation(
            tuple(pos for pos, _ in kept), tuple(v for _, v in kept), len(p)))
        remaining = rest
    return out


def left_to_right_minima_decomposition(p: Permutation) -> list[PartialPermutation]:
    """
    Peel off the left-to-right minima repeatedly. The i-th subsequence is the
    left-to-right minima of what is left after removing the first i-1.
    """
    return _peel(p, lambda v, cur: v < cur)


def left_to_right_maxima_decomposition(p: Permutation) -> list[PartialPermutation]:
    return _peel(p, lambda v, cur: v > cur)


def reverse_patience_word(r: PileConfig) -> Permutation:
    """Read the piles bottom to top, left to right."""
    return Permutation(tuple(c for pile in r.piles for c in pile.cards))


def reverse(p: Permutation) -> Permutation:
    return Permutation(p.word[::-1])


def complement(p: Permutation) -> Permutation:
    n = len(p)
    return Permutation(tuple(n + 1 - v for v in p.word))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for pos, v in enumerate(p.word, start=1):
        inv[v - 1] = pos
    return Permutation(tuple(inv))


def shape_of(r: PileConfig) -> Shape:
    return Shape(tuple(len(pile) for pile in r.piles))
