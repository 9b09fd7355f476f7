"""
Mallows' patience sorting procedure, the gather step, and the extended
(insertion pile, recording pile) bijection with its inverse.

Values are distinct, so "the left-most pile whose top card is larger" never
needs a tie-break. Pile tops always increase from left to right, which is
what lets :func:`patience_sort` use binary search.

Recording piles are stored physically, bottom to top, like insertion piles:
each new index goes underneath, so a recording pile read bottom to top is
decreasing. ``StablePair.to_json`` lists recording piles top down instead
(the order in which the indices were recorded).
"""

from __future__ import annotations

import heapq
import itertools
import json
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator

from .perms import (
    Permutation, PileConfig, left_to_right_minima_decomposition,
    reverse_patience_word, shape_of,
)

__all__ = [
    "StablePair", "MalformedPair", "OracleBoundExceeded", "ORACLE_BOUND",
    "patience_sort", "gather", "extended_patience_sort", "invert_extended",
    "preimages", "preimages_naive", "has_unique_preimage", "ps_equivalent",
    "longest_increasing_subsequence_length",
]

# largest n for which the exhaustive oracles will run by default
ORACLE_BOUND = 10


class MalformedPair(ValueError):
    """The pair of pile configurations is not an output of the extended algorithm."""


class OracleBoundExceeded(ValueError):
    """An exhaustive oracle was asked to run above its configured bound."""


@dataclass(frozen=True)
class StablePair:
    insertion: PileConfig
    recording: PileConfig

    @property
    def n(self) -> int:
        return self.insertion.n

    def recording_arrivals(self) -> tuple[tuple[int, ...], ...]:
        """Recording piles with each pile's indices in increasing (top-down) order."""
        return tuple(p.cards[::-1] for p in self.recording.piles)

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "R": [list(p.cards) for p in self.insertion.piles],
            "S": [list(p) for p in self.recording_arrivals()],
        })

    @classmethod
    def from_json(cls, text: str) -> StablePair:
        """
        Inverse of :meth:`to_json`. Recording piles are accepted in either
        orientation since a recording pile is always monotone.
        """
        data = json.loads(text)
        try:
            insertion = PileConfig.of(data["R"])
            recording = PileConfig.of(sorted(p, reverse=True) for p in data["S"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedPair(f"bad stable pair JSON: {exc}") from exc
        if "n" in data and data["n"] != insertion.n:
            raise MalformedPair("declared n does not match the piles")
        return cls(insertion, recording)


def patience_sort(p: Permutation) -> PileConfig:
    """
    Deal the cards of ``p`` into piles: each card goes atop the left-most
    pile whose top card is larger, otherwise it starts a new pile on the right.

    >>> print(patience_sort(Permutation.parse("64518723")))
    6 4 1 | 5 2 | 8 7 3
    """
    tops: list[int] = []
    piles: list[list[int]] = []
    for c in p.word:
        j = bisect_left(tops, c)
        if j == len(tops):
            tops.append(c)
            piles.append([c])
        else:
            tops[j] = c
            piles[j].append(c)
    return PileConfig.of(piles)


def longest_increasing_subsequence_length(p: Permutation) -> int:
    return len(patience_sort(p))


def gather(r: PileConfig) -> list[int]:
    """Pick up the smallest visible top card until the piles are empty."""
    stacks = [list(pile.cards) for pile in r.piles]
    heap = [(s[-1], j) for j, s in enumerate(stacks)]
    heapq.heapify(heap)
    out = []
    while heap:
        c, j = heapq.heappop(heap)
        out.append(c)
        stacks[j].pop()
        if stacks[j]:
            heapq.heappush(heap, (stacks[j][-1], j))
    return out


def extended_patience_sort(p: Permutation) -> StablePair:
    """Patience sort while recording, under each pile, the time each card arrived."""
    tops: list[int] = []
    piles: list[list[int]] = []
    records: list[list[int]] = []  # top to bottom, i.e. arrival order
    for i, c in enumerate(p.word, start=1):
        j = bisect_left(tops, c)
        if j == len(tops):
            tops.append(c)
            piles.append([c])
            records.append([i])
        else:
            tops[j] = c
            piles[j].append(c)
            records[j].append(i)
    return StablePair(PileConfig.of(piles), PileConfig.of(r[::-1] for r in records))


def invert_extended(pair: StablePair) -> Permutation:
    """
    Replay the extended algorithm backwards: for i = n, ..., 1 the recording
    pile with i at its bottom identifies the pile whose top card was played
    at time i.

    Raises MalformedPair if the pair is not in the image of
    :func:`extended_patience_sort`.
    """
    ins = [list(p.cards) for p in pair.insertion.piles]
    rec = [list(p.cards) for p in pair.recording.piles]
    if shape_of(pair.insertion) != shape_of(pair.recording):
        raise MalformedPair("insertion and recording piles differ in shape")
    n = pair.n
    word = [0] * n
    for i in range(n, 0, -1):
        for j, r in enumerate(rec):
            if r and r[0] == i:
                break
        else:
            raise MalformedPair(f"no recording pile exposes index {i}")
        r.pop(0)
        if not ins[j]:
            raise MalformedPair(f"insertion pile {j + 1} emptied out of sync")
        word[i - 1] = ins[j].pop()
    p = Permutation(tuple(word))
    if extended_patience_sort(p) != pair:
        raise MalformedPair("pair is not stable: replaying it does not reproduce it")
    return p


def _iter_preimages(r: PileConfig) -> Iterator[tuple[int, ...]]:
    piles = [p.cards for p in r.piles]
    home = {c: j for j, cards in enumerate(piles) for c in cards}
    n = r.n
    nxt = [0] * len(piles)
    tops: list[int] = []
    word: list[int] = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        candidates = sorted(piles[j][nxt[j]] for j in range(len(piles))
                            if nxt[j] < len(piles[j]))
        for c in candidates:
            j = home[c]
            k = bisect_left(tops, c)
            if k != j:
                continue
            if k == len(tops):
                tops.append(c)
                old = None
            else:
                old, tops[k] = tops[k], c
            nxt[j] += 1
            word.append(c)
            yield from rec()
            word.pop()
            nxt[j] -= 1
            if old is None:
                tops.pop()
            else:
                tops[k] = old

    yield from rec()


def preimages(r: PileConfig, bound: int = ORACLE_BOUND) -> list[Permutation]:
    """
    All permutations that patience sort to ``r``, in lexicographic order.

    Built by interleaving the piles' cards and keeping only prefixes whose
    partial deal still sends every card to its own pile.
    """
    if r.n > bound:
        raise OracleBoundExceeded(f"n = {r.n} exceeds the oracle bound {bound}")
    return [Permutation(w) for w in _iter_preimages(r)]


def preimages_naive(r: PileConfig, bound: int = 8) -> list[Permutation]:
    """Same as :func:`preimages` by filtering all of S_n; a cross-check for small n."""
    if r.n > bound:
        raise OracleBoundExceeded(f"n = {r.n} exceeds the oracle bound {bound}")
    out = []
    for w in itertools.permutations(range(1, r.n + 1)):
        p = Permutation(w)
        if patience_sort(p) == r:
            out.append(p)
    return out


def has_unique_preimage(r: PileConfig) -> bool:
    """True iff the reverse patience word avoids both 3-!1-42 and 3-!1-24."""
    from .patterns import STANDARD_PATTERNS, avoids
    w = reverse_patience_word(r)
    return (avoids(w, STANDARD_PATTERNS["3-!1-42"])
            and avoids(w, STANDARD_PATTERNS["3-!1-24"]))


def ps_equivalent(p: Permutation, q: Permutation) -> bool:
    if len(p) != len(q):
        raise ValueError("permutations of different sizes")
    return patience_sort(p) == patience_sort(q)


def same_minima_subsequences(p: Permutation, q: Permutation) -> bool:
    """Whether p and q have identical left-to-right minima subsequences (values only)."""
    a = [s.values for s in left_to_right_minima_decomposition(p)]
    b = [s.values for s in left_to_right_minima_decomposition(q)]
    return a == b
