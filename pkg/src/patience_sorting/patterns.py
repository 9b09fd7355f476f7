"""
Generalized and barred permutation patterns.

Pattern text: dash-separated blocks of digits, with ``!`` in front of a
barred digit. Letters inside one block must sit at consecutive positions of
the host; a dash allows a gap. At most one letter may be barred, and it must
be a block of its own, e.g. ``3-!1-42``, ``31-!4-2``, ``!2-41-3``.

A permutation avoids a barred pattern when every occurrence of the pattern
with the barred letter deleted (the *core*) extends to an occurrence of the
full pattern, the barred letter being played by some extra host entry.
Deleting the barred block leaves the surrounding dashes as dashes, so the
core of ``3-!1-42`` is ``3-42`` (standardized: ``2-31``).

>>> p = Permutation.parse("64152873")
>>> avoids(p, parse_pattern("3-!1-42"))
True
>>> [o.positions for o in occurrences(Permutation.parse("45312"), parse_pattern("23-1"))]
[(1, 2, 3), (1, 2, 4), (1, 2, 5)]
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .perms import Permutation, PileConfig, Shape
from .patience import OracleBoundExceeded, StablePair, patience_sort

__all__ = [
    "GenPattern", "Occurrence", "ParseError", "UnsupportedBar", "BarredNotAllowed",
    "parse_pattern", "occurrences", "contains", "avoids", "avoidance_set",
    "count_avoiders", "iter_avoiders", "layered_pattern", "is_layered",
    "is_strongly_monotone", "rows_monotone", "STANDARD_PATTERNS",
    "MATERIALIZE_BOUND",
]

# avoidance_set refuses to build lists above this n; count_avoiders has no limit
MATERIALIZE_BOUND = 10


class ParseError(ValueError):
    pass


class UnsupportedBar(ParseError):
    pass


class BarredNotAllowed(ValueError):
    pass


@dataclass(frozen=True)
class GenPattern:
    """
    ``letters`` is the underlying permutation of 1..m, ``adjacent[i]`` says
    whether letters i and i+1 lie in the same block, and ``barred`` is the
    0-based index of the barred letter, if any.
    """

    letters: tuple[int, ...]
    adjacent: tuple[bool, ...]
    barred: Optional[int] = None

    def __post_init__(self):
        m = len(self.letters)
        if sorted(self.letters) != list(range(1, m + 1)):
            raise ParseError(f"pattern letters must be a permutation of 1..{m}")
        if len(self.adjacent) != max(m - 1, 0):
            raise ParseError("adjacency flags do not match the pattern length")
        b = self.barred
        if b is not None:
            if not 0 <= b < m:
                raise ParseError("barred index out of range")
            if (b > 0 and self.adjacent[b - 1]) or (b < m - 1 and self.adjacent[b]):
                raise UnsupportedBar("a barred letter must form its own block")

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks as tuples of 0-based pattern indices."""
        out, cur = [], [0] if self.letters else []
        for i, adj in enumerate(self.adjacent, start=1):
            if adj:
                cur.append(i)
            else:
                out.append(tuple(cur))
                cur = [i]
        if cur:
            out.append(tuple(cur))
        return tuple(out)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        parts = []
        for block in self.blocks:
            parts.append("".join(("!" if i == self.barred else "") + str(self.letters[i])
                                 for i in block))
        return "-".join(parts)

    def strip(self) -> GenPattern:
        """The same pattern with the bar removed and the letter kept."""
        return GenPattern(self.letters, self.adjacent)

    def core(self) -> GenPattern:
        """The pattern with the barred letter deleted and the rest re-ranked."""
        b = self.barred
        if b is None:
            return self
        rest = self.letters[:b] + self.letters[b + 1:]
        rank = {v: i for i, v in enumerate(sorted(rest), start=1)}
        if b == 0:
            adj = self.adjacent[1:]
        elif b == len(self.letters) - 1:
            adj = self.adjacent[:-1]
        else:
            adj = self.adjacent[:b - 1] + (False,) + self.adjacent[b + 1:]
        return GenPattern(tuple(rank[v] for v in rest), adj)

    def prefix_closed(self) -> bool:
        """
        Whether containment can be decided on prefixes: true unless the
        barred letter is last, in which case an extension may arrive later.
        """
        return self.barred is None or self.barred < len(self.letters) - 1


@dataclass(frozen=True)
class Occurrence:
    positions: tuple[int, ...]  # 1-based host positions


_TOKEN = re.compile(r"!?[0-9]")


def parse_pattern(text: str) -> GenPattern:
    text = text.strip()
    if not text:
        raise ParseError("empty pattern")
    letters: list[int] = []
    adjacent: list[bool] = []
    barred: list[int] = []
    for bi, block in enumerate(text.split("-")):
        tokens = _TOKEN.findall(block)
        if not block or "".join(tokens) != block:
            raise ParseError(f"malformed block {block!r} in {text!r}")
        for ti, tok in enumerate(tokens):
            if letters:
                adjacent.append(ti > 0)
            if tok.startswith("!"):
                if len(tokens) > 1:
                    raise UnsupportedBar(
                        f"barred letter in {block!r} is not its own block")
                barred.append(len(letters))
            letters.append(int(tok[-1]))
    if len(barred) > 1:
        raise UnsupportedBar("at most one barred letter is supported")
    if sorted(letters) != list(range(1, len(letters) + 1)):
        raise ParseError(f"letters of {text!r} are not a permutation of 1..{len(letters)}")
    return GenPattern(tuple(letters), tuple(adjacent), barred[0] if barred else None)


def _neighbours(letters: Sequence[int]) -> list[tuple[Optional[int], Optional[int]]]:
    """
    For matching right to left: for each index t, the later index (> t) holding
    the largest letter below letters[t] and the one holding the smallest above.
    """
    m = len(letters)
    out = []
    for t in range(m):
        lo = hi = None
        for s in range(t + 1, m):
            if letters[s] < letters[t] and (lo is None or letters[s] > letters[lo]):
                lo = s
            if letters[s] > letters[t] and (hi is None or letters[s] < letters[hi]):
                hi = s
        out.append((lo, hi))
    return out


def _search(word: Sequence[int], letters: Sequence[int], adjacent: Sequence[bool],
            end: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """
    Yield 0-based position tuples of occurrences, matching from the last
    pattern letter leftwards. With ``end`` set, the last letter is pinned there.
    """
    m = len(letters)
    n = len(word)
    if m == 0:
        yield ()
        return
    nb = _neighbours(letters)
    pos = [0] * m

    def fits(t: int, v: int) -> bool:
        lo, hi = nb[t]
        return ((lo is None or word[pos[lo]] < v)
                and (hi is None or word[pos[hi]] > v))

    def rec(t: int):
        if t < 0:
            yield tuple(pos)
            return
        right = pos[t + 1]
        if adjacent[t]:
            cands = (right - 1,) if right >= 1 else ()
        else:
            cands = range(right - 1, t - 1, -1)
        for q in cands:
            if fits(t, word[q]):
                pos[t] = q
                yield from rec(t - 1)

    lasts = range(m - 1, n) if end is None else ((end,) if end >= m - 1 else ())
    for q in lasts:
        pos[m - 1] = q
        yield from rec(m - 2)


def _extension_window(pat: GenPattern, core_pos: Sequence[int], n: int) -> range:
    b = pat.barred
    lo = core_pos[b - 1] + 1 if b > 0 else 0
    hi = core_pos[b] if b < len(core_pos) else n
    return range(lo, hi)


def _value_bounds(pat: GenPattern, word: Sequence[int], core_pos: Sequence[int]):
    """Host values that the barred letter must lie strictly between."""
    b = pat.barred
    lb = pat.letters[b]
    lo, hi = 0, float("inf")
    others = [i for i in range(len(pat.letters)) if i != b]
    for ci, i in enumerate(others):
        v = word[core_pos[ci]]
        if pat.letters[i] < lb:
            lo = max(lo, v)
        else:
            hi = min(hi, v)
    return lo, hi


def _extends(pat: GenPattern, word: Sequence[int], core_pos: Sequence[int]) -> bool:
    lo, hi = _value_bounds(pat, word, core_pos)
    return any(lo < word[x] < hi for x in _extension_window(pat, core_pos, len(word)))


def _bad_occurrences(word: Sequence[int], pat: GenPattern,
                     end: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    if pat.barred is None:
        yield from _search(word, pat.letters, pat.adjacent, end)
        return
    core = pat.core()
    for cp in _search(word, core.letters, core.adjacent, end):
        if not _extends(pat, word, cp):
            yield cp


def occurrences(p: Permutation, pat: GenPattern) -> list[Occurrence]:
    """All occurrences of an unbarred pattern, in lexicographic position order."""
    if pat.barred is not None:
        raise BarredNotAllowed("occurrences() takes unbarred patterns; use avoids()")
    found = sorted(_search(p.word, pat.letters, pat.adjacent))
    return [Occurrence(tuple(q + 1 for q in o)) for o in found]


def contains(p: Permutation, pat: GenPattern) -> bool:
    return next(_bad_occurrences(p.word, pat), None) is not None


def avoids(p: Permutation, pat: GenPattern) -> bool:
    return not contains(p, pat)


def _as_patterns(pats: Iterable[GenPattern | str]) -> list[GenPattern]:
    return [parse_pattern(q) if isinstance(q, str) else q for q in pats]


def iter_avoiders(n: int, pats: Iterable[GenPattern | str],
                  prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    """
    Stream the words of S_n avoiding every pattern, in no particular order.

    Permutations are grown one entry at a time by appending a new last entry
    of every relative rank. Patterns whose containment is decided on prefixes
    prune the tree as soon as an occurrence ending at the new entry appears;
    the rest are checked on complete words.

    ``prefix`` restricts the stream to words whose first entries are
    order-isomorphic to it (a standardized word); this is how sweeps are
    sharded.
    """
    pats = _as_patterns(pats)
    early = [q for q in pats if q.prefix_closed()]
    late = [q for q in pats if not q.prefix_closed()]
    if n == 0:
        if all(next(_bad_occurrences((), q), None) is None for q in pats):
            yield ()
        return

    def grow(word: tuple[int, ...]):
        t = len(word)
        for r in range(1, t + 2):
            child = tuple(v + (v >= r) for v in word) + (r,)
            if any(next(_bad_occurrences(child, q, end=t), None) is not None for q in early):
                continue
            if t + 1 == n:
                if all(next(_bad_occurrences(child, q), None) is None for q in late):
                    yield child
            else:
                yield from grow(child)

    if len(prefix) > n:
        return
    prefix = tuple(prefix)
    for t in range(len(prefix)):
        head = prefix[: t + 1]
        if any(next(_bad_occurrences(head, q, end=t), None) is not None for q in early):
            return
    if len(prefix) == n:
        if all(next(_bad_occurrences(prefix, q), None) is None for q in late):
            yield prefix
        return
    yield from grow(prefix)


def count_avoiders(n: int, pats: Iterable[GenPattern | str]) -> int:
    return sum(1 for _ in iter_avoiders(n, pats))


def avoidance_set(n: int, pats: Iterable[GenPattern | str],
                  bound: int = MATERIALIZE_BOUND) -> list[Permutation]:
    """All of S_n avoiding every pattern, in lexicographic order."""
    if n > bound:
        raise OracleBoundExceeded(f"n = {n} exceeds the materialization bound {bound}")
    return [Permutation(w) for w in sorted(iter_avoiders(n, pats))]


def avoidance_set_naive(n: int, pats: Iterable[GenPattern | str]) -> list[Permutation]:
    """Filter all of S_n with :func:`avoids`; the slow cross-check for :func:`avoidance_set`."""
    pats = _as_patterns(pats)
    out = []
    for w in itertools.permutations(range(1, n + 1)):
        p = Permutation(w)
        if all(avoids(p, q) for q in pats):
            out.append(p)
    return out


def layered_pattern(s: Shape | Sequence[int]) -> Permutation:
    """
    >>> layered_pattern((3, 2, 3)).compact()
    '32154876'
    """
    parts = s.parts if isinstance(s, Shape) else tuple(s)
    word, base = [], 0
    for k in parts:
        word.extend(range(base + k, base, -1))
        base += k
    return Permutation(tuple(word))


def is_layered(p: Permutation) -> bool:
    w, i = p.word, 0
    while i < len(w):
        top = w[i]  # a layer starting at i must run top, top-1, ..., i+1
        if top <= i or w[i:top] != tuple(range(top, i, -1)):
            return False
        i = top
    return True


def is_strongly_monotone(r: PileConfig) -> bool:
    """
    Whether the piles, viewed as blocks of a set partition, can be ordered so
    that block minima and block maxima increase together.
    """
    blocks = sorted((min(p.cards), max(p.cards)) for p in r.piles)
    return all(a[1] < b[1] for a, b in zip(blocks, blocks[1:]))


def _rows_increase(r: PileConfig) -> bool:
    depth = max((len(p) for p in r.piles), default=0)
    for d in range(depth):
        row = [p.cards[d] for p in r.piles if len(p) > d]
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    return True


def rows_monotone(pair: StablePair) -> bool:
    """Rows (equal depth from the pile bottoms) increase left to right in both R and S."""
    return _rows_increase(pair.insertion) and _rows_increase(pair.recording)


STANDARD_PATTERNS = {
    text: parse_pattern(text)
    for text in ("3-!1-42", "3-!1-24", "3-!1-4-2", "23-1", "31-!4-2", "3-1-!4-2",
                 "3-12", "!2-41-3", "!2-4-1-3", "2-4-1-!3", "2-41-!3", "31-2")
}


def reverse_patience_word_is_fixed(p: Permutation) -> bool:
    from .perms import reverse_patience_word
    return reverse_patience_word(patience_sort(p)) == p
