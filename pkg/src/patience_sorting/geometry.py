"""
Southwest shadow diagrams.

Plot ``(i, p(i))`` for a permutation ``p``. The first shadowline runs along
the boundary of the union of southwest quarter planes of the points that have
no other point weakly southwest of them; peel those points off and repeat.
Iterating on the southwest corners (salient points) of each line gives the
exhaustive sequence of shadow diagrams. Unlike the northeast diagrams used
for RSK, these lines may cross.

Coordinates are exact: lattice points are ints, crossing points are
``Fraction`` pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .perms import Permutation, PileConfig
from .patience import StablePair

__all__ = [
    "LatticePoint", "Shadowline", "ShadowDiagram", "Crossing",
    "MalformedDiagram", "UnknownFormat",
    "shadow_contains", "shadow_diagram", "salient_points", "iterate",
    "exhaustive_iterates", "crossings", "piles_from_diagram", "render",
    "diagram_to_dict",
]


class MalformedDiagram(ValueError):
    pass


class UnknownFormat(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LatticePoint:
    x: int
    y: int

    def __post_init__(self):
        if self.x < 1 or self.y < 1:
            raise ValueError(f"lattice points need positive coordinates: {self}")

    def __iter__(self):
        return iter((self.x, self.y))


@dataclass(frozen=True)
class Shadowline:
    anchors: tuple[LatticePoint, ...]

    def __post_init__(self):
        a = tuple(sorted(self.anchors))
        object.__setattr__(self, "anchors", a)
        if not a:
            raise ValueError("a shadowline needs at least one anchor")
        for p, q in zip(a, a[1:]):
            if not (p.x < q.x and p.y > q.y):
                raise ValueError("shadowline anchors must form a southeast staircase")

    @property
    def vertices(self) -> tuple[tuple[int, int], ...]:
        """
        Polyline from the y-axis to the x-axis, alternating horizontal and
        vertical runs and turning at the anchors and salient corners.
        """
        a = self.anchors
        out = [(0, a[0].y)]
        for p, q in zip(a, a[1:]):
            out += [(p.x, p.y), (p.x, q.y)]
        out += [(a[-1].x, a[-1].y), (a[-1].x, 0)]
        return tuple(out)

    def segments(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        v = self.vertices
        return list(zip(v, v[1:]))


@dataclass(frozen=True)
class ShadowDiagram:
    lines: tuple[Shadowline, ...]
    iterate: int = 0

    def __len__(self) -> int:
        return len(self.lines)

    @property
    def anchor_count(self) -> int:
        return sum(len(line.anchors) for line in self.lines)


@dataclass(frozen=True, order=True)
class Crossing:
    point: tuple[Fraction, Fraction]
    line_a: int  # 1-based, line_a < line_b
    line_b: int


def shadow_contains(corner: LatticePoint, q: LatticePoint) -> bool:
    return q.x <= corner.x and q.y <= corner.y


def _minimal(points: Iterable[LatticePoint]) -> list[LatticePoint]:
    """Points with no other point weakly southwest of them."""
    pts = sorted(points)
    out, low = [], None
    for p in pts:  # x ascending; p is minimal iff its y beats every earlier y
        if low is None or p.y < low:
            out.append(p)
            low = p.y
    return out


def _peel(points: Iterable[LatticePoint]) -> list[Shadowline]:
    rest = set(points)
    lines = []
    while rest:
        layer = _minimal(rest)
        lines.append(Shadowline(tuple(layer)))
        rest.difference_update(layer)
    return lines


def shadow_diagram(p: Permutation) -> ShadowDiagram:
    """The 0-th iterate: shadowlines peeled from the plot of ``p``."""
    pts = [LatticePoint(i, v) for i, v in enumerate(p.word, start=1)]
    return ShadowDiagram(tuple(_peel(pts)), 0)


def salient_points(line: Shadowline) -> tuple[LatticePoint, ...]:
    """Southwest corners: x of each anchor paired with y of the next one."""
    a = line.anchors
    return tuple(LatticePoint(p.x, q.y) for p, q in zip(a, a[1:]))


def iterate(d: ShadowDiagram) -> ShadowDiagram:
    """
    Next iterate. New lines may only join salient points of the same old
    line, so each old line's corners are peeled separately, in line order.
    """
    lines: list[Shadowline] = []
    for line in d.lines:
        corners = salient_points(line)
        if corners:
            lines.extend(_peel(corners))
    return ShadowDiagram(tuple(lines), d.iterate + 1)


def exhaustive_iterates(p: Permutation) -> list[ShadowDiagram]:
    """All nonempty iterates D0, D1, ... of ``p``."""
    out = []
    d = shadow_diagram(p)
    while d.lines:
        out.append(d)
        d = iterate(d)
    return out


def _seg_intersection(s, t) -> list[tuple[Fraction, Fraction]]:
    """Shared points of two axis-parallel segments; both ends of any overlap."""
    (x1, y1), (x2, y2) = s
    (u1, v1), (u2, v2) = t
    ax0, ax1 = sorted((x1, x2))
    ay0, ay1 = sorted((y1, y2))
    bx0, bx1 = sorted((u1, u2))
    by0, by1 = sorted((v1, v2))
    lox, hix = max(ax0, bx0), min(ax1, bx1)
    loy, hiy = max(ay0, by0), min(ay1, by1)
    if lox > hix or loy > hiy:
        return []
    return sorted({(Fraction(lox), Fraction(loy)), (Fraction(hix), Fraction(hiy))})


def crossings(d: ShadowDiagram) -> list[Crossing]:
    """Every point shared by two distinct shadowlines, deduplicated and sorted."""
    found: set[Crossing] = set()
    segs = [line.segments() for line in d.lines]
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            for s in segs[i]:
                for t in segs[j]:
                    for pt in _seg_intersection(s, t):
                        found.add(Crossing(pt, i + 1, j + 1))
    return sorted(found)


def piles_from_diagram(d: ShadowDiagram) -> StablePair:
    """
    Read (R, S) off a 0-th iterate: line i's ordinates, largest first, give
    insertion pile i and its abscissae give recording pile i.
    """
    if d.iterate != 0:
        raise MalformedDiagram("piles can only be read from the 0-th iterate")
    xs = sorted(a.x for line in d.lines for a in line.anchors)
    ys = sorted(a.y for line in d.lines for a in line.anchors)
    n = len(xs)
    if xs != list(range(1, n + 1)) or ys != xs:
        raise MalformedDiagram("anchors are not the plot of a permutation")
    word = [0] * n
    for line in d.lines:
        for a in line.anchors:
            word[a.x - 1] = a.y
    if shadow_diagram(Permutation(tuple(word))).lines != d.lines:
        raise MalformedDiagram("lines are not the peeling of their own anchors")
    ins = [tuple(a.y for a in line.anchors) for line in d.lines]
    # bottom-to-top storage puts the latest arrival at the bottom
    rec = [tuple(a.x for a in reversed(line.anchors)) for line in d.lines]
    return StablePair(PileConfig.of(ins), PileConfig.of(rec))


def _frac_pair(f: Fraction) -> list[int]:
    return [f.numerator, f.denominator]


def diagram_to_dict(d: ShadowDiagram) -> dict:
    return {
        "iterate": d.iterate,
        "lines": [
            {
                "anchors": [[a.x, a.y] for a in line.anchors],
                "vertices": [list(v) for v in line.vertices],
                "salient": [[s.x, s.y] for s in salient_points(line)],
            }
            for line in d.lines
        ],
        "crossings": [
            {"at": _frac_pair(c.point[0]) + _frac_pair(c.point[1]),
             "lines": [c.line_a, c.line_b]}
            for c in crossings(d)
        ],
    }


def diagram_from_dict(data: dict) -> ShadowDiagram:
    lines = tuple(Shadowline(tuple(LatticePoint(x, y) for x, y in ln["anchors"]))
                  for ln in data["lines"])
    return ShadowDiagram(lines, data.get("iterate", 0))


_SCALE = 40


def _svg(diagrams: Sequence[ShadowDiagram]) -> str:
    extent = 1
    for d in diagrams:
        for line in d.lines:
            for a in line.anchors:
                extent = max(extent, a.x, a.y)
    size = (extent + 1) * _SCALE

    def sx(x) -> str:
        return f"{float(x) * _SCALE + _SCALE / 2:g}"

    def sy(y) -> str:
        return f"{size - float(y) * _SCALE - _SCALE / 2:g}"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
           f'height="{size * len(diagrams) if diagrams else size}">']
    for k, d in enumerate(diagrams):
        out.append(f'<g class="iterate" data-iterate="{d.iterate}" '
                   f'transform="translate(0,{k * size})">')
        out.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(extent + 0.5)}" y2="{sy(0)}" stroke="gray"/>')
        out.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(extent + 0.5)}" stroke="gray"/>')
        for line in d.lines:
            pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in line.vertices)
            out.append(f'<polyline points="{pts}" fill="none" stroke="black"/>')
        for line in d.lines:
            for a in line.anchors:
                out.append(f'<circle cx="{sx(a.x)}" cy="{sy(a.y)}" r="5" fill="black"/>')
            for s in salient_points(line):
                out.append(f'<circle cx="{sx(s.x)}" cy="{sy(s.y)}" r="7" fill="none" stroke="black"/>')
        for c in crossings(d):
            x, y = c.point
            out.append(f'<path d="M{sx(x - Fraction(1, 8))},{sy(y - Fraction(1, 8))} '
                       f'L{sx(x + Fraction(1, 8))},{sy(y + Fraction(1, 8))} '
                       f'M{sx(x - Fraction(1, 8))},{sy(y + Fraction(1, 8))} '
                       f'L{sx(x + Fraction(1, 8))},{sy(y - Fraction(1, 8))}" '
                       f'stroke="red" class="crossing"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(d: ShadowDiagram | Sequence[ShadowDiagram], format: str = "json") -> str:
    """Render one diagram or a sequence of iterates as JSON or SVG."""
    single = isinstance(d, ShadowDiagram)
    diagrams = [d] if single else list(d)
    if format == "json":
        payload = diagram_to_dict(d) if single else [diagram_to_dict(x) for x in diagrams]
        return json.dumps(payload)
    if format == "svg":
        return _svg(diagrams)
    raise UnknownFormat(f"unknown format {format!r}; expected 'svg' or 'json'")
