import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import sym
from patience_sorting import (
    Crossing, LatticePoint, MalformedDiagram, Permutation, ShadowDiagram,
    Shadowline, UnknownFormat, crossings, exhaustive_iterates,
    extended_patience_sort, is_strongly_monotone, iterate, patience_sort,
    piles_from_diagram, render, salient_points, shadow_contains,
    shadow_diagram,
)
from patience_sorting.geometry import diagram_from_dict, diagram_to_dict

EXAMPLE = Permutation.parse("64518723")
perms = st.integers(1, 12).flatmap(lambda n: st.permutations(range(1, n + 1))).map(
    lambda w: Permutation(tuple(w)))


def anchors(d):
    return [[tuple(a) for a in line.anchors] for line in d.lines]


def test_shadow_contains():
    assert shadow_contains(LatticePoint(3, 3), LatticePoint(1, 2))
    assert shadow_contains(LatticePoint(3, 3), LatticePoint(3, 3))
    assert not shadow_contains(LatticePoint(1, 6), LatticePoint(2, 4))
    with pytest.raises(ValueError):
        LatticePoint(0, 1)


def test_shadow_diagram_examples():
    assert anchors(shadow_diagram(EXAMPLE)) == [
        [(1, 6), (2, 4), (4, 1)], [(3, 5), (7, 2)], [(5, 8), (6, 7), (8, 3)]]
    assert anchors(shadow_diagram(Permutation.identity(3))) == [[(1, 1)], [(2, 2)], [(3, 3)]]
    assert anchors(shadow_diagram(Permutation.parse("45312"))) == [
        [(1, 4), (3, 3), (4, 1)], [(2, 5), (5, 2)]]


@given(perms)
def test_peeling_matches_oracle(p):
    pts = [(i, v) for i, v in enumerate(p.word, start=1)]
    assert anchors(shadow_diagram(p)) == oracles.peel_minima(pts)


def test_shadowline_polyline():
    line = Shadowline((LatticePoint(1, 6), LatticePoint(2, 4), LatticePoint(4, 1)))
    assert line.vertices == ((0, 6), (1, 6), (1, 4), (2, 4), (2, 1), (4, 1), (4, 0))
    with pytest.raises(ValueError):
        Shadowline((LatticePoint(1, 1), LatticePoint(2, 2)))
    with pytest.raises(ValueError):
        Shadowline(())


def test_salient_points_figure():
    d = shadow_diagram(EXAMPLE)
    got = [[tuple(s) for s in salient_points(line)] for line in d.lines]
    assert got == [[(1, 4), (2, 1)], [(3, 2)], [(5, 7), (6, 3)]]
    assert salient_points(Shadowline((LatticePoint(2, 2),))) == ()


def test_iterates_figure():
    its = exhaustive_iterates(EXAMPLE)
    assert len(its) == 3
    assert anchors(its[1]) == [[(1, 4), (2, 1)], [(3, 2)], [(5, 7), (6, 3)]]
    assert anchors(its[2]) == [[(1, 1)], [(5, 3)]]
    assert [d.iterate for d in its] == [0, 1, 2]
    assert iterate(its[2]).lines == ()


def test_iterate_counts():
    assert len(exhaustive_iterates(Permutation.identity(6))) == 1
    for n in range(1, 8):
        assert len(exhaustive_iterates(Permutation(tuple(range(n, 0, -1))))) == n
    assert exhaustive_iterates(Permutation(())) == []


def test_crossing_examples():
    d1 = exhaustive_iterates(EXAMPLE)[1]
    assert Crossing((Fraction(1), Fraction(2)), 1, 2) in crossings(d1)
    assert crossings(shadow_diagram(Permutation.identity(5))) == []
    pts = [c.point for c in crossings(shadow_diagram(Permutation.parse("45312")))]
    assert pts == [(2, 3), (3, 2)]


def test_crossings_match_point_oracle():
    for n in range(1, 7):
        for p in sym(n):
            for d in exhaustive_iterates(p):
                found = crossings(d)
                for i in range(len(d.lines)):
                    for j in range(i + 1, len(d.lines)):
                        a = oracles.polyline_points(d.lines[i].vertices)
                        b = oracles.polyline_points(d.lines[j].vertices)
                        pair = [c for c in found if (c.line_a, c.line_b) == (i + 1, j + 1)]
                        assert bool(pair) == bool(a & b), (p, d.iterate, i, j)
                        assert all(c.point in a and c.point in b for c in pair)


@pytest.mark.parametrize("n", range(0, 9))
def test_piles_from_diagram(n):
    for p in sym(n):
        assert piles_from_diagram(shadow_diagram(p)) == extended_patience_sort(p)


def test_piles_from_diagram_examples_and_errors():
    pair = piles_from_diagram(shadow_diagram(EXAMPLE))
    assert pair.recording_arrivals() == ((1, 2, 4), (3, 7), (5, 6, 8))
    ident = piles_from_diagram(shadow_diagram(Permutation.identity(3)))
    assert ident.insertion.as_tuples() == ((1,), (2,), (3,))
    with pytest.raises(MalformedDiagram):
        piles_from_diagram(exhaustive_iterates(EXAMPLE)[1])
    swapped = ShadowDiagram(tuple(reversed(shadow_diagram(EXAMPLE).lines)))
    with pytest.raises(MalformedDiagram):
        piles_from_diagram(swapped)
    gap = ShadowDiagram((Shadowline((LatticePoint(1, 1),)), Shadowline((LatticePoint(3, 3),))))
    with pytest.raises(MalformedDiagram):
        piles_from_diagram(gap)


@given(perms)
def test_anchor_conservation(p):
    its = exhaustive_iterates(p)
    assert its[0].anchor_count == len(p)
    for d, nxt in zip(its, its[1:]):
        assert nxt.anchor_count == d.anchor_count - len(d)


def test_render_json_round_trip():
    d = shadow_diagram(EXAMPLE)
    data = json.loads(render(d, "json"))
    assert diagram_from_dict(data) == d
    assert data == diagram_to_dict(d)
    assert data["lines"][0]["salient"] == [[1, 4], [2, 1]]
    empty = json.loads(render(ShadowDiagram((), 3), "json"))
    assert empty == {"iterate": 3, "lines": [], "crossings": []}
    one = json.loads(render(exhaustive_iterates(EXAMPLE)[1], "json"))
    assert {"at": [1, 1, 2, 1], "lines": [1, 2]} in one["crossings"]


def test_render_svg():
    d1 = exhaustive_iterates(EXAMPLE)[1]
    svg = render(d1, "svg")
    assert svg.count("<polyline") == 3
    assert svg.count('fill="black"/>') == d1.anchor_count
    assert svg.count('r="7"') == 2  # corners (1,1) and (5,3)
    assert render(d1, "svg") == svg
    allsvg = render(exhaustive_iterates(EXAMPLE), "svg")
    assert allsvg.count('class="iterate"') == 3
    with pytest.raises(UnknownFormat):
        render(d1, "png")


@pytest.mark.parametrize("n", range(1, 8))
def test_crossing_free_iterates_force_strong_monotonicity(n):
    for p in sym(n):
        if all(not crossings(d) for d in exhaustive_iterates(p)):
            assert is_strongly_monotone(patience_sort(p))


def test_polygonal_crossing_witness():
    p = Permutation.parse("45312")
    assert is_strongly_monotone(patience_sort(p))
    assert len(crossings(shadow_diagram(p))) == 2
