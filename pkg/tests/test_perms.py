import random

import pytest
from hypothesis import given, strategies as st

from conftest import sym
from patience_sorting import (
    PartialPermutation, Permutation, PileConfig, Shape, complement, inverse,
    left_to_right_maxima_decomposition, left_to_right_minima_decomposition,
    patience_sort, reverse, reverse_patience_word, shape_of,
)

perms = st.integers(0, 30).flatmap(lambda n: st.permutations(range(1, n + 1))).map(
    lambda w: Permutation(tuple(w)))


def values(decomp):
    return [s.values for s in decomp]


def test_parse_both_forms():
    assert Permutation.parse("64518723") == Permutation.parse("6,4,5,1,8,7,2,3")
    assert str(Permutation.parse("64518723")) == "6,4,5,1,8,7,2,3"
    assert Permutation.parse("10,9,8,7,6,5,4,3,2,1") == reverse(Permutation.identity(10))


@pytest.mark.parametrize("bad", ["112", "0", "13", "1,1", "a"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Permutation.parse(bad)


def test_empty_permutation():
    e = Permutation.parse("")
    assert len(e) == 0
    assert left_to_right_minima_decomposition(e) == []
    assert patience_sort(e).piles == ()
    assert inverse(e) == e


def test_minima_decomposition_examples():
    assert values(left_to_right_minima_decomposition(Permutation.parse("64518723"))) == [
        (6, 4, 1), (5, 2), (8, 7, 3)]
    assert values(left_to_right_minima_decomposition(Permutation.parse("123"))) == [(1,), (2,), (3,)]
    assert values(left_to_right_minima_decomposition(Permutation.parse("321"))) == [(3, 2, 1)]


def test_maxima_decomposition_examples():
    assert values(left_to_right_maxima_decomposition(Permutation.parse("321"))) == [(3,), (2,), (1,)]
    assert values(left_to_right_maxima_decomposition(Permutation.parse("123"))) == [(1, 2, 3)]


def test_maxima_decomposition_by_hand():
    # peel left-to-right maxima of 64518723: 6,8 ; then 4,5,7 ; then 1,2,3
    got = values(left_to_right_maxima_decomposition(Permutation.parse("64518723")))
    assert got == [(6, 8), (4, 5, 7), (1, 2, 3)]


@given(perms)
def test_decompositions_partition_the_plot(p):
    for decomp, sign in ((left_to_right_minima_decomposition(p), -1),
                         (left_to_right_maxima_decomposition(p), 1)):
        pairs = sorted((i, v) for s in decomp for i, v in zip(s.positions, s.values))
        assert pairs == [(i, v) for i, v in enumerate(p.word, start=1)]
        for s in decomp:
            assert all(sign * (b - a) > 0 for a, b in zip(s.values, s.values[1:]))


def test_partial_permutation_keeps_positions():
    s = left_to_right_minima_decomposition(Permutation.parse("64518723"))[1]
    assert isinstance(s, PartialPermutation)
    assert s.positions == (3, 7) and s.values == (5, 2)


@pytest.mark.parametrize("n", range(0, 9))
def test_piles_are_minima_subsequences(n):
    for p in sym(n):
        assert [q.cards for q in patience_sort(p).piles] == values(left_to_right_minima_decomposition(p))


def test_piles_are_minima_subsequences_sampled():
    rng = random.Random(7)
    for _ in range(300):
        w = list(range(1, 81))
        rng.shuffle(w)
        p = Permutation(tuple(w))
        assert [q.cards for q in patience_sort(p).piles] == values(left_to_right_minima_decomposition(p))


def test_reverse_patience_word_examples():
    assert reverse_patience_word(PileConfig.of([(6, 4, 1), (5, 2), (8, 7, 3)])).compact() == "64152873"
    assert reverse_patience_word(PileConfig.of([(4, 2, 1), (7, 3), (8, 6, 5)])).compact() == "42173865"
    assert reverse_patience_word(PileConfig.of([(5, 4, 3, 2, 1)])).compact() == "54321"


def test_reverse_patience_word_injective_on_valid_configs():
    configs = {patience_sort(p) for p in sym(7)}
    words = {reverse_patience_word(r) for r in configs}
    assert len(words) == len(configs)
    assert all(r.is_valid() for r in configs)


def test_symmetry_examples():
    assert reverse(Permutation.parse("123")).compact() == "321"
    assert inverse(Permutation.parse("3142")).compact() == "2413"
    assert complement(Permutation.parse("64518723")).compact() == "35481276"


@given(perms)
def test_symmetries_are_involutions(p):
    assert inverse(inverse(p)) == p
    assert reverse(reverse(p)) == p
    assert complement(complement(p)) == p
    rc = reverse(complement(p))
    assert reverse(complement(rc)) == p


def test_shape_examples():
    assert shape_of(patience_sort(Permutation.parse("64518723"))).parts == (3, 2, 3)
    assert shape_of(patience_sort(Permutation.identity(5))).parts == (1,) * 5
    assert shape_of(PileConfig.of([(4, 3, 2, 1)])).parts == (4,)


@given(perms)
def test_shape_sums_to_n(p):
    assert shape_of(patience_sort(p)).n == len(p)


def test_invalid_values_rejected():
    with pytest.raises(ValueError):
        Shape((2, 0))
    with pytest.raises(ValueError):
        PileConfig.of([(1, 2)])  # a pile must decrease bottom to top
    with pytest.raises(ValueError):
        PileConfig.of([(3, 1)])
