from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, strategies as st

from bzcalc.combinatorics import Composition, PermutationWord, Root, act_on_root, all_permutations
from bzcalc.config import BoundExceeded, Bounds
from bzcalc.cosets import (
    FilledRectangle, YoungSubdiagram, admissible_bruteforce, admissible_set,
    admissible_set_literal, admissible_widths, all_subdiagrams, column_readings,
    describe, descriptor_from_json, descriptor_to_json, double_coset,
    double_coset_reps_bruteforce, interval_decomposition, inverse_via_columns,
    levi_from_word, levi_partition, pivots, rect_word, same_double_coset,
    subdiagram_to_word, surviving_reps, tail_condition_bruteforce,
    tail_condition_literal, word_via_cycles,
)
from conftest import subdiagrams_st

W = PermutationWord


def words(ws):
    return sorted(w.word for w in ws)


# filled rectangle -----------------------------------------------------------

@pytest.mark.parametrize("n1,n2", [(1, 1), (3, 2), (4, 3), (2, 5)])
def test_filled_rectangle_corners(n1, n2):
    rect = FilledRectangle(n1, n2)
    n = n1 + n2
    rows = rect.rows()
    assert rows[-1] == list(range(n - 1, n - n1 - 1, -1))  # bottom row
    assert [row[0] for row in rows[::-1]] == list(range(n - 1, n - n2 - 1, -1))  # left column
    assert rows[0][-1] == 1  # top-right
    with pytest.raises(ValueError):
        rect.content(0, 1)


def test_subdiagram_validation():
    with pytest.raises(ValueError):
        YoungSubdiagram((1, 0), 2, 2)
    with pytest.raises(ValueError):
        YoungSubdiagram((3,), 2, 1)
    with pytest.raises(ValueError):
        YoungSubdiagram((0,), 2, 2)


def test_subdiagram_is_top_left():
    d = YoungSubdiagram((0, 1), 3, 2)
    assert d.row_lengths() == (3, 2)
    assert d.column_heights() == (2, 2, 1)
    # the top-left cell carries content n1
    assert d.column_contents(1) == [3, 4]
    assert column_readings(d) == [[3, 4], [2, 3], [1]]


# words ----------------------------------------------------------------------

def test_subdiagram_to_word_examples():
    assert subdiagram_to_word(YoungSubdiagram((3, 3), 3, 2)).is_identity()
    assert subdiagram_to_word(YoungSubdiagram((0,), 1, 1)).word == (2, 1)
    assert subdiagram_to_word(YoungSubdiagram((1,), 2, 1)).word == (1, 3, 2)


def test_inverse_examples():
    assert inverse_via_columns(YoungSubdiagram((2, 2), 2, 2)).is_identity()
    assert inverse_via_columns(YoungSubdiagram((0,), 1, 1)).word == (2, 1)


@pytest.mark.parametrize("n1,n2", [(n1, n2) for n1 in range(7) for n2 in range(7)])
def test_bijection_with_interlacings(n1, n2):
    ds = all_subdiagrams(n1, n2)
    assert len(ds) == math.comb(n1 + n2, n2)
    ws = {subdiagram_to_word(d).word for d in ds}
    assert len(ws) == len(ds)
    # each word is a shuffle of 1..n1 and n1+1..n
    for w in ws:
        assert [a for a in w if a <= n1] == list(range(1, n1 + 1))
        assert [a for a in w if a > n1] == list(range(n1 + 1, n1 + n2 + 1))


@given(subdiagrams_st())
def test_inverse_law(d):
    assert inverse_via_columns(d) * subdiagram_to_word(d) == W.identity(d.n)
    assert inverse_via_columns(d) == subdiagram_to_word(d).inverse()


@given(subdiagrams_st())
def test_cycle_product_matches_word(d):
    assert word_via_cycles(d) == subdiagram_to_word(d)


@given(subdiagrams_st())
def test_length_equals_box_count(d):
    assert subdiagram_to_word(d).length() == len(d.cells())


# brute force ----------------------------------------------------------------

def test_bruteforce_examples():
    assert words(double_coset_reps_bruteforce(Composition((3,)), Composition((3,)))) == [(1, 2, 3)]
    assert words(double_coset_reps_bruteforce(Composition((1, 1)), Composition((1, 1)))) == [
        (1, 2), (2, 1)]
    # (2,1) against (2,1): the identity and the word 132
    assert words(double_coset_reps_bruteforce(Composition((2, 1)), Composition((2, 1)))) == [
        (1, 2, 3), (1, 3, 2)]


def test_bruteforce_guards():
    with pytest.raises(ValueError):
        double_coset_reps_bruteforce(Composition((2,)), Composition((1, 2)))
    with pytest.raises(BoundExceeded):
        double_coset_reps_bruteforce(Composition((9,)), Composition((9,)))
    assert double_coset_reps_bruteforce(Composition((3,)), Composition((3,)), Bounds(max_weyl_n=3))


@pytest.mark.parametrize("alpha,beta", [((2, 1), (2, 1)), ((2, 2), (1, 3)), ((1, 2, 1), (2, 2)),
                                        ((3, 2), (1, 1, 1, 1, 1))])
def test_bruteforce_partitions_the_group(alpha, beta):
    a, b = Composition(alpha), Composition(beta)
    reps = double_coset_reps_bruteforce(a, b)
    cosets = [double_coset(w, a, b) for w in reps]
    union = set().union(*cosets)
    assert sum(len(c) for c in cosets) == len(union) == math.factorial(a.n)
    # each double coset contains exactly one representative, its shortest element
    for w, c in zip(reps, cosets):
        assert w.length() == min(W(x).length() for x in c)


def test_constructive_reps_match_bruteforce_n5():
    for n1 in range(6):
        n2 = 5 - n1
        a, b = Composition.from_blocks((n1, n2)), Composition((1,) * 5)
        brute = double_coset_reps_bruteforce(a, b)
        cons = [subdiagram_to_word(d).inverse() for d in all_subdiagrams(n1, n2)]
        assert words(cons) == words(brute)
        assert all(same_double_coset(w, w, a, b) for w in cons)


# surviving reps -------------------------------------------------------------

def test_surviving_examples():
    assert len(surviving_reps(2, 2, 4)) == len(all_subdiagrams(2, 2))
    assert {d.k for d in surviving_reps(1, 1, 1)} == {(0,), (1,)}
    # content-1 column of the full box is forbidden once n - m - 1 >= 1
    assert {d.k for d in surviving_reps(2, 1, 1)} == {(1,), (2,)}
    with pytest.raises(ValueError):
        surviving_reps(1, 1, 3)


@pytest.mark.parametrize("n", range(1, 8))
def test_surviving_reps_are_transversal(n):
    # P\G/Q_[n-m,1^m]: one interlacing per coset, the one increasing on the first n-m slots
    for n1 in range(n + 1):
        for m in range(n + 1):
            got = {subdiagram_to_word(d).word for d in surviving_reps(n1, n - n1, m)}
            expected = {subdiagram_to_word(d).word for d in all_subdiagrams(n1, n - n1)
                        if list(subdiagram_to_word(d).word[:n - m]) ==
                        sorted(subdiagram_to_word(d).word[:n - m])}
            assert got == expected


def test_surviving_reps_against_double_cosets():
    n1, n2, m = 2, 2, 2
    a = Composition((n1, n2))
    b = Composition.from_blocks((n1 + n2 - m,) + (1,) * m)
    brute = double_coset_reps_bruteforce(a, b)
    reps = [subdiagram_to_word(d).inverse() for d in surviving_reps(n1, n2, m)]
    assert len(reps) == len(brute)
    for w in reps:
        assert sum(same_double_coset(w, v, a, b) for v in brute) == 1


# admissible set -------------------------------------------------------------

def test_rect_word():
    assert rect_word(0, 3, 2).is_identity()
    assert rect_word(3, 3, 2).word == (4, 5, 1, 2, 3)
    assert rect_word(1, 2, 1).word == (1, 3, 2)
    with pytest.raises(ValueError):
        rect_word(4, 3, 2)


def test_admissible_examples():
    assert words(admissible_set(1, 1, 1)) == words([rect_word(0, 1, 1), rect_word(1, 1, 1)])
    assert words(admissible_set(2, 2, 4)) == [rect_word(2, 2, 2).word]
    # n1 > n2: the tail of w(j) holds j first-block letters, so j >= s - n2
    assert admissible_widths(3, 2, 4) == [2, 3]
    assert words(admissible_set_literal(3, 2, 4)) == words([rect_word(1, 3, 2), rect_word(2, 3, 2)])
    with pytest.raises(ValueError):
        admissible_set(1, 1, 3)


@pytest.mark.parametrize("n", range(1, 8))
def test_admissible_equivalence(n):
    for n1 in range(n + 1):
        n2 = n - n1
        for s in range(1, n + 1):
            assert words(admissible_bruteforce(n1, n2, s)) == words(admissible_set(n1, n2, s))
            literal = admissible_set_literal(n1, n2, s)
            if n1 <= n2:
                assert words(literal) == words(admissible_set(n1, n2, s))
            else:
                mirrored = [s - j for j in admissible_widths(n1, n2, s)]
                assert words(literal) == words(rect_word(j, n1, n2) for j in mirrored)


def test_tail_condition_edges():
    w = rect_word(1, 1, 1)
    assert all(tail_condition_bruteforce(w, 1, 1, 1) for w in admissible_set(1, 1, 1))
    assert tail_condition_literal(w, 1)
    # s = 2 in GL(2): the tail alpha_1 maps to e2 - e1, outside the radical cone
    assert tail_condition_bruteforce(w, 1, 1, 2)
    assert not tail_condition_bruteforce(W.identity(2), 1, 1, 2)
    with pytest.raises(ValueError):
        tail_condition_bruteforce(W.identity(3), 1, 1, 1)


def test_tail_condition_literal_reading_disagrees():
    # kept for reference only: it does not reproduce the admissible set
    n1, n2, s = 2, 2, 2
    literal = [subdiagram_to_word(d) for d in surviving_reps(n1, n2, s)
               if not tail_condition_literal(subdiagram_to_word(d), s)]
    assert words(literal) != words(admissible_set(n1, n2, s))


def test_levi_partition():
    assert levi_partition(1, 3, 2, 2).blocks == (2, 1)
    assert levi_partition(1, 1, 1, 1).blocks == (1,)
    assert levi_partition(0, 1, 3, 2).blocks == (1, 1)
    with pytest.raises(ValueError):
        levi_partition(0, 3, 2, 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_levi_matches_word_prefix(n):
    for n1 in range(n + 1):
        for s in range(1, n + 1):
            for j in admissible_widths(n1, n - n1, s):
                assert levi_partition(j, n1, n - n1, s) == levi_from_word(rect_word(j, n1, n - n1), n1, s)


# pivots ---------------------------------------------------------------------

def test_interval_decomposition():
    u0, pairs = interval_decomposition(W((1, 4, 2, 5, 3)), 3)
    assert u0 == (1,) and pairs == [((4,), (2,)), ((5,), (3,))]
    u0, pairs = interval_decomposition(W((4, 5, 1, 2, 3)), 3)
    assert u0 == () and pairs == [((4, 5), (1, 2, 3))]


@given(subdiagrams_st())
def test_pivot_consistency(d):
    u0, pairs = interval_decomposition(subdiagram_to_word(d), d.n1)
    expected, total = [], len(u0)
    for v, u in pairs:
        total += len(v)
        if u:
            expected.append((total, u[0]))
        total += len(u)
    assert pivots(d) == expected
    for content, first in pivots(d):
        assert 1 <= first <= d.n1 and first <= content


def test_descriptor_json_roundtrip():
    for d in all_subdiagrams(3, 2):
        desc = describe(d)
        obj = descriptor_to_json(desc)
        assert set(obj) >= {"word", "k_vector", "pivots"}
        assert descriptor_from_json(obj) == desc
    bad = descriptor_to_json(describe(YoungSubdiagram((0,), 1, 1)))
    bad["word"] = [1, 2]
    with pytest.raises(ValueError):
        descriptor_from_json(bad)
