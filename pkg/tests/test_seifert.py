from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import coprime_triples
from groot import oracles
from groot.errors import InvalidInput, InvalidTriple
from groot.families import B, Y1, Y2, Y3
from groot.seifert import (
    BrieskornTriple,
    build_plumbing,
    continued_fraction_value,
    fintushel_stern_R,
    grading_shift_sigma,
    neg_continued_fraction,
    normalize_seifert,
    parse_triple,
    plumbing_of,
)


@pytest.mark.parametrize("bad", [(4, 6, 9), (2, 2, 3), (1, 3, 5), (2, 3, 0)])
def test_rejects_bad_exponents(bad):
    with pytest.raises(InvalidTriple):
        BrieskornTriple(*bad)


def test_invalid_triple_is_a_value_error():
    assert issubclass(InvalidTriple, InvalidInput)
    assert issubclass(InvalidTriple, ValueError)


def test_exponents_are_sorted_and_orientation_kept():
    t = BrieskornTriple(13, 3, 4, orientation=-1)
    assert t.exponents == (3, 4, 13)
    assert str(t) == "-Sigma(3,4,13)"
    assert -t == BrieskornTriple(3, 4, 13)
    assert t.positive().orientation == 1


@pytest.mark.parametrize(
    "text, expected",
    [
        ("2,3,5", BrieskornTriple(2, 3, 5)),
        ("(3,4,13)", BrieskornTriple(3, 4, 13)),
        ("-2,3,7", BrieskornTriple(2, 3, 7, orientation=-1)),
        (" 7, 3, 2 ", BrieskornTriple(2, 3, 7)),
    ],
)
def test_parse_triple(text, expected):
    assert parse_triple(text) == expected


@pytest.mark.parametrize("text", ["2,3", "a,b,c", "2;3;5", ""])
def test_parse_triple_rejects(text):
    with pytest.raises(InvalidInput):
        parse_triple(text)


@pytest.mark.parametrize(
    "triple, e0, omegas",
    [((2, 3, 5), -2, (1, 2, 4)), ((2, 3, 7), -1, (1, 1, 1)), ((3, 4, 13), -1, (2, 1, 1))],
)
def test_known_seifert_invariants(triple, e0, omegas):
    d = normalize_seifert(BrieskornTriple(*triple))
    assert d.e0 == e0
    assert tuple(w for _, w in d.legs) == omegas
    assert d.euler == Fraction(-1, BrieskornTriple(*triple).product)


@settings(max_examples=60, deadline=None)
@given(coprime_triples(max_exponent=25, max_product=3000))
def test_normalization_matches_exhaustive_search(t):
    d = normalize_seifert(t)
    found = oracles.brute_force_seifert(*t.exponents)
    assert found == [(d.e0, tuple(w for _, w in d.legs))]


@settings(max_examples=200)
@given(coprime_triples(max_exponent=200, max_product=10**6))
def test_continued_fractions_reconstruct(t):
    for a, w in normalize_seifert(t).legs:
        coeffs = neg_continued_fraction(a, w)
        assert coeffs == oracles.hirzebruch_jung(a, w)
        assert all(c >= 2 for c in coeffs)
        assert continued_fraction_value(coeffs) == Fraction(a, w)


def test_poincare_sphere_is_e8():
    g = plumbing_of(BrieskornTriple(2, 3, 5))
    assert g.vertex_count == 8
    assert sorted(g.weights()) == [-2] * 8
    assert g.canonical_square == 0
    assert grading_shift_sigma(g) == 2


def test_sigma_3_4_13_plumbing():
    g = plumbing_of(BrieskornTriple(3, 4, 13))
    assert g.center == -1
    assert [list(leg) for leg in g.legs] == [[-2, -2], [-4], [-13]]
    assert g.canonical_square == -29
    assert g.s == 5
    assert grading_shift_sigma(g) == -6
    assert g.to_json() == {
        "center": -1, "legs": [[-2, -2], [-4], [-13]], "s": 5, "K2": "-29", "sigma": -6,
    }


def test_sigma_2_3_7():
    g = plumbing_of(BrieskornTriple(2, 3, 7))
    assert g.canonical_square == -4
    assert grading_shift_sigma(g) == 0
    assert fintushel_stern_R(g) == -1


@settings(max_examples=40, deadline=None)
@given(coprime_triples(max_exponent=60, max_product=50000))
def test_tree_minors_match_dense_elimination(t):
    g = plumbing_of(t)
    q = g.intersection_matrix()
    order = g.elimination_order()
    permuted = [[q[i][j] for j in order] for i in order]
    assert g.leading_minors() == oracles.leading_minors_dense(permuted)
    minors = g.leading_minors()
    assert all((-1) ** (k + 1) * m > 0 for k, m in enumerate(minors))


@settings(max_examples=40, deadline=None)
@given(coprime_triples(max_exponent=60, max_product=50000))
def test_canonical_square_matches_dense_solve(t):
    g = plumbing_of(t)
    k2, s = oracles.brute_force_sigma(g.center, g.legs)
    assert (g.canonical_square, g.vertex_count) == (k2, s)
    x = g.solve(g.adjunction_vector())
    q = g.intersection_matrix()
    assert [sum(q[i][j] * x[j] for j in range(s)) for i in range(s)] == g.adjunction_vector()


def test_random_triples_negative_definite():
    import random

    from groot.reproduce import random_coprime_triples

    for t in random_coprime_triples(random.Random(5), 500, 10**6):
        g = build_plumbing(normalize_seifert(t))
        assert g.is_negative_definite()
        assert grading_shift_sigma(g) % 2 == 0


@pytest.mark.parametrize("n", range(1, 21))
def test_families_have_central_weight_minus_two(n):
    for t in (B(n), Y1(n), Y2(n), Y3(n)):
        assert fintushel_stern_R(plumbing_of(t)) == 1
