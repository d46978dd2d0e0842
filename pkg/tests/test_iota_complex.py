import json
import random

import pytest
from hypothesis import given, settings

from conftest import coprime_triples
from groot import oracles
from groot.errors import ChainAxiomError
from groot.graded_root import GradedRoot, graded_root_of
from groot.iota_complex import (
    GradedModule,
    IotaComplex,
    elder_rule_homology,
    homology_of,
    reduce_homology,
    standard_complex_of,
    tensor_product,
    tower,
)
from groot.seifert import BrieskornTriple


def test_standard_complex_of_sigma_2_3_7():
    c = standard_complex_of(graded_root_of(BrieskornTriple(2, 3, 7)))
    assert c.names == ("v_1", "v_2", "alpha_1")
    assert c.gradings == (0, 0, -1)
    assert c.diff[2] == ((0, 1), (1, 1))
    assert c.involution == (1, 0, 2)
    c.check_axioms()


@settings(max_examples=60, deadline=None)
@given(coprime_triples(max_exponent=60, max_product=50000))
def test_axioms_hold_on_random_roots(t):
    standard_complex_of(graded_root_of(t)).check_axioms()


def test_broken_differential_detected():
    c = standard_complex_of(graded_root_of(BrieskornTriple(2, 3, 7)))
    bad = IotaComplex(c.names, c.gradings, c.kinds, (((2, 0),), (), ((0, 1), (1, 1))), c.involution)
    with pytest.raises(ChainAxiomError):
        bad.check_axioms()
    not_equivariant = IotaComplex(
        c.names, c.gradings, c.kinds, ((), (), ((0, 1),)), c.involution
    )
    with pytest.raises(ChainAxiomError):
        not_equivariant.check_axioms()
    with pytest.raises(ChainAxiomError):
        IotaComplex(c.names, c.gradings, c.kinds, c.diff, (1, 2, 0)).check_axioms()


def test_json_round_trip():
    c = standard_complex_of(graded_root_of(BrieskornTriple(3, 4, 13)))
    back = IotaComplex.from_json(json.loads(json.dumps(c.to_json())))
    assert back == c
    back.check_axioms()


def test_elder_rule_on_sigma_3_4_13():
    h = elder_rule_homology(graded_root_of(BrieskornTriple(3, 4, 13)))
    assert h.tower_top == 0
    assert h.torsion == ((0, 1), (-2, 1), (-2, 1), (-6, 1), (-6, 1))


@settings(max_examples=60, deadline=None)
@given(coprime_triples(max_exponent=50, max_product=20000))
def test_elder_rule_agrees_with_cancellation(t):
    r = graded_root_of(t)
    c = standard_complex_of(r)
    free, torsion = reduce_homology(c)
    h = elder_rule_homology(r)
    assert free == [h.tower_top]
    assert sorted(torsion) == sorted(h.torsion)


@settings(max_examples=25, deadline=None)
@given(coprime_triples(max_exponent=30, max_product=3000))
def test_truncated_dimensions_match_linear_algebra(t):
    c = standard_complex_of(graded_root_of(t))
    h = homology_of(c)
    for m in (1, 2, (max(c.gradings) - min(c.gradings)) // 2 + 2):
        assert h.truncated_dimensions(m) == oracles.truncated_homology_dimensions(
            c.gradings, c.diff, m
        )


def test_module_dimensions():
    h = GradedModule(2, ((0, 2),))
    assert [h.dimension(g) for g in (4, 2, 1, 0, -2, -4)] == [0, 1, 0, 2, 2, 1]
    assert h.to_json() == {"towerTop": 2, "torsion": [[0, 2]]}


def test_tower_identity_law():
    c = standard_complex_of(graded_root_of(BrieskornTriple(3, 4, 13)))
    prod = tensor_product(c, tower(0))
    prod.check_axioms()
    assert homology_of(prod) == homology_of(c)


def test_towers_add():
    assert homology_of(tensor_product(tower(2), tower(2))).tower_top == 4
    assert homology_of(tensor_product(tower(-4), tower(2))).tower_top == -2


def test_tensor_additivity_sample():
    from groot.reproduce import small_triples

    rng = random.Random(3)
    pool = [standard_complex_of(graded_root_of(t)) for t in small_triples(600)]
    for _ in range(15):
        c1, c2 = rng.choice(pool), rng.choice(pool)
        prod = tensor_product(c1, c2)
        prod.check_axioms()
        assert homology_of(prod).tower_top == (
            homology_of(c1).tower_top + homology_of(c2).tower_top
        )


def test_tensor_with_sigma_2_3_7():
    c1 = standard_complex_of(graded_root_of(BrieskornTriple(5, 8, 13)))
    c2 = standard_complex_of(graded_root_of(BrieskornTriple(2, 3, 7)))
    assert homology_of(tensor_product(c1, c2)).tower_top == 4


def test_rank_check_on_complexes_without_root():
    acyclic = IotaComplex(("x", "y"), (1, 0), ("a", "b"), ((), ((0, 0),)), (0, 1))
    # d y = x is not homogeneous of degree -1
    with pytest.raises(ChainAxiomError):
        acyclic.check_axioms()
    cancel = IotaComplex(("x", "y"), (0, 1), ("a", "b"), ((), ((0, 0),)), (0, 1))
    cancel.check_axioms()
    with pytest.raises(ChainAxiomError):
        homology_of(cancel)


def test_root_free_path_uses_cancellation():
    r = GradedRoot(0, (0, -2, 0), (-4, -4))
    c = standard_complex_of(r)
    stripped = IotaComplex(c.names, c.gradings, c.kinds, c.diff, c.involution)
    assert homology_of(stripped) == elder_rule_homology(r)
