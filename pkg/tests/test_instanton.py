from fractions import Fraction

import pytest

from groot.errors import CounterexampleFound, FormulaInapplicable
from groot.families import B, Y1, Y3, independence_family_a, independence_family_b
from groot.instanton import (
    INF,
    ExtendedRational,
    connected_sum_bound,
    family_scan,
    independence_certificate,
    r_zero,
)
from groot.seifert import BrieskornTriple


def test_r_zero_examples():
    assert r_zero(BrieskornTriple(2, 3, 5)) == INF
    assert str(r_zero(-BrieskornTriple(2, 3, 5))) == "1/120"
    assert r_zero(-B(1)).value == Fraction(1, 4 * 3 * 5 * 7)
    with pytest.raises(FormulaInapplicable):
        r_zero(-BrieskornTriple(2, 3, 7))


def test_extended_rational_order_and_arithmetic():
    a = ExtendedRational(Fraction(1, 3))
    assert a < INF
    assert INF + a == INF
    assert a + Fraction(1, 6) == ExtendedRational(Fraction(1, 2))
    assert ExtendedRational.parse("inf") == INF
    assert ExtendedRational.parse("2/4") == ExtendedRational(Fraction(1, 2))
    assert str(INF) == "inf"
    assert sorted([INF, a, ExtendedRational(0)]) == [ExtendedRational(0), a, INF]


def test_connected_sum_bound():
    r1, r2 = ExtendedRational(Fraction(1, 120)), ExtendedRational(Fraction(1, 420))
    assert connected_sum_bound([(r1, 0)]) == r1
    assert connected_sum_bound([(r1, 0), (r2, 0)]) == r2
    bound = connected_sum_bound([(r1, Fraction(-1, 1000)), (INF, Fraction(-1, 500))])
    assert bound == ExtendedRational(Fraction(1, 120) - Fraction(1, 500))
    assert connected_sum_bound([(INF, 0), (INF, 0)]) == INF
    with pytest.raises(ValueError):
        connected_sum_bound([(r1, 0), (r2, 1)])


def test_certificates_for_known_families():
    a = independence_certificate(independence_family_a(100))
    b = independence_certificate(independence_family_b(25))
    assert a.verdict and b.verdict
    assert len(a.family) == 301
    doc = a.to_json()
    assert doc["r0_neg"][0] == "1/120"
    assert doc["theorem"] == "NST24 r0 independence"


def test_repeated_member_breaks_distinctness():
    cert = independence_certificate([B(1), Y1(2), B(1)])
    assert not cert.checks["allDistinct"]
    assert not cert.verdict


def test_inapplicable_member_fails_certificate():
    cert = independence_certificate([B(1), BrieskornTriple(2, 3, 7)])
    assert not cert.checks["allFinite"]
    assert not cert.checks["rInvariantsPositive"]
    assert cert.failures


def test_empty_family():
    assert not independence_certificate([]).verdict


def test_subfamily_of_valid_family_stays_valid():
    family = independence_family_a(20)
    for k in range(1, len(family), 7):
        assert independence_certificate(family[:k]).verdict


def test_distinct_products_iff_distinct_r_values():
    family = independence_family_a(30) + independence_family_b(10)
    cert = independence_certificate(family)
    products = [t.product for t in family]
    values = [r.value for r in cert.r_values]
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            assert (products[i] == products[j]) == (values[i] == values[j])


def test_b4n_and_y3_separated_mod_4():
    for n in range(1, 26):
        assert B(4 * n).product % 4 != Y3(n).product % 4


def test_family_scan():
    report = family_scan(100)
    assert report["counterexample"] is None
    assert report["checks"]["mod4"] == 100
    with pytest.raises(ValueError):
        family_scan(0)
    assert issubclass(CounterexampleFound, Exception)
