"""Exact r0 values for Brieskorn spheres and linear-independence certificates.

Two rules are used and nothing else: a sphere bounding a negative definite
manifold (every positively oriented Brieskorn sphere does) has r_s = inf,
and ``r_s(-Sigma(a1,a2,a3)) = 1/(4 a1 a2 a3)`` whenever the Fintushel-Stern
invariant ``R = -2e - 3`` is positive.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import CounterexampleFound, FormulaInapplicable
from .families import B, Y1, Y2, Y3
from .seifert import BrieskornTriple, fintushel_stern_R, plumbing_of


@total_ordering
class ExtendedRational:
    """A reduced fraction or +infinity; infinity sorts above everything."""

    __slots__ = ("_value",)

    def __init__(self, value=None):
        self._value = None if value is None else Fraction(value)

    @classmethod
    def infinity(cls) -> ExtendedRational:
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def value(self) -> Fraction:
        if self._value is None:
            raise ValueError("infinite value has no fraction")
        return self._value

    def __add__(self, other) -> ExtendedRational:
        if isinstance(other, ExtendedRational):
            if self.is_infinite or other.is_infinite:
                return ExtendedRational.infinity()
            return ExtendedRational(self._value + other._value)
        if self.is_infinite:
            return self
        return ExtendedRational(self._value + Fraction(other))

    __radd__ = __add__

    def _key(self):
        return (1, 0) if self._value is None else (0, self._value)

    def __eq__(self, other):
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return "inf" if self._value is None else str(self._value)

    def __repr__(self):
        return f"ExtendedRational({self})"

    @classmethod
    def parse(cls, text: str) -> ExtendedRational:
        return cls.infinity() if text.strip() in ("inf", "∞") else cls(Fraction(text))


INF = ExtendedRational.infinity()


def r_zero(t: BrieskornTriple) -> ExtendedRational:
    if t.orientation > 0:
        return INF
    R = fintushel_stern_R(plumbing_of(t.positive()))
    if R <= 0:
        raise FormulaInapplicable(f"R({t.positive()}) = {R} <= 0; no formula for r0({t})")
    return ExtendedRational(Fraction(1, 4 * t.product))


def connected_sum_bound(terms) -> ExtendedRational:
    """Lower bound for ``r_(s1+...+sk)`` of a connected sum.

    Folds ``r_(s1+s2)(Y1 # Y2) >= min(r_s1(Y1) + s2, r_s2(Y2) + s1)`` from the
    left over ``(r_value, s)`` pairs with ``s <= 0``.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("need at least one term")
    acc, s_acc = terms[0][0], Fraction(terms[0][1])
    for r, s in terms[1:]:
        s = Fraction(s)
        if s > 0:
            raise ValueError("s must be <= 0")
        acc = min(acc + s, r + s_acc)
        s_acc += s
    return acc


@dataclass
class IndependenceCertificate:
    family: list[BrieskornTriple]
    r_values: list[ExtendedRational | None]
    checks: dict[str, bool]
    failures: list[str]

    @property
    def verdict(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "family": [str(t) for t in self.family],
            "r0_neg": [None if r is None else str(r) for r in self.r_values],
            "checks": dict(self.checks),
            "verdict": self.verdict,
            "theorem": "NST24 r0 independence",
        }


def independence_certificate(family) -> IndependenceCertificate:
    """Check that every member has ``r0 = inf`` on one side and distinct
    finite ``r0`` on the other.  Orientation of members is ignored."""
    family = list(family)
    r_values: list[ExtendedRational | None] = []
    failures = []
    pos_inf = True
    positive_R = True
    for t in family:
        base = t.positive()
        if not r_zero(base).is_infinite:
            pos_inf = False
        R = fintushel_stern_R(plumbing_of(base))
        if R <= 0:
            positive_R = False
        try:
            r_values.append(r_zero(-base))
        except FormulaInapplicable as exc:
            r_values.append(None)
            failures.append(str(exc))
    finite = [r for r in r_values if r is not None and not r.is_infinite]
    checks = {
        "allPositiveSideInfinite": pos_inf,
        "allFinite": len(finite) == len(family),
        "allDistinct": len(set(finite)) == len(finite) == len(family),
        "rInvariantsPositive": positive_R,
    }
    if not family:
        checks["allFinite"] = checks["allDistinct"] = False
        failures.append("empty family")
    return IndependenceCertificate(family, r_values, checks, failures)


def family_scan(n_max: int) -> dict:
    """Re-check the arithmetic facts behind distinctness of the r0 values.

    Raises :class:`CounterexampleFound` with the first failing witness.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")

    def f(a):
        return (4 * a + 1) * (3 * a + 1) * (12 * a + 1)

    def g(b):
        return (4 * b - 1) * (3 * b - 1) * (12 * b - 1)

    counts = dict.fromkeys(
        ["b_odd", "y_even", "not_30", "interleave", "g_increasing", "mod4", "halving"], 0
    )
    for n in range(1, n_max + 1):
        pb = (2 * n + 1) * (4 * n + 1) * (4 * n + 3)
        if B(n).product != pb:
            raise CounterexampleFound("B(n) exponents", n)
        if pb % 2 == 0:
            raise CounterexampleFound("B(n) product odd", n)
        counts["b_odd"] += 1
        for name, fam, sign in (("Y1", Y1, 1), ("Y2", Y2, -1)):
            py = (4 * n + sign) * (6 * n + 2 * sign) * (12 * n + sign)
            if fam(n).product != py:
                raise CounterexampleFound(f"{name}(n) exponents", n)
            if py % 2:
                raise CounterexampleFound(f"{name}(n) product even", n)
            counts["y_even"] += 1
            if py // 2 != (f(n) if sign > 0 else g(n)):
                raise CounterexampleFound(f"{name}(n) product / 2", n)
            counts["halving"] += 1
        for p in (pb, Y1(n).product, Y2(n).product):
            if p == 30:
                raise CounterexampleFound("product != 30", n)
            counts["not_30"] += 1
        if not g(n) < f(n) < g(n + 1):
            raise CounterexampleFound("g(a) < f(a) < g(a+1)", n)
        counts["interleave"] += 1
        if not g(n) < g(n + 1):
            raise CounterexampleFound("g strictly increasing", n)
        counts["g_increasing"] += 1
        p4 = (8 * n + 1) * (16 * n + 1) * (16 * n + 3)
        p3 = (8 * n + 1) * (12 * n + 1) * (24 * n + 5)
        if B(4 * n).product != p4 or Y3(n).product != p3:
            raise CounterexampleFound("B(4n)/Y3(n) exponents", n)
        if p4 % 4 == p3 % 4:
            raise CounterexampleFound("mod 4 separation", n)
        counts["mod4"] += 1
    return {"n_max": n_max, "checks": counts, "counterexample": None}
