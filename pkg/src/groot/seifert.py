"""Brieskorn triples, Seifert invariants and the star-shaped plumbing.

Everything here is exact: integers are Python ints and rationals are
:class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import (
    InvalidTriple,
    NegativeDefinitenessFailure,
    NonIntegralShift,
    InvariantViolation,
)


@dataclass(frozen=True, order=True)
class BrieskornTriple:
    """Pairwise coprime exponents ``a1 < a2 < a3`` and an orientation sign.

    The exponents are sorted on construction, so ``BrieskornTriple(13, 3, 4)``
    and ``BrieskornTriple(3, 4, 13)`` compare equal.
    """

    a1: int
    a2: int
    a3: int
    orientation: int = 1

    def __post_init__(self):
        exps = (self.a1, self.a2, self.a3)
        if not all(isinstance(a, int) and not isinstance(a, bool) for a in exps):
            raise InvalidTriple(f"exponents must be integers, got {exps!r}")
        if any(a < 2 for a in exps):
            raise InvalidTriple(f"exponents must be >= 2, got {exps!r}")
        for i in range(3):
            for j in range(i + 1, 3):
                if math.gcd(exps[i], exps[j]) != 1:
                    raise InvalidTriple(
                        f"exponents {exps[i]} and {exps[j]} are not coprime"
                    )
        if self.orientation not in (1, -1):
            raise InvalidTriple(f"orientation must be +1 or -1, got {self.orientation!r}")
        a1, a2, a3 = sorted(exps)
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)
        object.__setattr__(self, "a3", a3)

    @property
    def exponents(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    @property
    def product(self) -> int:
        return self.a1 * self.a2 * self.a3

    def positive(self) -> BrieskornTriple:
        return BrieskornTriple(self.a1, self.a2, self.a3, 1)

    def __neg__(self) -> BrieskornTriple:
        return BrieskornTriple(self.a1, self.a2, self.a3, -self.orientation)

    def __str__(self):
        sign = "-" if self.orientation < 0 else ""
        return f"{sign}Sigma({self.a1},{self.a2},{self.a3})"


_TRIPLE_RE = re.compile(r"^\s*(-?)\s*\(?\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)?\s*$")


def parse_triple(text: str) -> BrieskornTriple:
    """Parse ``"p,q,r"`` (optionally parenthesised, optional leading ``-``)."""
    m = _TRIPLE_RE.match(text)
    if not m:
        raise InvalidTriple(f"cannot parse triple {text!r}")
    sign, p, q, r = m.groups()
    return BrieskornTriple(int(p), int(q), int(r), -1 if sign else 1)


@dataclass(frozen=True)
class SeifertData:
    e0: int
    legs: tuple[tuple[int, int], ...]

    @property
    def euler(self) -> Fraction:
        return self.e0 + sum((Fraction(w, a) for a, w in self.legs), Fraction(0))

    def to_json(self) -> dict:
        return {
            "e0": self.e0,
            "legs": [[a, w] for a, w in self.legs],
            "euler": str(self.euler),
        }


def normalize_seifert(t: BrieskornTriple) -> SeifertData:
    """Canonical Seifert form ``e0 + sum(w_i/a_i) = -1/(a1 a2 a3)``, ``0 < w_i < a_i``.

    Each ``w_i`` is fixed modulo ``a_i`` by the Euler number condition:
    ``w_i * (A / a_i) = -1 (mod a_i)`` with ``A = a1 a2 a3``.
    """
    big = t.product
    legs = []
    for a in t.exponents:
        w = (-pow(big // a, -1, a)) % a
        legs.append((a, w))
    num = -1 - sum(w * (big // a) for a, w in legs)
    e0, rem = divmod(num, big)
    if rem != 0 or any(not 0 < w < a for a, w in legs):
        raise InvariantViolation(f"no normalized Seifert form for {t}")
    data = SeifertData(e0, tuple(legs))
    if data.euler != Fraction(-1, big) or e0 > -1:
        raise InvariantViolation(f"bad normalization {data} for {t}")
    return data


def neg_continued_fraction(alpha: int, omega: int) -> list[int]:
    """Hirzebruch-Jung expansion ``alpha/omega = c1 - 1/(c2 - 1/(...))``.

    Returns the coefficients ``c_j >= 2``; the plumbing weights are their
    negatives.

    >>> neg_continued_fraction(5, 4)
    [2, 2, 2, 2]
    """
    if not 0 < omega < alpha:
        raise ValueError(f"need 0 < omega < alpha, got ({alpha}, {omega})")
    out = []
    p, q = alpha, omega
    while q:
        c = -(-p // q)
        out.append(c)
        p, q = q, c * q - p
    return out


def continued_fraction_value(coeffs) -> Fraction:
    """Back-substitute ``[c1, c2, ...]`` into ``c1 - 1/(c2 - ...)``."""
    value = None
    for c in reversed(list(coeffs)):
        value = Fraction(c) if value is None else c - 1 / value
    if value is None:
        raise ValueError("empty chain")
    return value


@dataclass(frozen=True)
class PlumbingGraph:
    """Star-shaped plumbing: a central vertex and three linear legs.

    ``legs[i]`` lists weights from the vertex adjacent to the center
    outwards.  Vertex indices: 0 is the center, then each leg in order.
    """

    center: int
    legs: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return 1 + sum(len(leg) for leg in self.legs)

    s = vertex_count

    def weights(self) -> list[int]:
        out = [self.center]
        for leg in self.legs:
            out.extend(leg)
        return out

    def edges(self) -> list[tuple[int, int]]:
        out = []
        idx = 1
        for leg in self.legs:
            prev = 0
            for _ in leg:
                out.append((prev, idx))
                prev = idx
                idx += 1
        return out

    def parents(self) -> list[int]:
        par = [-1] * self.vertex_count
        for u, v in self.edges():
            par[v] = u
        return par

    def intersection_matrix(self) -> list[list[int]]:
        """Dense intersection form; only sensible for small graphs."""
        s = self.vertex_count
        q = [[0] * s for _ in range(s)]
        for i, w in enumerate(self.weights()):
            q[i][i] = w
        for u, v in self.edges():
            q[u][v] = q[v][u] = 1
        return q

    def elimination_order(self) -> list[int]:
        """Leaves-first ordering: each leg from its far end inward, center last.

        Gaussian elimination in this order creates no fill-in, so the
        leading principal minors of the permuted form are the running
        products of :meth:`pivots`.
        """
        order = []
        idx = 1
        for leg in self.legs:
            order.extend(range(idx + len(leg) - 1, idx - 1, -1))
            idx += len(leg)
        order.append(0)
        return order

    def pivots(self) -> list[Fraction]:
        weights = self.weights()
        par = self.parents()
        acc = [Fraction(0)] * self.vertex_count
        out = []
        for v in self.elimination_order():
            d = weights[v] - acc[v]
            if d == 0:
                raise NegativeDefinitenessFailure(f"singular pivot at vertex {v}")
            out.append(d)
            if par[v] >= 0:
                acc[par[v]] += 1 / d
        return out

    def leading_minors(self) -> list[Fraction]:
        minors = []
        prod = Fraction(1)
        for d in self.pivots():
            prod *= d
            minors.append(prod)
        return minors

    def is_negative_definite(self) -> bool:
        try:
            return all(d < 0 for d in self.pivots())
        except NegativeDefinitenessFailure:
            return False

    def solve(self, rhs) -> list[Fraction]:
        """Exact solution of ``Q x = rhs`` by elimination along the tree."""
        weights = self.weights()
        par = self.parents()
        order = self.elimination_order()
        piv = [Fraction(0)] * self.vertex_count
        acc = [Fraction(0)] * self.vertex_count
        red = [Fraction(b) for b in rhs]
        for v in order:
            piv[v] = weights[v] - acc[v]
            if par[v] >= 0:
                acc[par[v]] += 1 / piv[v]
                red[par[v]] -= red[v] / piv[v]
        x = [Fraction(0)] * self.vertex_count
        for v in reversed(order):
            up = x[par[v]] if par[v] >= 0 else 0
            x[v] = (red[v] - up) / piv[v]
        return x

    def adjunction_vector(self) -> list[int]:
        return [-w - 2 for w in self.weights()]

    @cached_property
    def canonical_square(self) -> Fraction:
        b = self.adjunction_vector()
        k = self.solve(b)
        return sum((bi * ki for bi, ki in zip(b, k)), Fraction(0))

    def to_json(self) -> dict:
        return {
            "center": self.center,
            "legs": [list(leg) for leg in self.legs],
            "s": self.vertex_count,
            "K2": str(self.canonical_square),
            "sigma": grading_shift_sigma(self),
        }


def build_plumbing(d: SeifertData) -> PlumbingGraph:
    legs = tuple(tuple(-c for c in neg_continued_fraction(a, w)) for a, w in d.legs)
    g = PlumbingGraph(d.e0, legs)
    if not g.is_negative_definite():
        raise NegativeDefinitenessFailure(f"plumbing {g} is not negative definite")
    return g


def grading_shift_sigma(g: PlumbingGraph) -> int:
    """``(K^2 + s) / 4``; always an even integer for a homology sphere."""
    val = (g.canonical_square + g.vertex_count) / 4
    if val.denominator != 1 or val.numerator % 2:
        raise NonIntegralShift(f"grading shift {val} is not an even integer")
    return int(val)


def fintushel_stern_R(g: PlumbingGraph) -> int:
    return -2 * g.center - 3


def plumbing_of(t: BrieskornTriple) -> PlumbingGraph:
    return build_plumbing(normalize_seifert(t))
