"""Local equivalence classes of Seifert spheres in the basis {T, X_1, X_2, ...}.

``T`` is the class of Sigma(2,3,5) (the tower ``M(2,2)``) and ``X_k`` the
class of ``B(k)`` (``M(2k,0)``).  The subgroup they span is free abelian,
so a class is an integer vector.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .errors import OddGrading
from .graded_root import graded_root_of
from .monotone import MonotoneSubroot, extract_monotone
from .seifert import BrieskornTriple

HF_INVARIANTS = ("d_lower", "d", "d_bar", "phi_n", "mu_bar")
SW_INVARIANTS = (
    "alpha", "beta", "gamma", "delta_lower", "delta", "delta_bar", "kappa",
) + tuple(f"kappa_o_{i}" for i in range(8))


@dataclass(frozen=True)
class LocalClass:
    t: int = 0
    x: tuple[tuple[int, int], ...] = ()
    shift_rule_used: bool = field(default=False, compare=False)

    def __post_init__(self):
        acc = defaultdict(int)
        for k, c in self.x:
            if k < 1:
                raise ValueError(f"X_k needs k >= 1, got {k}")
            acc[int(k)] += int(c)
        object.__setattr__(self, "x", tuple(sorted((k, c) for k, c in acc.items() if c)))

    @classmethod
    def basis(cls, k: int) -> LocalClass:
        """``X_k`` for ``k >= 1``; ``T`` for ``k == 0``."""
        return cls(t=1) if k == 0 else cls(x=((k, 1),))

    def coeff(self, k: int) -> int:
        return dict(self.x).get(k, 0)

    def is_zero(self) -> bool:
        return self.t == 0 and not self.x

    def __add__(self, other: LocalClass) -> LocalClass:
        return LocalClass(
            self.t + other.t,
            self.x + other.x,
            self.shift_rule_used or other.shift_rule_used,
        )

    def __neg__(self) -> LocalClass:
        return LocalClass(-self.t, tuple((k, -c) for k, c in self.x), self.shift_rule_used)

    def __sub__(self, other: LocalClass) -> LocalClass:
        return self + (-other)

    def __mul__(self, n: int) -> LocalClass:
        return LocalClass(n * self.t, tuple((k, n * c) for k, c in self.x), self.shift_rule_used)

    __rmul__ = __mul__

    def __str__(self):
        terms = []
        for k, c in sorted(self.x, reverse=True):
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            terms.append((c < 0, f"{mag}X_{k}"))
        if self.t:
            terms.append((self.t < 0, f"{abs(self.t)}*T"))
        if not terms:
            return "0"
        neg, body = terms[0]
        out = ("-" if neg else "") + body
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json(self) -> dict:
        return {
            "T": self.t,
            "X": {str(k): c for k, c in self.x},
            "shiftRuleUsed": self.shift_rule_used,
        }

    @classmethod
    def from_json(cls, obj: dict) -> LocalClass:
        return cls(
            int(obj.get("T", 0)),
            tuple((int(k), int(c)) for k, c in obj.get("X", {}).items()),
            bool(obj.get("shiftRuleUsed", False)),
        )


def class_of_atom(h: int, r: int) -> LocalClass:
    """Class of the one-pair subroot ``M(h, r)``.

    ``M(2n, 2n)`` is ``n`` copies of the tower ``M(2, 2)`` and ``M(2k, 0)``
    is ``X_k``.  Any other pair goes through the grading-shift rule
    ``M(h, r) = X_((h-r)/2) + (r/2) T``, which is flagged.
    """
    if h % 2 or r % 2:
        raise OddGrading(f"M({h},{r}) has an odd grading")
    if h < r:
        raise ValueError(f"M({h},{r}) needs h >= r")
    if h == r:
        return LocalClass(t=h // 2)
    if r == 0:
        return LocalClass.basis(h // 2)
    return LocalClass(t=r // 2, x=(((h - r) // 2, 1),), shift_rule_used=True)


def class_of_subroot(m: MonotoneSubroot) -> LocalClass:
    """``sum M(h_i, r_i) - sum M(h_(i+1), r_i)``."""
    p = m.params
    total = LocalClass()
    for h, r in p:
        total = total + class_of_atom(h, r)
    for i in range(len(p) - 1):
        total = total - class_of_atom(p[i + 1][0], p[i][1])
    return total


def subroot_of(t: BrieskornTriple, cache=None) -> MonotoneSubroot:
    return extract_monotone(graded_root_of(t.positive(), cache=cache))


def class_of_manifold(t: BrieskornTriple, cache=None) -> LocalClass:
    c = class_of_subroot(subroot_of(t, cache=cache))
    return -c if t.orientation < 0 else c


def is_kernel_element(summands, cache=None) -> tuple[bool, LocalClass]:
    """``summands`` is a list of ``(BrieskornTriple, multiplicity)``."""
    total = LocalClass()
    for t, mult in summands:
        total = total + mult * class_of_manifold(t, cache=cache)
    return total.is_zero(), total


def is_sw_equivalence_pair(summands) -> bool:
    """True for exactly ``Y_a # -Y_b``: one sphere with +1, one with -1."""
    mults = sorted(m * t.orientation for t, m in summands if m)
    return mults == [-1, 1]


def vanishing_report(c: LocalClass, sw_equivalence_pair: bool = False) -> list[str]:
    if not c.is_zero():
        return []
    names = list(HF_INVARIANTS)
    if sw_equivalence_pair:
        names.extend(SW_INVARIANTS)
    return names
