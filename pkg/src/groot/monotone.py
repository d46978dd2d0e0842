"""Monotone graded subroots ``M(h1,r1;...;hn,rn)``."""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidInput, InvalidParams
from .graded_root import GradedRoot


@dataclass(frozen=True)
class MonotoneSubroot:
    """Parameter list of a monotone subroot.

    Invariants: ``h`` strictly decreasing, ``r`` strictly increasing, all
    even, ``h_i > r_i`` for ``i < n`` and ``h_n >= r_n``.
    """

    params: tuple[tuple[int, int], ...]

    def __post_init__(self):
        params = tuple((int(h), int(r)) for h, r in self.params)
        object.__setattr__(self, "params", params)
        _check_params(params)

    @classmethod
    def reduced(cls, params) -> MonotoneSubroot:
        """Drop dominated and repeated pairs from a loosely monotone list.

        Accepts non-strict lists such as ``[(2, 0), (2, 2)]``: the pair
        ``(2, 0)`` is componentwise below ``(2, 2)`` and disappears.  Both
        lists give the same local class under the decomposition formula.
        """
        return cls(tuple(_pareto_front(params)))

    @property
    def n(self) -> int:
        return len(self.params)

    def __str__(self):
        return "M(" + ";".join(f"{h},{r}" for h, r in self.params) + ")"

    def to_json(self) -> dict:
        return {"params": [[h, r] for h, r in self.params]}

    @classmethod
    def from_json(cls, obj: dict) -> MonotoneSubroot:
        return cls(tuple(tuple(p) for p in obj["params"]))


_PARAM_RE = re.compile(r"^M\((-?\d+,-?\d+(?:;-?\d+,-?\d+)*)\)$")


def parse_subroot(text: str) -> MonotoneSubroot:
    m = _PARAM_RE.match(text.replace(" ", ""))
    if not m:
        raise InvalidParams(f"cannot parse subroot {text!r}")
    pairs = [tuple(int(x) for x in chunk.split(",")) for chunk in m.group(1).split(";")]
    return MonotoneSubroot(tuple(pairs))


def _check_params(params) -> None:
    if not params:
        raise InvalidParams("empty parameter list")
    for h, r in params:
        if h % 2 or r % 2:
            raise InvalidParams(f"odd grading in pair ({h},{r})")
    for (h1, r1), (h2, r2) in zip(params, params[1:]):
        if not h1 > h2:
            raise InvalidParams(f"h not strictly decreasing: {h1}, {h2}")
        if not r1 < r2:
            raise InvalidParams(f"r not strictly increasing: {r1}, {r2}")
    for i, (h, r) in enumerate(params):
        last = i == len(params) - 1
        if h < r or (h == r and not last):
            raise InvalidParams(f"pair {i + 1} has h={h} below r={r}")


def _pareto_front(pairs) -> list[tuple[int, int]]:
    pairs = set((int(h), int(r)) for h, r in pairs)
    front = [
        p for p in pairs
        if not any(q != p and q[0] >= p[0] and q[1] >= p[1] for q in pairs)
    ]
    return sorted(front, key=lambda p: -p[0])


def candidate_pairs(r: GradedRoot) -> list[tuple[int, int]]:
    """``(leaf grading, merge grading with its mirror)`` for the left half."""
    L, A = r.leaves, r.angles
    k = len(L)
    out = []
    for i in range((k + 1) // 2):
        j = k - 1 - i
        if i == j:
            out.append((L[i], L[i]))
        else:
            out.append((L[i], min(A[i:j])))
    return out


def extract_monotone(r: GradedRoot) -> MonotoneSubroot:
    """Monotone subroot of a symmetric root as the Pareto frontier of its
    candidate pairs."""
    r.require_symmetric()
    return MonotoneSubroot(tuple(_pareto_front(candidate_pairs(r))))


def realize_subroot(m: MonotoneSubroot, sigma: int = 0) -> GradedRoot:
    """The graded root drawn by a parameter list, as a zigzag.

    Each pair with ``h > r`` contributes mirror leaves at ``h`` meeting at
    ``r``; a final pair with ``h == r`` is a single fixed leaf.
    """
    hs = [h for h, _ in m.params]
    rs = [r for _, r in m.params]
    h_n, r_n = m.params[-1]
    if h_n == r_n:
        leaves = hs[:-1] + [h_n] + hs[-2::-1]
        angles = rs[:-1] + rs[-2::-1]
    else:
        leaves = hs + hs[::-1]
        angles = rs[:-1] + [r_n] + rs[-2::-1]
    try:
        return GradedRoot(sigma, tuple(leaves), tuple(angles))
    except InvalidInput as exc:
        raise InvalidParams(str(exc)) from exc


def involutive_correction_terms(m: MonotoneSubroot) -> tuple[int, int]:
    """``(d_bar, d_lower) = (h_1, r_n)``."""
    return m.params[0][0], m.params[-1][1]
