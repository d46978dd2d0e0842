"""Delta/tau sequences and symmetric graded roots in zigzag form."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import scan
from .errors import AsymmetricRoot, InvalidInput, InvariantViolation, NotStabilized
from .seifert import (
    BrieskornTriple,
    SeifertData,
    grading_shift_sigma,
    normalize_seifert,
    plumbing_of,
)

# Extra indices past the horizon where positivity of Delta is re-checked.
STABILITY_WINDOW = 64


def delta_value(d: SeifertData, n: int) -> int:
    """``Delta(n) = 1 - n*e0 - sum(ceil(n*w_i/a_i))``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return 1 - n * d.e0 + sum((-n * w) // a for a, w in d.legs)


def horizon_of(t: BrieskornTriple) -> int:
    # ceil(x) < x + 1 gives Delta(n) > n/(a1 a2 a3) - 2, positive from here on
    return 2 * t.product


class TauProfile:
    """Explicit ``tau`` values on ``[0, horizon]``; for small inputs and oracles."""

    def __init__(self, d: SeifertData, horizon: int):
        self.seifert = d
        self.horizon = horizon
        self._tau = None

    def delta(self, n: int) -> int:
        return delta_value(self.seifert, n)

    @property
    def tau(self) -> list[int]:
        if self._tau is None:
            vals = [0]
            for n in range(self.horizon):
                vals.append(vals[-1] + self.delta(n))
            self._tau = vals
        return self._tau

    def min_tau(self) -> int:
        return min(self.tau)


def tau_profile(t: BrieskornTriple) -> TauProfile:
    return TauProfile(normalize_seifert(t), horizon_of(t))


@dataclass(frozen=True)
class GradedRoot:
    """A graded root stored as its zigzag of leaf and angle gradings.

    ``leaves[i] > angles[i] < leaves[i+1]``; the reflection ``J`` reverses
    indices.
    """

    sigma: int
    leaves: tuple[int, ...]
    angles: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "leaves", tuple(self.leaves))
        object.__setattr__(self, "angles", tuple(self.angles))
        self.validate()

    def validate(self) -> None:
        L, A = self.leaves, self.angles
        if not L:
            raise InvalidInput("a graded root needs at least one leaf")
        if len(A) != len(L) - 1:
            raise InvalidInput(f"{len(L)} leaves need {len(L) - 1} angles, got {len(A)}")
        if any(g % 2 for g in L + A):
            raise InvalidInput(f"gradings must be even: leaves={L}, angles={A}")
        for i, a in enumerate(A):
            if not (L[i] > a < L[i + 1]):
                raise InvalidInput(f"zigzag broken at angle {i}: {L[i]}, {a}, {L[i + 1]}")

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    @property
    def is_symmetric(self) -> bool:
        return self.leaves == self.leaves[::-1] and self.angles == self.angles[::-1]

    def require_symmetric(self) -> None:
        if not self.is_symmetric:
            raise AsymmetricRoot(f"root {self.leaves} / {self.angles} is not J-symmetric")

    def reflect(self) -> GradedRoot:
        return GradedRoot(self.sigma, self.leaves[::-1], self.angles[::-1])

    def in_grading_set(self, g: int) -> bool:
        """Membership in the grading set, which is every even ``g <= d``."""
        return g % 2 == 0 and g <= max(self.leaves)

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma,
            "leaves": list(self.leaves),
            "angles": list(self.angles),
            "symmetric": self.is_symmetric,
        }

    @classmethod
    def from_json(cls, obj: dict) -> GradedRoot:
        root = cls(int(obj["sigma"]), tuple(obj["leaves"]), tuple(obj["angles"]))
        if "symmetric" in obj and bool(obj["symmetric"]) != root.is_symmetric:
            raise InvalidInput("'symmetric' flag disagrees with the gradings")
        return root

    def merge_vertices(self):
        """Collapse the angles into merge-tree vertices.

        Consecutive angles at the same grading with nothing lower between
        them are one vertex of the tree.  Returns ``(vertex_of_angle,
        vertex_grading, vertex_parent)``; the lowest vertex has parent -1.
        """
        A = self.angles
        vertex_of = [-1] * len(A)
        grading = []
        parent = []
        # Cartesian-tree construction on angle gradings (min at the root).
        stack: list[int] = []
        for i, a in enumerate(A):
            last = -1
            while stack and grading[stack[-1]] > a:
                last = stack.pop()
            if stack and grading[stack[-1]] == a:
                v = stack[-1]
                if last >= 0:
                    parent[last] = v
            else:
                v = len(grading)
                grading.append(a)
                parent.append(-1)
                if last >= 0:
                    parent[last] = v
                if stack:
                    parent[v] = stack[-1]
                stack.append(v)
            vertex_of[i] = v
        return vertex_of, grading, parent

    def to_dot(self, name: str = "root") -> str:
        vertex_of, vgrad, vpar = self.merge_vertices()
        lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=circle];"]
        for i, g in enumerate(self.leaves):
            lines.append(f'  v{i + 1} [label="{g}"];')
        for v, g in enumerate(vgrad):
            lines.append(f'  m{v} [label="{g}", shape=point, xlabel="{g}"];')
        lines.append('  stem [label="...", shape=plaintext];')
        L = self.leaves
        for i in range(len(L)):
            cands = [j for j in (i - 1, i) if 0 <= j < len(self.angles)]
            if cands:
                j = max(cands, key=lambda j: self.angles[j])
                lines.append(f"  v{i + 1} -> m{vertex_of[j]};")
            else:
                lines.append(f"  v{i + 1} -> stem;")
        for v, p in enumerate(vpar):
            lines.append(f"  m{v} -> m{p};" if p >= 0 else f"  m{v} -> stem;")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class TauExtrema:
    minima: tuple[int, ...]
    maxima: tuple[int, ...]

    def to_json(self) -> dict:
        return {"minima": list(self.minima), "maxima": list(self.maxima)}

    @classmethod
    def from_json(cls, obj: dict) -> TauExtrema:
        return cls(tuple(int(v) for v in obj["minima"]), tuple(int(v) for v in obj["maxima"]))


def tau_extrema_of(t: BrieskornTriple, backend: str | None = None) -> TauExtrema:
    d = normalize_seifert(t)
    horizon = horizon_of(t)
    for j in range(STABILITY_WINDOW):
        if delta_value(d, horizon + j) <= 0:
            raise NotStabilized(f"Delta({horizon + j}) <= 0 for {t}")
    alphas = [a for a, _ in d.legs]
    omegas = [w for _, w in d.legs]
    minima, maxima, rising = scan.tau_extrema(d.e0, alphas, omegas, horizon, backend)
    if not rising or len(minima) != len(maxima) + 1:
        raise NotStabilized(f"tau still falling at the horizon for {t}")
    return TauExtrema(tuple(minima), tuple(maxima))


def root_from_extrema(sigma: int, ext: TauExtrema) -> GradedRoot:
    root = GradedRoot(
        sigma,
        tuple(sigma - 2 * m for m in ext.minima),
        tuple(sigma - 2 * m for m in ext.maxima),
    )
    root.require_symmetric()
    return root


@lru_cache(maxsize=1024)
def _cached_extrema(t: BrieskornTriple) -> TauExtrema:
    return tau_extrema_of(t)


def graded_root_of(t: BrieskornTriple, cache=None) -> GradedRoot:
    """Graded root of the positively oriented Brieskorn sphere ``t``.

    ``cache`` is anything with ``get(triple)`` / ``put(triple, extrema)``;
    see :class:`groot.cache.ExtremaCache`.
    """
    if t.orientation < 0:
        raise InvalidInput(f"graded roots are built for positive orientation, got {t}")
    sigma = grading_shift_sigma(plumbing_of(t))
    ext = cache.get(t) if cache is not None else None
    if ext is None:
        ext = _cached_extrema(t)
        if cache is not None:
            cache.put(t, ext)
    try:
        return root_from_extrema(sigma, ext)
    except (AsymmetricRoot, InvalidInput) as exc:
        raise InvariantViolation(f"bad graded root for {t}: {exc}") from exc


def d_invariant(r: GradedRoot) -> int:
    return max(r.leaves)
