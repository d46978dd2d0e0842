"""Free graded complexes over F[U] (F = GF(2), deg U = -2) with an involution.

A differential is stored as, for each generator ``x``, the terms
``(y, p)`` of ``dx = sum U^p y``.  Homogeneity pins the exponent to
``p = (gr(y) - gr(x) + 1) / 2``, so a boolean matrix plus the gradings
determines the complex.  :func:`reduce_homology` exploits this.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import ChainAxiomError, OddExponent
from .graded_root import GradedRoot


@dataclass(frozen=True)
class IotaComplex:
    names: tuple[str, ...]
    gradings: tuple[int, ...]
    kinds: tuple[str, ...]
    diff: tuple[tuple[tuple[int, int], ...], ...]
    involution: tuple[int, ...]
    root: GradedRoot | None = field(default=None, compare=False, repr=False)

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def check_axioms(self) -> None:
        """Raise :class:`ChainAxiomError` unless d is homogeneous of degree -1,
        d^2 = 0, J^2 = id, J preserves gradings and Jd = dJ."""
        n = len(self)
        gr = self.gradings
        J = self.involution
        if sorted(J) != list(range(n)):
            raise ChainAxiomError("J is not a permutation")
        for x in range(n):
            if J[J[x]] != x:
                raise ChainAxiomError(f"J^2 != id at {self.names[x]}")
            if gr[J[x]] != gr[x]:
                raise ChainAxiomError(f"J changes the grading of {self.names[x]}")
            for y, p in self.diff[x]:
                if p < 0 or gr[y] - 2 * p != gr[x] - 1:
                    raise ChainAxiomError(
                        f"term U^{p} {self.names[y]} in d{self.names[x]} is not homogeneous"
                    )
        for x in range(n):
            twice = Counter()
            for y, p in self.diff[x]:
                for z, q in self.diff[y]:
                    twice[(z, p + q)] += 1
            if any(c % 2 for c in twice.values()):
                raise ChainAxiomError(f"d^2 {self.names[x]} != 0")
            d_of_jx = {(y, p) for y, p in self.diff[J[x]]}
            j_of_dx = {(J[y], p) for y, p in self.diff[x]}
            if d_of_jx != j_of_dx:
                raise ChainAxiomError(f"J d != d J at {self.names[x]}")

    def to_json(self) -> dict:
        return {
            "gens": [
                {"name": nm, "gr": g, "kind": k}
                for nm, g, k in zip(self.names, self.gradings, self.kinds)
            ],
            "diff": {
                self.names[x]: [[self.names[y], p] for y, p in terms]
                for x, terms in enumerate(self.diff)
                if terms
            },
            "J": {self.names[x]: self.names[j] for x, j in enumerate(self.involution)},
        }

    @classmethod
    def from_json(cls, obj: dict) -> IotaComplex:
        gens = obj["gens"]
        names = tuple(g["name"] for g in gens)
        pos = {nm: i for i, nm in enumerate(names)}
        diff = [()] * len(names)
        for src, terms in obj.get("diff", {}).items():
            diff[pos[src]] = tuple((pos[t], int(p)) for t, p in terms)
        J = obj.get("J") or {}
        involution = tuple(pos[J.get(nm, nm)] for nm in names)
        return cls(
            names,
            tuple(int(g["gr"]) for g in gens),
            tuple(g["kind"] for g in gens),
            tuple(diff),
            involution,
        )


def standard_complex_of(r: GradedRoot) -> IotaComplex:
    """Leaves ``v_i`` at ``L[i]``; angles ``alpha_i`` at ``A[i] + 1`` with
    ``d alpha_i = U^((L[i]-A[i])/2) v_i + U^((L[i+1]-A[i])/2) v_{i+1}``."""
    L, A = r.leaves, r.angles
    k = len(L)
    names = tuple(f"v_{i + 1}" for i in range(k)) + tuple(f"alpha_{i + 1}" for i in range(k - 1))
    gradings = tuple(L) + tuple(a + 1 for a in A)
    kinds = ("leaf",) * k + ("angle",) * (k - 1)
    diff = [()] * k
    for i, a in enumerate(A):
        left, right = L[i] - a, L[i + 1] - a
        if left % 2 or right % 2:
            raise OddExponent(f"odd exponent at alpha_{i + 1}")
        diff.append(((i, left // 2), (i + 1, right // 2)))
    involution = tuple(k - 1 - i for i in range(k)) + tuple(k + (k - 2 - i) for i in range(k - 1))
    return IotaComplex(names, gradings, kinds, tuple(diff), involution, root=r)


def tower(grading: int) -> IotaComplex:
    return IotaComplex(("v_1",), (grading,), ("leaf",), ((),), (0,))


@dataclass(frozen=True)
class GradedModule:
    """``F[U]_(tower_top) + sum F[U]/U^length`` with generators at ``top``."""

    tower_top: int
    torsion: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "torsion", tuple(sorted(((int(t), int(n)) for t, n in self.torsion), reverse=True))
        )

    def dimension(self, g: int) -> int:
        dim = int(g <= self.tower_top and (self.tower_top - g) % 2 == 0)
        for top, length in self.torsion:
            if (top - g) % 2 == 0 and top - 2 * (length - 1) <= g <= top:
                dim += 1
        return dim

    def truncated_dimensions(self, m: int) -> dict[int, int]:
        """Predicted graded dimensions of ``H(C / U^m C)``.

        From the long exact sequence of ``0 -> C -U^m-> C -> C/U^m -> 0``:
        each grading gets the cokernel of ``U^m`` there plus the kernel of
        ``U^m`` one step (``2m - 1``) higher.
        """
        dims: Counter = Counter()
        for j in range(m):
            dims[self.tower_top - 2 * j] += 1
        for top, length in self.torsion:
            for j in range(min(length, m)):
                dims[top - 2 * j] += 1
            for j in range(max(0, length - m), length):
                dims[top - 2 * j - 2 * m + 1] += 1
        return dict(dims)

    def to_json(self) -> dict:
        return {"towerTop": self.tower_top, "torsion": [list(p) for p in self.torsion]}


class _DisjointSet:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x


def elder_rule_homology(r: GradedRoot) -> GradedModule:
    """Homology of the standard complex by merging branches top-down.

    Angles are processed from the highest grading down; at each merge the
    branch with the lower top leaf dies and leaves ``F[U]/U^((top - a)/2)``.
    The surviving top is the tower.
    """
    L, A = r.leaves, r.angles
    ds = _DisjointSet(len(L))
    top = list(L)
    torsion = []
    for i in sorted(range(len(A)), key=lambda i: (-A[i], i)):
        a = A[i]
        left, right = ds.find(i), ds.find(i + 1)
        young, elder = (left, right) if top[left] < top[right] else (right, left)
        torsion.append((top[young], (top[young] - a) // 2))
        ds.parent[young] = elder
    return GradedModule(top[ds.find(0)], tuple(torsion))


def _bits(b: int):
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


def reduce_homology(c: IotaComplex) -> tuple[list[int], list[tuple[int, int]]]:
    """Homology of any complex via homogeneous cancellation over F[U].

    Repeatedly picks a differential entry with the smallest U-power, clears
    its row and column by homogeneous changes of basis, and splits off the
    pair: exponent 0 cancels, exponent p > 0 leaves ``F[U]/U^p``.  Returns
    the gradings of the surviving free generators and the torsion list.
    """
    n = len(c)
    gr = c.gradings
    cols = [0] * n
    rows = [0] * n
    for x, terms in enumerate(c.diff):
        for y, _ in terms:
            cols[x] ^= 1 << y
            rows[y] ^= 1 << x
    alive = set(range(n))
    torsion = []
    while True:
        best = None
        for x in alive:
            for y in _bits(cols[x]):
                p = (gr[y] - gr[x] + 1) // 2
                if best is None or p < best[0]:
                    best = (p, y, x)
                    if p == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        p, y0, x0 = best
        for y in _bits(cols[x0] & ~(1 << y0)):
            # y0 <- y0 + U^k y
            for x in _bits(rows[y0]):
                cols[x] ^= 1 << y
            rows[y] ^= rows[y0]
            for z in _bits(cols[y]):
                rows[z] ^= 1 << y0
            cols[y0] ^= cols[y]
        for x in _bits(rows[y0] & ~(1 << x0)):
            # x <- x + U^k x0
            for y in _bits(cols[x0]):
                rows[y] ^= 1 << x
            cols[x] ^= cols[x0]
            for z in _bits(rows[x]):
                cols[z] ^= 1 << x0
            rows[x0] ^= rows[x]
        if rows[x0] or cols[y0] or cols[x0] != 1 << y0 or rows[y0] != 1 << x0:
            raise ChainAxiomError("cancelled pair is not isolated; d^2 != 0?")
        cols[x0] = rows[y0] = 0
        alive -= {x0, y0}
        if p > 0:
            torsion.append((gr[y0], p))
    return sorted(gr[x] for x in alive), torsion


def homology_of(c: IotaComplex) -> GradedModule:
    if c.root is not None:
        return elder_rule_homology(c.root)
    free, torsion = reduce_homology(c)
    if len(free) != 1:
        raise ChainAxiomError(f"localized homology has rank {len(free)}, expected 1")
    return GradedModule(free[0], tuple(torsion))


def tensor_product(c1: IotaComplex, c2: IotaComplex) -> IotaComplex:
    """Graded tensor product over F[U] with involution ``J1 (x) J2``."""
    n2 = len(c2)
    names, gradings, kinds, diff, inv = [], [], [], [], []
    for i in range(len(c1)):
        for j in range(n2):
            names.append(f"{c1.names[i]}*{c2.names[j]}")
            gradings.append(c1.gradings[i] + c2.gradings[j])
            kinds.append(f"{c1.kinds[i]}*{c2.kinds[j]}")
            terms = Counter()
            for y, p in c1.diff[i]:
                terms[(y * n2 + j, p)] += 1
            for y, p in c2.diff[j]:
                terms[(i * n2 + y, p)] += 1
            diff.append(tuple(sorted(t for t, cnt in terms.items() if cnt % 2)))
            inv.append(c1.involution[i] * n2 + c2.involution[j])
    return IotaComplex(tuple(names), tuple(gradings), tuple(kinds), tuple(diff), tuple(inv))
