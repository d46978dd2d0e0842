"""Slow, independent re-computations used to cross-check the fast paths.

Nothing here imports the code it is meant to check.
"""
from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction


def brute_force_seifert(a1: int, a2: int, a3: int):
    """All ``(e0, (w1, w2, w3))`` with ``0 < w_i < a_i``, ``e0`` in ``[-3, -1]``
    and ``e0 + sum(w_i/a_i) = -1/(a1 a2 a3)``."""
    target = Fraction(-1, a1 * a2 * a3)
    found = []
    for e0 in (-3, -2, -1):
        for w1 in range(1, a1):
            for w2 in range(1, a2):
                rest = target - e0 - Fraction(w1, a1) - Fraction(w2, a2)
                w3 = rest * a3
                if w3.denominator == 1 and 0 < w3 < a3:
                    found.append((e0, (w1, w2, int(w3))))
    return found


def straight_line_zigzag(a1: int, a2: int, a3: int, e0: int, omegas, sigma: int):
    """Leaf/angle gradings from an explicit tau list.

    Builds every ``tau(n)`` with ``math.ceil`` on exact fractions, drops
    repeated values, then keeps strict local minima and maxima.
    """
    horizon = 2 * a1 * a2 * a3
    tau = [0]
    for n in range(horizon):
        ceilings = sum(math.ceil(Fraction(n * w, a)) for w, a in zip(omegas, (a1, a2, a3)))
        tau.append(tau[-1] + 1 - n * e0 - ceilings)
    dedup = [tau[0]]
    for v in tau[1:]:
        if v != dedup[-1]:
            dedup.append(v)
    leaves, angles = [], []
    for i, v in enumerate(dedup):
        before = dedup[i - 1] if i > 0 else math.inf
        after = dedup[i + 1] if i + 1 < len(dedup) else math.inf
        if v < before and v < after:
            leaves.append(sigma - 2 * v)
        elif v > before and v > after:
            angles.append(sigma - 2 * v)
    return leaves, angles, min(tau)


def brute_force_sigma(center: int, legs) -> tuple[Fraction, int]:
    """``K^2`` and ``s`` from a dense Gauss-Jordan solve of ``Q k = b``."""
    weights = [center]
    edges = []
    for leg in legs:
        prev = 0
        for w in leg:
            weights.append(w)
            edges.append((prev, len(weights) - 1))
            prev = len(weights) - 1
    s = len(weights)
    q = [[Fraction(0)] * s for _ in range(s)]
    for i, w in enumerate(weights):
        q[i][i] = Fraction(w)
    for u, v in edges:
        q[u][v] = q[v][u] = Fraction(1)
    b = [Fraction(-w - 2) for w in weights]
    aug = [row[:] + [bi] for row, bi in zip(q, b)]
    for col in range(s):
        piv = next(r for r in range(col, s) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(s):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [vr - f * vc for vr, vc in zip(aug[r], aug[col])]
    k = [aug[i][s] for i in range(s)]
    return sum((bi * ki for bi, ki in zip(b, k)), Fraction(0)), s


def leading_minors_dense(matrix) -> list[Fraction]:
    """Leading principal minors by fraction-exact elimination."""
    n = len(matrix)
    m = [[Fraction(v) for v in row] for row in matrix]
    minors = []
    det = Fraction(1)
    for k in range(n):
        # determinant of the k+1 leading block = product of pivots without row swaps
        piv = m[k][k]
        det *= piv
        minors.append(det)
        if piv == 0:
            minors.extend([Fraction(0)] * (n - k - 1))
            break
        for r in range(k + 1, n):
            if m[r][k] != 0:
                f = m[r][k] / piv
                m[r] = [vr - f * vk for vr, vk in zip(m[r], m[k])]
    return minors


def _rank_gf2(vectors) -> int:
    basis = {}
    rank = 0
    for v in vectors:
        while v:
            hb = v.bit_length() - 1
            if hb in basis:
                v ^= basis[hb]
            else:
                basis[hb] = v
                rank += 1
                break
    return rank


def truncated_homology_dimensions(gradings, diff, m: int) -> dict[int, int]:
    """Graded dimensions of ``H(C / U^m C)`` by linear algebra over GF(2).

    ``diff[x]`` lists ``(y, p)`` with ``dx = sum U^p y``.  The truncated
    complex has basis ``U^j x`` for ``0 <= j < m`` in grading ``gr(x) - 2j``.
    """
    basis_at = defaultdict(list)
    for x, g in enumerate(gradings):
        for j in range(m):
            basis_at[g - 2 * j].append((x, j))
    index = {g: {b: i for i, b in enumerate(bs)} for g, bs in basis_at.items()}
    rank_from = {}
    for g, bs in basis_at.items():
        images = []
        for x, j in bs:
            vec = 0
            for y, p in diff[x]:
                if j + p < m:
                    vec ^= 1 << index[g - 1][(y, j + p)]
            images.append(vec)
        rank_from[g] = _rank_gf2(images)
    dims = {}
    for g, bs in basis_at.items():
        d = len(bs) - rank_from[g] - rank_from.get(g + 1, 0)
        if d:
            dims[g] = d
    return dims


def tau_minimum(a1: int, a2: int, a3: int, e0: int, omegas) -> int:
    return straight_line_zigzag(a1, a2, a3, e0, omegas, 0)[2]


def hirzebruch_jung(alpha: int, omega: int) -> list[int]:
    """``alpha/omega = c1 - 1/(c2 - ...)`` by repeated ceilings of fractions."""
    x = Fraction(alpha, omega)
    out = []
    while True:
        c = math.ceil(x)
        out.append(c)
        if c == x:
            return out
        x = 1 / (c - x)


def brute_force_root(a1: int, a2: int, a3: int):
    """``(sigma, leaves, angles, min tau)`` with no use of the fast pipeline."""
    (e0, omegas), = brute_force_seifert(a1, a2, a3)
    legs = [[-c for c in hirzebruch_jung(a, w)] for a, w in zip((a1, a2, a3), omegas)]
    k2, s = brute_force_sigma(e0, legs)
    sigma = (k2 + s) / 4
    assert sigma.denominator == 1
    leaves, angles, tmin = straight_line_zigzag(a1, a2, a3, e0, omegas, int(sigma))
    return int(sigma), leaves, angles, tmin
