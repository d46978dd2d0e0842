"""Reproduction suite: one check per acceptance criterion.

Each check returns a :class:`ClaimResult`.  The checks compare the fast
pipeline with values stated in the literature or with the slow routines in
:mod:`groot.oracles`.  Random inputs come from a seeded generator.
"""
from __future__ import annotations

import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracles
from .errors import GrootError
from .families import (
    B,
    FAMILIES,
    Y1,
    Y2,
    Y3,
    closed_form_params,
    closed_form_subroot,
    independence_family_a,
    independence_family_b,
    kernel_family_1,
    kernel_family_2,
    kernel_family_3,
)
from .graded_root import graded_root_of, horizon_of
from .instanton import family_scan, independence_certificate, r_zero
from .iota_complex import (
    elder_rule_homology,
    homology_of,
    reduce_homology,
    standard_complex_of,
    tensor_product,
    tower,
)
from .local_equiv import LocalClass, class_of_subroot, subroot_of
from .monotone import MonotoneSubroot, extract_monotone
from .seifert import BrieskornTriple, grading_shift_sigma, plumbing_of

DEFAULT_SEED = 20240917
# Wall-clock ceiling for criterion 1, in seconds.
PIPELINE_TIME_LIMIT = 60.0


@dataclass
class SuiteConfig:
    n_pipeline: int = 8
    n_closed_form: int = 50
    n_independence: int = 100
    n_independence_b: int = 25
    n_scan: int = 100
    n_axiom_triples: int = 300
    axiom_max_product: int = 10**5
    n_oracle_roots: int = 50
    oracle_max_product: int = 10**4
    n_tensor_pairs: int = 100
    tensor_max_product: int = 1200
    tensor_max_generators: int = 25
    seed: int = DEFAULT_SEED
    workers: int = 4
    cache: object = None


@dataclass
class ClaimResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name} ({self.seconds:.2f}s) {self.detail}"


def random_coprime_triples(rng: random.Random, count: int, max_product: int):
    """Distinct pairwise coprime ``a1 < a2 < a3`` with product at most ``max_product``."""
    seen = set()
    out = []
    top1 = round(max_product ** (1 / 3))
    while len(out) < count:
        a1 = rng.randint(2, top1)
        hi2 = math.isqrt(max_product // a1)
        if hi2 <= a1:
            continue
        a2 = rng.randint(a1 + 1, hi2)
        hi3 = max_product // (a1 * a2)
        if hi3 <= a2:
            continue
        a3 = rng.randint(a2 + 1, hi3)
        if math.gcd(a1, a2) != 1 or math.gcd(a1, a3) != 1 or math.gcd(a2, a3) != 1:
            continue
        if (a1, a2, a3) in seen:
            continue
        seen.add((a1, a2, a3))
        out.append(BrieskornTriple(a1, a2, a3))
    return out


def small_triples(max_product: int):
    """Every pairwise coprime ``a1 < a2 < a3`` with product at most ``max_product``."""
    out = []
    a1 = 2
    while a1 * (a1 + 1) * (a1 + 2) <= max_product:
        a2 = a1 + 1
        while a1 * a2 * (a2 + 1) <= max_product:
            if math.gcd(a1, a2) == 1:
                for a3 in range(a2 + 1, max_product // (a1 * a2) + 1):
                    if math.gcd(a1, a3) == 1 and math.gcd(a2, a3) == 1:
                        out.append(BrieskornTriple(a1, a2, a3))
            a2 += 1
        a1 += 1
    return out


def _prefetch(triples, cfg: SuiteConfig):
    """Compute graded roots concurrently; the compiled scan releases the GIL."""
    with ThreadPoolExecutor(max_workers=max(1, cfg.workers)) as pool:
        return list(pool.map(lambda t: graded_root_of(t, cache=cfg.cache), triples))


def check_pipeline_subroots(cfg: SuiteConfig) -> ClaimResult:
    start = time.perf_counter()
    failures = []
    jobs = [("B", 0)]
    for n in range(1, cfg.n_pipeline + 1):
        jobs += [("B", n), ("Y1", n), ("Y2", n)]
    jobs += [("Y3", n) for n in range(1, min(4, cfg.n_pipeline) + 1)]
    roots = _prefetch([FAMILIES[f](n) for f, n in jobs], cfg)
    for (fam, n), root in zip(jobs, roots):
        got = extract_monotone(root)
        want = MonotoneSubroot.reduced(closed_form_params(fam, n))
        if got != want:
            failures.append(f"{fam}({n}): got {got}, want {want}")
    elapsed = time.perf_counter() - start
    if elapsed >= PIPELINE_TIME_LIMIT:
        failures.append(f"took {elapsed:.1f}s >= {PIPELINE_TIME_LIMIT}s")
    return ClaimResult(
        1, "full-pipeline monotone subroots", not failures,
        f"{len(jobs)} manifolds", elapsed, failures,
    )


SIGMA_3_4_13_LEAVES = [-6, -2, 0, 0, -2, -6]
SIGMA_3_4_13_ANGLES = [-8, -4, -2, -4, -8]


def check_sigma_3_4_13(cfg: SuiteConfig) -> ClaimResult:
    start = time.perf_counter()
    failures = []
    t = BrieskornTriple(3, 4, 13)
    root = graded_root_of(t, cache=cfg.cache)
    sigma, leaves, angles, _ = oracles.brute_force_root(3, 4, 13)
    if root.leaf_count != 6:
        failures.append(f"{root.leaf_count} leaves, want 6")
    if list(root.leaves) != SIGMA_3_4_13_LEAVES or list(root.angles) != SIGMA_3_4_13_ANGLES:
        failures.append(f"zigzag {root.leaves}/{root.angles}")
    if leaves != SIGMA_3_4_13_LEAVES or angles != SIGMA_3_4_13_ANGLES or sigma != root.sigma:
        failures.append(f"oracle disagrees: {sigma} {leaves}/{angles}")
    m = extract_monotone(root)
    if str(m) != "M(0,-2)":
        failures.append(f"subroot {m}")
    return ClaimResult(
        2, "Sigma(3,4,13) end to end", not failures, f"subroot {m}",
        time.perf_counter() - start, failures,
    )


def _expected_family_class(fam: str, n: int) -> LocalClass:
    X = LocalClass.basis
    T = LocalClass(t=1)
    if fam == "Y1":
        return X(2 * n) - X(n) + n * T
    if fam == "Y2":
        return X(2 * n - 1) - X(n) + n * T
    if fam == "Y3":
        return X(4 * n)
    raise ValueError(fam)


def check_class_identities(cfg: SuiteConfig) -> ClaimResult:
    start = time.perf_counter()
    failures = []
    count = 0
    for n in range(1, cfg.n_closed_form + 1):
        for fam in ("Y1", "Y2", "Y3"):
            c = class_of_subroot(closed_form_subroot(fam, n))
            count += 1
            if c != _expected_family_class(fam, n) or c.shift_rule_used:
                failures.append(f"closed form {fam}({n}): {c}")
    pipeline = [(fam, n) for n in range(1, cfg.n_pipeline + 1) for fam in ("Y1", "Y2", "Y3")]
    roots = _prefetch([FAMILIES[f](n) for f, n in pipeline], cfg)
    for (fam, n), root in zip(pipeline, roots):
        c = class_of_subroot(extract_monotone(root))
        count += 1
        if c != _expected_family_class(fam, n) or c.shift_rule_used:
            failures.append(f"pipeline {fam}({n}): {c}")
    return ClaimResult(
        3, "class identities for Y1, Y2, Y3", not failures, f"{count} identities",
        time.perf_counter() - start, failures,
    )


def _closed_form_sum(summands) -> LocalClass:
    total = LocalClass()
    for (fam, n), mult in summands:
        total = total + mult * class_of_subroot(closed_form_subroot(fam, n))
    return total


def _pipeline_sum(summands, cfg) -> LocalClass:
    total = LocalClass()
    for (fam, n), mult in summands:
        total = total + mult * class_of_subroot(subroot_of(FAMILIES[fam](n), cfg.cache))
    return total


def check_kernel_families(cfg: SuiteConfig) -> ClaimResult:
    start = time.perf_counter()
    failures = []
    checked = 0
    for n in range(1, cfg.n_closed_form + 1):
        for build in (kernel_family_1, kernel_family_2, kernel_family_3):
            summands = build(n)
            if not _closed_form_sum(summands).is_zero():
                failures.append(f"{build.__name__}({n}) is nonzero")
            for i in range(len(summands)):
                for bump in (1, -1):
                    perturbed = list(summands)
                    member, mult = perturbed[i]
                    perturbed[i] = (member, mult + bump)
                    if _closed_form_sum(perturbed).is_zero():
                        failures.append(f"{build.__name__}({n}) perturbed at {member} still zero")
            checked += 1
    for n in range(1, cfg.n_pipeline + 1):
        for build in (kernel_family_1, kernel_family_2, kernel_family_3):
            if build is kernel_family_3 and n > 4:
                continue
            if not _pipeline_sum(build(n), cfg).is_zero():
                failures.append(f"pipeline {build.__name__}({n}) is nonzero")
            checked += 1
    return ClaimResult(
        4, "kernel families vanish; perturbations do not", not failures,
        f"{checked} family members", time.perf_counter() - start, failures,
    )


def check_independence(cfg: SuiteConfig) -> ClaimResult:
    start = time.perf_counter()
    failures = []
    cert_a = independence_certificate(independence_family_a(cfg.n_independence))
    cert_b = independence_certificate(independence_family_b(cfg.n_independence_b))
    for label, cert in (("A", cert_a), ("B", cert_b)):
        if not cert.verdict:
            failures.append(f"family {label}: {cert.checks}")
    if r_zero(-B(0)) != r_zero(-BrieskornTriple(2, 3, 5)) or str(r_zero(-B(0))) != "1/120":
        failures.append(f"r0(-B(0)) = {r_zero(-B(0))}")
    # distinct r0 <=> distinct exponent products, both ways
    for cert in (cert_a, cert_b):
        products = {t.product for t in cert.family}
        values = {r.value for r in cert.r_values if r is not None}
        if (len(products) == len(cert.family)) != (len(values) == len(cert.family)):
            failures.append("distinctness of r0 and of products disagree")
        if values != {Fraction(1, 4 * p) for p in products}:
            failures.append("r0 values are not 1/(4 a1 a2 a3)")
    try:
        family_scan(cfg.n_scan)
    except GrootError as exc:
        failures.append(str(exc))
    return ClaimResult(
        5, "r0 independence certificates", not failures,
        f"|A|={len(cert_a.family)} |B|={len(cert_b.family)}",
        time.perf_counter() - start, failures,
    )


def check_chain_axioms(cfg: SuiteConfig) -> ClaimResult:
    start = time.perf_counter()
    failures = []
    rng = random.Random(cfg.seed)
    triples = random_coprime_triples(rng, cfg.n_axiom_triples, cfg.axiom_max_product)
    roots = _prefetch(triples, cfg)
    for t, root in zip(triples, roots):
        try:
            if not root.is_symmetric:
                failures.append(f"{t}: not palindromic")
            if root.sigma % 2 or grading_shift_sigma(plumbing_of(t)) != root.sigma:
                failures.append(f"{t}: sigma {root.sigma}")
            standard_complex_of(root).check_axioms()
        except GrootError as exc:
            failures.append(f"{t}: {exc}")
    return ClaimResult(
        6, "chain axioms, symmetry, even sigma", not failures,
        f"{len(triples)} random triples", time.perf_counter() - start, failures,
    )


def check_homology_oracle(cfg: SuiteConfig) -> ClaimResult:
    start = time.perf_counter()
    failures = []
    rng = random.Random(cfg.seed + 7)
    triples = random_coprime_triples(rng, cfg.n_oracle_roots, cfg.oracle_max_product)
    for t in triples:
        root = graded_root_of(t, cache=cfg.cache)
        c = standard_complex_of(root)
        module = homology_of(c)
        m = (max(c.gradings) - min(c.gradings)) // 2 + 2
        want = oracles.truncated_homology_dimensions(c.gradings, c.diff, m)
        got = module.truncated_dimensions(m)
        if want != got:
            diff = {g: (got.get(g, 0), want.get(g, 0)) for g in set(want) | set(got)
                    if got.get(g, 0) != want.get(g, 0)}
            failures.append(f"{t}: dims differ {diff}")
        sigma, _, _, tmin = oracles.brute_force_root(*t.exponents)
        if module.tower_top != sigma - 2 * tmin:
            failures.append(f"{t}: tower {module.tower_top} != {sigma} - 2*{tmin}")
    return ClaimResult(
        7, "homology matches truncated linear algebra", not failures,
        f"{len(triples)} random roots", time.perf_counter() - start, failures,
    )


def check_tensor_additivity(cfg: SuiteConfig) -> ClaimResult:
    start = time.perf_counter()
    failures = []
    rng = random.Random(cfg.seed + 13)
    pool = [
        standard_complex_of(graded_root_of(t, cache=cfg.cache))
        for t in small_triples(cfg.tensor_max_product)
    ]
    pool = [c for c in pool if len(c) <= cfg.tensor_max_generators]
    unit = tower(0)
    for _ in range(cfg.n_tensor_pairs):
        c1, c2 = rng.choice(pool), rng.choice(pool)
        prod = tensor_product(c1, c2)
        try:
            prod.check_axioms()
            top = homology_of(prod).tower_top
        except GrootError as exc:
            failures.append(str(exc))
            continue
        want = homology_of(c1).tower_top + homology_of(c2).tower_top
        if top != want:
            failures.append(f"tower {top} != {want}")
    for c in pool:
        with_unit = tensor_product(c, unit)
        free, torsion = reduce_homology(with_unit)
        if free != [homology_of(c).tower_top] or sorted(torsion) != sorted(
            elder_rule_homology(c.root).torsion
        ):
            failures.append("identity law fails")
    if homology_of(tensor_product(tower(2), tower(2))).tower_top != 4:
        failures.append("tower(2) (x) tower(2) is not tower(4)")
    return ClaimResult(
        8, "tensor d-additivity and identity", not failures,
        f"{cfg.n_tensor_pairs} pairs, {len(pool)} unit checks",
        time.perf_counter() - start, failures,
    )


CHECKS = [
    check_pipeline_subroots,
    check_sigma_3_4_13,
    check_class_identities,
    check_kernel_families,
    check_independence,
    check_chain_axioms,
    check_homology_oracle,
    check_tensor_additivity,
]


def max_pipeline_horizon(n_pipeline: int) -> int:
    """Largest tau scan the pipeline checks will run."""
    triples = [B(0)]
    for n in range(1, n_pipeline + 1):
        triples += [B(n), Y1(n), Y2(n), B(2 * n), B(2 * n - 1)]
        if n <= 4:
            triples += [Y3(n), B(4 * n)]
    return max(horizon_of(t) for t in triples)


def run_suite(cfg: SuiteConfig) -> list[ClaimResult]:
    results = []
    for check in CHECKS:
        start = time.perf_counter()
        try:
            res = check(cfg)
        except GrootError as exc:
            res = ClaimResult(len(results) + 1, check.__name__, False, f"error: {exc}",
                              time.perf_counter() - start, [str(exc)])
        results.append(res)
    return results
