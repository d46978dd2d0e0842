"""Command-line interface.

Exit codes: 0 success, 1 negative verdict, 2 bad input, 3 internal
invariant failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .cache import ExtremaCache
from .errors import (
    CounterexampleFound,
    FormulaInapplicable,
    GrootError,
    InvalidInput,
    InvariantViolation,
)
from .families import (
    closed_form_subroot,
    independence_family_a,
    independence_family_b,
    parse_member,
)
from .graded_root import graded_root_of, horizon_of
from .instanton import family_scan, independence_certificate
from .iota_complex import homology_of, standard_complex_of
from .local_equiv import (
    LocalClass,
    class_of_subroot,
    is_sw_equivalence_pair,
    vanishing_report,
)
from .monotone import MonotoneSubroot, extract_monotone, involutive_correction_terms
from .reproduce import SuiteConfig, max_pipeline_horizon, run_suite
from .seifert import BrieskornTriple, normalize_seifert, parse_triple, plumbing_of

log = logging.getLogger("groot")

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_SCAN_BUDGET = 10**7
DEFAULT_CACHE_DIR = Path.home() / ".cache" / "groot"


@dataclass
class RunConfig:
    cache_dir: Path | None
    workers: int
    scan_budget: int

    def open_cache(self) -> ExtremaCache | None:
        if self.cache_dir is None:
            return None
        try:
            return ExtremaCache(self.cache_dir)
        except OSError as exc:
            log.warning("cache disabled, %s is not writable: %s", self.cache_dir, exc)
            return None


def resolve_config(args) -> RunConfig:
    """Defaults, then the JSON config file, then GROOT_CACHE_DIR, then flags."""
    cache_dir: str | None = str(DEFAULT_CACHE_DIR)
    workers = 1
    budget = DEFAULT_SCAN_BUDGET
    if args.config:
        try:
            conf = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise InvalidInput(f"cannot read config {args.config}: {exc}") from exc
        cache_dir = conf.get("cacheDir", cache_dir)
        workers = int(conf.get("workers", workers))
        budget = int(conf.get("scanBudget", budget))
    if os.environ.get("GROOT_CACHE_DIR"):
        cache_dir = os.environ["GROOT_CACHE_DIR"]
    if args.cache_dir:
        cache_dir = args.cache_dir
    if args.workers is not None:
        workers = args.workers
    if args.scan_budget is not None:
        budget = args.scan_budget
    if args.no_cache:
        cache_dir = None
    if workers < 1 or budget < 1:
        raise InvalidInput("workers and scan budget must be positive")
    return RunConfig(Path(cache_dir) if cache_dir else None, workers, budget)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _parse_positive_triple(text: str) -> BrieskornTriple:
    t = parse_triple(text)
    if t.orientation < 0:
        raise InvalidInput(f"{t}: only positively oriented spheres have a graded root here")
    return t


def resolve_subroot(member, method: str, conf: RunConfig, cache) -> tuple[MonotoneSubroot, str]:
    """Subroot of a parsed member ``(family, n, triple)``.

    ``auto`` runs the tau scan when it fits in the scan budget and falls back
    to the closed form for family members.
    """
    fam, n, t = member
    t = t.positive()
    fits = horizon_of(t) <= conf.scan_budget
    if method == "auto":
        method = "pipeline" if fits or fam is None else "closed-form"
    if method == "closed-form":
        if fam is None:
            raise InvalidInput(f"{t} is not a family member; no closed form")
        return closed_form_subroot(fam, n), method
    if not fits:
        raise InvalidInput(f"{t} needs {horizon_of(t)} scan steps, budget is {conf.scan_budget}")
    return extract_monotone(graded_root_of(t, cache=cache)), "pipeline"


def _signed_member(text: str):
    text = text.strip()
    sign = 1
    if text.startswith("-") and not re.match(r"^-\d", text):
        sign, text = -1, text[1:]
    fam, n, t = parse_member(text)
    return fam, n, (-t if sign < 0 else t)


def cmd_root(args, conf, cache) -> int:
    t = _parse_positive_triple(args.triple)
    r = graded_root_of(t, cache=cache)
    if args.format == "dot":
        print(r.to_dot(name=f"{t.a1}_{t.a2}_{t.a3}"), end="")
    elif args.format == "text":
        print(f"{t}: sigma={r.sigma} d={max(r.leaves)}")
        print(f"leaves {list(r.leaves)}")
        print(f"angles {list(r.angles)}")
    else:
        _emit(r.to_json())
    return EXIT_OK


def cmd_plumbing(args, conf, cache) -> int:
    t = _parse_positive_triple(args.triple)
    out = {"triple": str(t), "seifert": normalize_seifert(t).to_json()}
    out.update(plumbing_of(t).to_json())
    _emit(out)
    return EXIT_OK


def cmd_subroot(args, conf, cache) -> int:
    member = _signed_member(args.member)
    m, method = resolve_subroot(member, args.method, conf, cache)
    if args.format == "json":
        h1, rn = involutive_correction_terms(m)
        out = {"member": args.member.strip(), "method": method}
        out.update(m.to_json())
        out.update({"text": str(m), "d_bar": h1, "d_lower": rn})
        _emit(out)
    else:
        print(m)
    return EXIT_OK


def cmd_class(args, conf, cache) -> int:
    member = _signed_member(args.member)
    m, method = resolve_subroot(member, args.method, conf, cache)
    c = class_of_subroot(m)
    if member[2].orientation < 0:
        c = -c
    _emit({
        "member": args.member.strip(),
        "method": method,
        "subroot": str(m),
        "class": c.to_json(),
        "classText": str(c),
    })
    return EXIT_OK


def cmd_complex(args, conf, cache) -> int:
    t = _parse_positive_triple(args.triple)
    c = standard_complex_of(graded_root_of(t, cache=cache))
    c.check_axioms()
    out = c.to_json()
    out["homology"] = homology_of(c).to_json()
    _emit(out)
    return EXIT_OK


_TERM_RE = re.compile(r"^([+-])?\s*(\d+)?\s*\*?\s*(\S.*)$")


def parse_sum(expr: str):
    """``"Y1(1) # -B(2) # 2*B(1) # -(2,3,7)"`` -> ``[(text, member, multiplicity)]``."""
    terms = []
    for raw in expr.split("#"):
        raw = raw.strip()
        m = _TERM_RE.match(raw)
        if not m:
            raise InvalidInput(f"cannot parse summand {raw!r}")
        sign = -1 if m.group(1) == "-" else 1
        mult = int(m.group(2)) if m.group(2) else 1
        body = m.group(3).strip()
        if body.startswith("-"):
            raise InvalidInput(f"doubled sign in {raw!r}")
        terms.append((raw, parse_member(body), sign * mult))
    return terms


def _map(conf: RunConfig, fn, items):
    if conf.workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=conf.workers) as pool:
        return list(pool.map(fn, items))


def cmd_kernel(args, conf, cache) -> int:
    terms = parse_sum(args.expr)
    resolved = _map(conf, lambda term: resolve_subroot(term[1], args.method, conf, cache), terms)
    total = LocalClass()
    summands = []
    methods = set()
    for (text, member, mult), (m, method) in zip(terms, resolved):
        c = class_of_subroot(m)
        total = total + mult * c
        methods.add(method)
        summands.append({
            "term": text,
            "triple": str(member[2]),
            "multiplicity": mult,
            "subroot": str(m),
            "class": str(c),
        })
    sw_pair = is_sw_equivalence_pair([(member[2], mult) for _, member, mult in terms])
    _emit({
        "summands": summands,
        "method": "+".join(sorted(methods)),
        "class": total.to_json(),
        "classText": str(total),
        "inKernel": total.is_zero(),
        "swEquivalencePair": sw_pair,
        "vanishing": vanishing_report(total, sw_pair),
    })
    return EXIT_OK if total.is_zero() else EXIT_FALSE


def cmd_independence(args, conf, cache) -> int:
    if args.members:
        family = [parse_member(m)[2] for m in args.members]
    elif args.family == "paper-A":
        family = independence_family_a(args.n_max)
    elif args.family == "paper-B":
        family = independence_family_b(args.n_max)
    else:
        raise InvalidInput("give --family or explicit members")
    cert = independence_certificate(family)
    out = cert.to_json()
    if cert.failures:
        out["failures"] = cert.failures
    _emit(out)
    return EXIT_OK if cert.verdict else EXIT_FALSE


def cmd_scan(args, conf, cache) -> int:
    try:
        _emit(family_scan(args.n_max))
    except CounterexampleFound as exc:
        _emit({"n_max": args.n_max, "counterexample": {"claim": exc.claim, "witness": exc.witness}})
        return EXIT_FALSE
    return EXIT_OK


def cmd_reproduce(args, conf, cache) -> int:
    if args.n_pipeline < 1 or args.n_closed_form < 1:
        raise InvalidInput("ranges must be positive")
    need = max_pipeline_horizon(args.n_pipeline)
    if need > conf.scan_budget:
        raise InvalidInput(f"--n-pipeline {args.n_pipeline} needs {need} scan steps, "
                           f"budget is {conf.scan_budget}")
    cfg = SuiteConfig(
        n_pipeline=args.n_pipeline,
        n_closed_form=args.n_closed_form,
        seed=args.seed,
        workers=conf.workers,
        cache=cache,
    )
    results = run_suite(cfg)
    width = max(len(r.name) for r in results)
    print(f"{'#':>2}  {'claim':<{width}}  result  seconds  detail")
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.number:>2}  {r.name:<{width}}  {status:<6}  {r.seconds:7.2f}  {r.detail}")
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(f"failed {r.number}: {r.name}", file=sys.stderr)
        for line in r.failures[:10]:
            print(f"  {line}", file=sys.stderr)
    return EXIT_FALSE if failed else EXIT_OK


# Lets "-2,3,7" or "-Y1(3)" through as positionals instead of unknown options.
_NEGATED_OPERAND = re.compile(r"^-(\d|\(|B\(|Y\d|S|Σ)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="groot", description="Graded roots and local classes of Brieskorn spheres.")
    p.add_argument("--version", action="version", version=f"groot {__version__}")
    p.add_argument("--config", help="JSON file with cacheDir, workers, scanBudget")
    p.add_argument("--cache-dir", help="directory for cached tau extrema")
    p.add_argument("--no-cache", action="store_true", help="do not read or write the cache")
    p.add_argument("--workers", type=int, help="worker threads for family commands")
    p.add_argument("--scan-budget", type=int, help="largest tau scan the pipeline may run")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("root", help="graded root of a Brieskorn sphere")
    s.add_argument("triple")
    s.add_argument("--format", choices=["json", "text", "dot"], default="json")
    s.set_defaults(func=cmd_root)

    s = sub.add_parser("plumbing", help="Seifert invariants and plumbing graph")
    s.add_argument("triple")
    s.set_defaults(func=cmd_plumbing)

    for name, func, fmt in (("subroot", cmd_subroot, True), ("class", cmd_class, False)):
        s = sub.add_parser(name, help=f"monotone subroot or local class of a member ({name})")
        s.add_argument("member", help="B(n), Y1(n), Y2(n), Y3(n) or a triple")
        s.add_argument("--method", choices=["auto", "pipeline", "closed-form"], default="auto")
        if fmt:
            s.add_argument("--format", choices=["text", "json"], default="text")
        s.set_defaults(func=func)

    s = sub.add_parser("complex", help="standard complex and its homology")
    s.add_argument("triple")
    s.set_defaults(func=cmd_complex)

    s = sub.add_parser("kernel", help="decide whether a connected sum has zero local class")
    s.add_argument("expr", help='e.g. "Y1(1) # -B(2) # B(1) # -B(0)"')
    s.add_argument("--method", choices=["auto", "pipeline", "closed-form"], default="auto")
    s.set_defaults(func=cmd_kernel)

    s = sub.add_parser("independence", help="r0 linear-independence certificate")
    s.add_argument("members", nargs="*")
    s.add_argument("--family", choices=["paper-A", "paper-B"])
    s.add_argument("--n-max", type=int, default=100)
    s.set_defaults(func=cmd_independence)

    s = sub.add_parser("scan", help="arithmetic checks behind distinct r0 values")
    s.add_argument("--n-max", type=int, default=100)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("reproduce-paper", help="run the full reproduction suite")
    s.add_argument("--n-pipeline", type=int, default=8)
    s.add_argument("--n-closed-form", type=int, default=50)
    s.add_argument("--seed", type=int, default=SuiteConfig.seed)
    s.set_defaults(func=cmd_reproduce)
    for parser in (p, *sub.choices.values()):
        parser._negative_number_matcher = _NEGATED_OPERAND
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        conf = resolve_config(args)
        cache = conf.open_cache()
        return args.func(args, conf, cache)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FormulaInapplicable as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except InvariantViolation as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GrootError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
