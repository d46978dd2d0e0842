"""Time the tau-extrema scan on the compiled and pure-Python backends.

    python benchmarks/bench_scan.py [--repeat 3]
"""
import argparse
import time

from groot import scan
from groot.families import B, Y1, Y2, Y3
from groot.graded_root import horizon_of
from groot.seifert import BrieskornTriple, normalize_seifert

CASES = [BrieskornTriple(3, 4, 13), B(4), Y1(4), Y2(8), Y1(8), Y3(4), BrieskornTriple(23, 29, 31)]


def time_backend(t: BrieskornTriple, backend: str, repeat: int) -> float:
    d = normalize_seifert(t)
    alphas = [a for a, _ in d.legs]
    omegas = [w for _, w in d.legs]
    h = horizon_of(t)
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        scan.tau_extrema(d.e0, alphas, omegas, h, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = ["python"] + (["cython"] if scan.BACKEND == "cython" else [])
    header = f"{'triple':<22}{'steps':>10}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for t in CASES:
        times = [time_backend(t, b, args.repeat) for b in backends]
        row = f"{str(t):<22}{horizon_of(t):>10}" + "".join(f"{x * 1e3:>10.2f}ms" for x in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
