"""Compare the compiled and pure-Python binary64 kernels.

    python bench/benchmark.py [--repeat 5] [--points 2000] [--tol 1e-10]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from recipbinom import kernels


def quad_workload(count: int, seed: int) -> list[tuple[int, int, int, float]]:
    rng = random.Random(seed)
    points = []
    for _ in range(count):
        b = rng.randint(1, 30)
        c = rng.randint(1, b)
        points.append((rng.randint(0, 40), b, c, rng.uniform(-2.0, 2.0)))
    return points


def time_quad(impl, points, tol: float) -> tuple[float, int]:
    evals = 0
    start = time.perf_counter()
    for n, b, c, x in points:
        evals += impl.adaptive_quad(n, b, c, x, tol, 10**6)[2]
    return time.perf_counter() - start, evals


def time_sums(impl, values, rounds: int) -> float:
    start = time.perf_counter()
    for _ in range(rounds):
        impl.naive_sum(values)
        impl.compensated_sum(values)
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--points", type=int, default=2000)
    parser.add_argument("--tol", type=float, default=1e-10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = [kernels.load(prefer_compiled=False)]
    compiled = kernels.load(prefer_compiled=True)
    if compiled[0] != "python":
        backends.append(compiled)
    else:
        print("compiled kernels not built; timing the pure-Python backend only")

    points = quad_workload(args.points, args.seed)
    values = [random.Random(args.seed).uniform(-1, 1) for _ in range(10_000)]

    results = {}
    for name, impl in backends:
        quad_times, evals = [], 0
        for _ in range(args.repeat):
            elapsed, evals = time_quad(impl, points, args.tol)
            quad_times.append(elapsed)
        sum_times = [time_sums(impl, values, 20) for _ in range(args.repeat)]
        results[name] = (statistics.median(quad_times), statistics.median(sum_times), evals)

    print(f"{'backend':<8} {'quadrature [s]':>15} {'integrand evals':>16} {'summation [s]':>14}")
    for name, (tq, ts, evals) in results.items():
        print(f"{name:<8} {tq:>15.4f} {evals:>16d} {ts:>14.4f}")
    if len(results) == 2:
        (tq_py, ts_py, _), (tq_cy, ts_cy, _) = results["python"], results["cython"]
        print(f"speedup  {tq_py / tq_cy:>14.1f}x {'':>16} {ts_py / ts_cy:>13.1f}x")


if __name__ == "__main__":
    main()
