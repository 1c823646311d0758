"""Time the BFS on the reverse permutation with both kernel backends.

    python benchmarks/bench_search.py --n 8 9 10 --repeat 3

The numba kernel is warmed up on n=4 first so compile time is not counted.
"""

import argparse
import statistics
import time

from lresort import _kernels as K
from lresort.perm import reverse_perm
from lresort.search import optimal_distance


def bench(n, backend, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = optimal_distance(reverse_perm(n), backend=backend)
        times.append(time.perf_counter() - t0)
    return result, times


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[8, 9, 10])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["numpy"] + (["numba"] if K.HAVE_NUMBA else [])
    if "numba" in backends:
        optimal_distance(reverse_perm(4), backend="numba")

    print(f"{'n':>3} {'backend':>8} {'dist':>5} {'expanded':>10} {'best s':>8} {'median s':>9} {'states/s':>11}")
    for n in args.n:
        ref = None
        for backend in backends:
            result, times = bench(n, backend, args.repeat)
            if ref is None:
                ref = result
            elif (result.distance, result.witness) != (ref.distance, ref.witness):
                raise SystemExit(f"backends disagree at n={n}")
            best = min(times)
            rate = result.stats.states_expanded / best if best else float("inf")
            print(
                f"{n:>3} {backend:>8} {result.distance:>5} {result.stats.states_expanded:>10} "
                f"{best:>8.3f} {statistics.median(times):>9.3f} {rate:>11.0f}"
            )


if __name__ == "__main__":
    main()
