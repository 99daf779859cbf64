"""Compare the numba and numpy kernel backends on sized-up workloads.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on an input large enough to dominate dispatch cost,
with one untimed warmup call per backend (JIT compilation happens
there).  Outputs agree across backends or the run aborts.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from matsemi._kernels import available_backends, backend_functions


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_power_iteration(repeat: int):
    rng = np.random.default_rng(1)
    a = rng.random((400, 400)) + 0.01
    args = (a, 1e-12, 100000)
    return "power_iteration (dense 400x400)", args, lambda f: f(*args)


def bench_sign_search(repeat: int):
    rng = np.random.default_rng(2)
    n = 18
    # mixed signs everywhere: infeasible, so the scan covers all masks
    mats = rng.integers(-1, 2, size=(3, n, n)).astype(np.int8)
    mats[0, 0, 1] = 1
    mats[1, 0, 1] = -1
    args = (mats,)
    return f"sign_search (3 matrices, n={n}, full scan)", args, \
        lambda f: f(*args)


def bench_subset_search(repeat: int):
    rng = np.random.default_rng(3)
    n = 16
    pattern = np.ones((n, n), dtype=bool)  # nothing qualifies: full scan
    order = np.arange(1, (1 << n) - 1, dtype=np.int64)
    args = (pattern, order)
    return f"subset_search (n={n}, {order.size} subsets)", args, \
        lambda f: f(*args)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timed repetitions per backend (best wins)")
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'kernel':44s} " + " ".join(f"{b:>12s}" for b in backends))

    for name, bench in (("power_iteration", bench_power_iteration),
                        ("sign_search", bench_sign_search),
                        ("subset_search", bench_subset_search)):
        label, _inputs, call = bench(args.repeat)
        times = []
        results = []
        for b in backends:
            f = backend_functions(b)[name]
            call(f)  # warmup / JIT
            times.append(_best_of(lambda: call(f), args.repeat))
            results.append(call(f))
        if name == "power_iteration":
            rhos = [r[0] for r in results]
            agree = max(rhos) - min(rhos) < 1e-9
        else:
            agree = len(set(int(r) for r in results)) == 1
        if not agree:
            print(f"BACKEND DISAGREEMENT on {label}: {results}")
            return 1
        row = " ".join(f"{t * 1e3:10.2f}ms" for t in times)
        print(f"{label:44s} {row}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
