"""Timing comparison of the census kernels across backends.

Runs the full pattern-pair census of S_n on every available backend and
prints one row per size.  Backends must agree cell for cell or the run
aborts.  The first numba call pays the jit compile (cached on disk), so a
small warmup is timed separately and the table shows steady-state numbers.

Usage: python bench/bench_census.py [--sizes 5 6 7 8] [--workers 1]
Set CPL_NO_NUMBA=1 to benchmark the pure backend alone.
"""

import argparse
import time

import numpy as np

from cyclepat import kernels


def time_census(n: int, backend: str, workers: int):
    start = time.perf_counter()
    table = kernels.pair_census(n, backend=backend, workers=workers)
    return time.perf_counter() - start, table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[5, 6, 7, 8])
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}; workers: {args.workers}")
    if "numba" in backends:
        start = time.perf_counter()
        kernels.pair_census(3, backend="numba")
        print(f"numba warmup (compile, n=3): {time.perf_counter() - start:.2f}s")

    header = f"{'n':>3s}" + "".join(f"{name:>12s}" for name in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for n in args.sizes:
        times = {}
        reference = None
        for backend in backends:
            elapsed, table = time_census(n, backend, args.workers)
            times[backend] = elapsed
            if reference is None:
                reference = table
            elif not np.array_equal(reference, table):
                raise SystemExit(f"backend disagreement at n={n}")
        row = f"{n:>3d}" + "".join(f"{times[name]:>11.3f}s" for name in backends)
        if len(backends) == 2:
            row += f"{times['python'] / times['numba']:>9.0f}x"
        print(row)


if __name__ == "__main__":
    main()
