"""Benchmark the batched rank kernel: numba jit against the numpy fallback.

Run as a script:

    python3 benchmarks/bench_kernels.py [--repeats N]

Both execution paths are timed on identical seeded batches shaped like
the tangent-matrix workloads (4x8 through 32x64 systems, stacked a few
thousand deep), and their outputs are compared entry for entry before
any timing is reported. WDSMOOTH_NO_NUMBA=1 removes the compiled path,
in which case only the fallback row is printed.
"""

import argparse
import time

import numpy as np

from wdsmooth import kernels

WORKLOADS = [
    # (label, batch, rows, cols, p)  roughly: GL2/GL3/GL4 tangent systems
    ("gl2-tangent", 4000, 4, 8, 7),
    ("gl3-tangent", 2000, 9, 18, 11),
    ("gl4-tangent", 800, 16, 32, 11),
    ("wide-rect", 400, 32, 64, 101),
]


def time_impl(impl, batch, p, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        work = batch.copy()
        t0 = time.perf_counter()
        result = impl(work, p)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats per workload (best is kept)")
    args = parser.parse_args()

    impls = dict(kernels.IMPLEMENTATIONS)
    if "numba" in impls:
        # trigger compilation outside the timed region
        warm = np.zeros((2, 3, 4), dtype=np.int64)
        impls["numba"](warm, 7)
    else:
        print("numba path unavailable (WDSMOOTH_NO_NUMBA set or numba missing)")

    rng = np.random.default_rng(0)
    header = "%-12s %8s %10s" % ("workload", "batch", "numpy[s]")
    if "numba" in impls:
        header += " %10s %8s" % ("numba[s]", "speedup")
    print(header)

    for label, count, rows, cols, p in WORKLOADS:
        batch = rng.integers(0, p, size=(count, rows, cols)).astype(np.int64)
        t_np, out_np = time_impl(impls["numpy"], batch, p, args.repeats)
        line = "%-12s %8d %10.4f" % (label, count, t_np)
        if "numba" in impls:
            t_nb, out_nb = time_impl(impls["numba"], batch, p, args.repeats)
            if not np.array_equal(out_np, out_nb):
                raise SystemExit("implementations disagree on %s" % label)
            line += " %10.4f %8.1fx" % (t_nb, t_np / t_nb if t_nb else float("inf"))
        print(line)


if __name__ == "__main__":
    main()
