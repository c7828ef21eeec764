"""Compare the compiled and pure-Python Jacobi kernels.

Usage: python benchmarks/bench_jacobi.py [--dims 4,8,16,32] [--reps 20] [--seed 0]
"""

import argparse
import time

import numpy as np

from renyivar import spectral
from renyivar._kernels import BACKEND, jacobi_eigh, jacobi_eigh_py


def time_kernel(fn, mats, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        for m in mats:
            fn(m.copy())
        best = min(best, time.perf_counter() - t0)
    return best / len(mats)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--dims", default="4,8,16,32")
    ap.add_argument("--reps", type=int, default=20)
    ap.add_argument("--batch", type=int, default=10, help="matrices per dim")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    dims = [int(d) for d in args.dims.split(",")]
    print(f"active backend: {BACKEND}")
    print(f"{'dim':>5} {'compiled (ms)':>14} {'python (ms)':>12} {'speedup':>8} {'agree':>6}")
    for dim in dims:
        mats = [spectral.random_hermitian(dim, [args.seed, dim, i]).mat
                for i in range(args.batch)]
        t_c = time_kernel(jacobi_eigh, mats, args.reps)
        t_p = time_kernel(jacobi_eigh_py, mats, args.reps)
        va, _, _ = jacobi_eigh(mats[0].copy())
        vb, _, _ = jacobi_eigh_py(mats[0].copy())
        agree = np.allclose(np.sort(va), np.sort(vb), atol=1e-12)
        print(f"{dim:>5} {t_c * 1e3:>14.3f} {t_p * 1e3:>12.3f} "
              f"{t_p / t_c:>8.1f}x {'yes' if agree else 'NO':>6}")


if __name__ == "__main__":
    main()
