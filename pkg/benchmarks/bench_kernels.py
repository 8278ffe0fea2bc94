"""Numba vs pure-numpy batch kernels.

    python3 benchmarks/bench_kernels.py [--count 100000] [--repeat 5]

Times cart->susp, the inverse map and the forward map for a few polygon
sizes. Each numba kernel is called once first so compilation is not timed.
"""
import argparse
import time

import numpy as np

from polysphere import _accel
from polysphere import kernels as K
from polysphere.geometry import EXACT_TOL
from polysphere.polygon import ModuliSpec
from polysphere.sphere import sample_uniform_batch


def best_of(func, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        func()
        times.append(time.perf_counter() - t)
    return min(times)


def bench(spec, count, repeat):
    X = sample_uniform_batch(spec, 0, count)
    T, i0 = K.cart_to_susp_np(X, EXACT_TOL)
    V = K.phi_inverse_np(spec.n, spec.r, T, i0)
    jobs = {
        "cart_to_susp": ("cart_to_susp", (X, EXACT_TOL)),
        "phi_inverse": ("phi_inverse", (spec.n, spec.r, T, i0)),
        "phi_forward": ("phi_forward", (spec.n, spec.r, V, EXACT_TOL)),
    }
    rows = []
    for label, (name, args) in jobs.items():
        t_np = best_of(lambda: getattr(K, f"{name}_np")(*args), repeat)
        t_nb = None
        if _accel.HAVE_NUMBA:
            nb = getattr(K, f"{name}_nb")
            nb(*args)  # compile
            t_nb = best_of(lambda: nb(*args), repeat)
        rows.append((label, t_np, t_nb))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{args.count} samples, best of {args.repeat}; numba available: {_accel.HAVE_NUMBA}")
    print(f"{'n':>3} {'kernel':<14} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for n in (5, 8, 12):
        for label, t_np, t_nb in bench(ModuliSpec(n, n - 1.5), args.count, args.repeat):
            if t_nb is None:
                print(f"{n:>3} {label:<14} {t_np * 1e3:>10.1f} {'-':>10} {'-':>8}")
            else:
                print(f"{n:>3} {label:<14} {t_np * 1e3:>10.1f} {t_nb * 1e3:>10.1f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
