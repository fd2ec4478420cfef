"""Jacobi scan and Killing matrix: numba loops vs the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--algebras f4,e7,e8]

Each kernel is warmed up once (this also triggers numba compilation), then
timed ``--repeat`` times; the best time is reported.  Results of the two
backends are compared before timing.
"""

import argparse
import time

import numpy as np

from lieforge import build_algebra
from lieforge.kernels import HAVE_NUMBA, jacobi_first_failure, killing_matrix


def best_time(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def mutate(L):
    M = L.copy()
    key = sorted(M.table)[len(M.table) // 2]
    k = min(M.table[key])
    M.table[key][k] = -M.table[key][k]
    return M


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--algebras", default="f4,e7,e8")
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'algebra':8s} {'kernel':14s} {'numpy [s]':>10s} {'numba [s]':>10s} {'speedup':>8s}")
    for kind in args.algebras.split(","):
        L = build_algebra(kind)
        cases = [("jacobi", L), ("jacobi/broken", mutate(L))]
        for label, alg in cases:
            _, ptr, idx, val = alg.to_arrays()
            runs = {
                b: (lambda b=b: jacobi_first_failure(alg.dim, ptr, idx, val, backend=b))
                for b in ("numpy", "numba")
            }
            a, b = runs["numpy"](), runs["numba"]()
            assert (a is None) == (b is None)
            if a is not None:
                assert a[0] == b[0] and np.array_equal(a[1], b[1])
            t_np = best_time(runs["numpy"], args.repeat)
            t_nb = best_time(runs["numba"], args.repeat)
            print(f"{kind:8s} {label:14s} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:7.1f}x")

        _, ptr, idx, val = L.to_arrays()
        k_np = lambda: killing_matrix(L.dim, ptr, idx, val, backend="numpy")  # noqa: E731
        k_nb = lambda: killing_matrix(L.dim, ptr, idx, val, backend="numba")  # noqa: E731
        assert np.array_equal(k_np(), k_nb())
        t_np = best_time(k_np, args.repeat)
        t_nb = best_time(k_nb, args.repeat)
        print(f"{kind:8s} {'killing':14s} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
