#!/usr/bin/env python3
"""Benchmark the determinant-sign kernels and the orientation predicate.

Compares the compiled fixed-width kernel, the pure-Python kernel, and a
plain floating-point determinant baseline on random small matrices.

Usage: python3 benchmarks/bench_detsign.py [N]
"""

import gc
import random
import sys
import time

from sospred import exact
from sospred.predicates import Point, positive


def best_of(fn, repeats=5):
    times = []
    gc.disable()
    try:
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t0)
    finally:
        gc.enable()
    return min(times)


def bench_kernels(n, rng):
    print(f"== det_sign kernels, {n} matrices each ==")
    from sospred import _detsign_py as pure
    native = None
    if exact.native_available():
        from sospred import _detsign as native
    for k in (2, 3, 4):
        mats = [tuple(rng.randint(-10**6, 10**6) for _ in range(k * k))
                for _ in range(n)]
        t_pure = best_of(lambda: [pure.det_sign(m) for m in mats])
        line = f"  {k}x{k}:  pure {t_pure / n * 1e6:8.3f} us/call"
        if native is not None:
            t_nat = best_of(lambda: [native.det_sign(m) for m in mats])
            line += (f"   native {t_nat / n * 1e6:8.3f} us/call"
                     f"   speedup {t_pure / t_nat:5.2f}x")
        print(line)


def bench_positive(n, rng):
    print(f"== positive() 2D orientation, {n} calls each ==")
    tris = [[Point(i, (rng.randint(0, 10**6), rng.randint(0, 10**6)))
             for i in range(3)] for _ in range(n)]
    flat = [tuple(float(x) for p in t for x in p.coords) for t in tris]

    def float_orient():
        for ax, ay, bx, by, cx, cy in flat:
            ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax) > 0.0)

    base = best_of(float_orient)
    print(f"  float baseline  {base / n * 1e6:8.3f} us/call")
    for backend in ("pure", "native"):
        if backend == "native" and not exact.native_available():
            print("  native          (kernel not built)")
            continue
        exact.select_backend(backend)
        t = best_of(lambda: [positive(p) for p in tris])
        print(f"  {backend:15s} {t / n * 1e6:8.3f} us/call"
              f"   {t / base:5.1f}x baseline")
    exact.select_backend("auto")


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 50000
    rng = random.Random(0)
    print(f"backend available: native={exact.native_available()}")
    bench_kernels(n, rng)
    bench_positive(n, rng)


if __name__ == "__main__":
    main()
