#!/usr/bin/env python3
"""Benchmark the compiled spectral-sum kernel against the NumPy fallback.

Two representative workloads: a Gauss-Legendre tensor grid of the size
the rate quadrature uses per refinement level, and DFT grids of the
sizes the torus validation uses.  Run after `pip install -e .`:

    python benchmarks/bench_kernels.py
"""

import math
import time

import numpy as np

from sfcar import _specsum_py

try:
    from sfcar import _specsum
except ImportError:
    _specsum = None


def gl_grid(panels: int, npts: int):
    x, w = np.polynomial.legendre.leggauss(npts)
    edges = [0.0] + [math.pi * 2.0 ** (-j) for j in range(panels - 1, -1, -1)]
    nodes, weights = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        half = 0.5 * (b - a)
        nodes.append(half * (x + 1.0) + a)
        weights.append(half * w)
    return np.cos(np.concatenate(nodes)), np.concatenate(weights)


def dft_grid(n: int):
    omega = 2.0 * np.pi * np.arange(n) / n
    return np.cos(omega), np.full(n, 1.0 / n)


def timed(fn, *args, repeats: int = 5) -> tuple[float, tuple]:
    best = math.inf
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    zeta, snr = 0.2, 10.0
    cnorm = 1.2702492001213228  # (2/pi) K(0.8)
    cases = [
        ("quadrature 8x16 panels", *gl_grid(8, 16)),
        ("quadrature 32x16 panels", *gl_grid(32, 16)),
        ("torus N=512", *dft_grid(512)),
        ("torus N=2048", *dft_grid(2048)),
    ]
    print(f"{'case':28s} {'points':>10s} {'numpy':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, cos_nodes, weights in cases:
        n = len(cos_nodes) ** 2
        t_py, r_py = timed(
            _specsum_py.rate_sums, cos_nodes, weights, cos_nodes, weights, zeta, snr, cnorm
        )
        if _specsum is None:
            print(f"{name:28s} {n:10d} {t_py * 1e3:9.2f}ms {'n/a':>10s} {'n/a':>8s}")
            continue
        t_c, r_c = timed(
            _specsum.rate_sums, cos_nodes, weights, cos_nodes, weights, zeta, snr, cnorm
        )
        rel = max(
            abs(a - b) / max(abs(a), 1e-300) for a, b in zip(r_py, r_c)
        )
        print(
            f"{name:28s} {n:10d} {t_py * 1e3:9.2f}ms {t_c * 1e3:9.2f}ms "
            f"{t_py / t_c:7.2f}x   (backend agreement {rel:.1e})"
        )
    if _specsum is None:
        print("compiled kernel not built; install with `pip install -e .`")


if __name__ == "__main__":
    main()
