"""Benchmark: numba kernels vs the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 20]

Times each grid kernel on both backends (after a JIT warm-up) and checks
that their outputs agree.
"""

import argparse
import time

import numpy as np

from wpkit import _kernels
from wpkit.params import validate
from wpkit.wavepacket import ground_prefactor, packet


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(n_grid):
    p = validate(0.8 + 0.3j, (1 + 1.7j) / (0.8 - 0.3j), 0.1)
    wp = packet(p, 20)
    y = np.linspace(-8, 8, n_grid)
    quad = complex(p.B / (2 * p.A * p.hbar))
    pref = complex(ground_prefactor(p))
    coeffs = np.ascontiguousarray(wp.poly.coeffs)
    w = np.exp(-y * y)
    f = np.exp(1j * y)
    g = (y * y).astype(complex)
    ts = np.linspace(0, np.pi, n_grid, endpoint=False)
    return {
        "horner": lambda impl: impl.horner(coeffs, y),
        "packet_values": lambda impl: impl.packet_values(coeffs, y, pref, quad, p.eta / p.hbar),
        "trapezoid_inner": lambda impl: impl.trapezoid_inner(w, f, g, y[1] - y[0]),
        "flow_scan": lambda impl: impl.flow_scan(p.A, p.B, ts),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--grid", type=int, default=200_001)
    args = ap.parse_args()

    if _kernels.numba_impl is None:
        print("numba not installed; nothing to compare")
        return
    print(f"grid points: {args.grid}, best of {args.repeat}")
    print(f"{'kernel':<18}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}{'max |diff|':>14}")
    for name, call in cases(args.grid).items():
        call(_kernels.numba_impl)  # JIT warm-up
        t_np = best_of(lambda: call(_kernels.numpy_impl), args.repeat)
        t_nb = best_of(lambda: call(_kernels.numba_impl), args.repeat)
        a = np.asarray(call(_kernels.numpy_impl), dtype=object if name == "flow_scan" else None)
        b = np.asarray(call(_kernels.numba_impl), dtype=object if name == "flow_scan" else None)
        if name == "flow_scan":
            diff = max(np.max(np.abs(x - y)) for x, y in zip(a, b))
        else:
            diff = np.max(np.abs(a - b))
        print(f"{name:<18}{1e3 * t_np:>12.3f}{1e3 * t_nb:>12.3f}{t_np / t_nb:>10.1f}{diff:>14.2e}")


if __name__ == "__main__":
    main()
