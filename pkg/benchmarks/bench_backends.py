#!/usr/bin/env python3
"""Timing comparison of the compiled kernels against the numpy fallback.

The two hot kernels dominate the package runtime: vectorized Hermite
evaluation (quadrature integrands, marginals, wavefunction grids) and the
entropy quadrature sum.  This script times both backends on the same
inputs and reports the speedup, then times an end-to-end threshold table
per backend in subprocesses (backend selection happens at import).

Usage: python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from seec import quadrature
from seec._kernels import _fallback

try:
    from seec._kernels import _core
except ImportError:
    _core = None


def best_of(fn, *args, repeats=7, inner=10):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for _ in range(inner):
            fn(*args)
        best = min(best, (time.perf_counter() - start) / inner)
    return best


def time_end_to_end(backend_name):
    env = dict(os.environ, SEEC_BACKEND=backend_name)
    script = (
        "import time, seec.criterion as c, seec.quadrature as q\n"
        "start = time.perf_counter()\n"
        "for n in range(13):\n"
        "    q.entropy_integral_numeric.cache_clear()\n"
        "    c.standard_entropy.cache_clear()\n"
        "    c.standard_entropy(n)\n"
        "print(time.perf_counter() - start)\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", script], capture_output=True, text=True, env=env, check=True
    )
    return float(out.stdout.strip())


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=7)
    args = parser.parse_args()

    if _core is None:
        print("compiled kernels not built; only the numpy fallback is available")

    backends = [("python", _fallback)] + ([("compiled", _core)] if _core else [])

    grid = np.linspace(-8.0, 8.0, 4096)
    rule = quadrature.legendre_panel_rule(48, quadrature.entropy_panel_boundaries(16))
    cases = [
        ("hermite_values n=24, 4096 pts", lambda impl: impl.hermite_values(24, grid)),
        (
            f"entropy_weighted_sum n=16, {len(rule.nodes)} pts",
            lambda impl: impl.entropy_weighted_sum(16, rule.nodes, rule.weights),
        ),
    ]

    print(f"{'kernel':<42}" + "".join(f"{name:>14}" for name, _ in backends) + f"{'speedup':>10}")
    for label, call in cases:
        times = [best_of(call, impl, repeats=args.repeats) for _, impl in backends]
        row = f"{label:<42}" + "".join(f"{t * 1e6:>11.1f} us" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.2f}x"
        print(row)

    print()
    print("end-to-end: unit-scale entropies S_0..S_12, cold caches (subprocess per backend)")
    for name, _ in backends:
        print(f"  {name:<10} {time_end_to_end(name) * 1e3:8.1f} ms")


if __name__ == "__main__":
    main()
