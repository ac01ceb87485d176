#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Times the raw multiply-reduce primitive at the coefficient sizes that occur
in practice (phi(m) = 4 .. 720), then an end-to-end identity sweep.  Run:

    python benchmarks/bench_kernel.py
    FFHYPER_KERNEL=python python benchmarks/bench_kernel.py   # force fallback
"""

import random
import sys
import time

from ffhyper import _pykernel, kernel
from ffhyper.cyclo import _ctx


def bench_mulreduce(impl, m, reps):
    ctx = _ctx(m)
    rng = random.Random(m)
    a = [rng.randrange(-50, 51) for _ in range(ctx.phi)]
    b = [rng.randrange(-50, 51) for _ in range(ctx.phi)]
    t0 = time.perf_counter()
    for _ in range(reps):
        impl.polymul_reduce(a, b, ctx.phi, ctx.phi_idx, ctx.phi_val)
    return (time.perf_counter() - t0) / reps


def bench_sweep():
    """End-to-end: one full summation-formula sweep on F_13."""
    import importlib

    import ffhyper.engine as eng_mod
    from ffhyper.field import build_field
    from ffhyper.identities import verify

    eng_mod._ENGINES.clear()
    from ffhyper.identities.base import _ENVS

    _ENVS.clear()
    F = build_field(13)
    t0 = time.perf_counter()
    r = verify("EULER_GAUSS", F)
    assert r.passed
    return time.perf_counter() - t0


def main():
    print(f"active kernel backend: {kernel.BACKEND}")
    header = f"{'conductor m':>12} {'phi(m)':>7} {'active':>12} {'python':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for m in (12, 24, 156, 2196):
        reps = max(3, 20000 // (_ctx(m).phi ** 2 // 16 + 1))
        t_active = bench_mulreduce(kernel, m, reps)
        t_py = bench_mulreduce(_pykernel, m, max(3, reps // 10))
        ratio = t_py / t_active if t_active else float("inf")
        print(f"{m:>12} {_ctx(m).phi:>7} {t_active * 1e6:>10.1f}us {t_py * 1e6:>10.1f}us {ratio:>7.1f}x")
    t = bench_sweep()
    print(f"\nEULER_GAUSS exhaustive sweep on F_13 ({kernel.BACKEND} backend): {t:.2f} s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
