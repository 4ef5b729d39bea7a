#!/usr/bin/env python3
"""Time the pure-Python kernels against the compiled extension.

Runs each of the four hot kernels on the same generated workloads through
both backends and prints a table of per-call times.  Exits with a notice if
the compiled extension is not available.

    python benchmarks/bench_kernels.py [--seed N] [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from nfacomp._kernels import pure

try:
    from nfacomp._kernels import _speedups as compiled
except ImportError:
    compiled = None


def random_nfa_tables(rng, nstates, nsyms, density=0.12):
    succ = [0] * (nsyms * nstates)
    for sym in range(nsyms):
        for src in range(nstates):
            for dst in range(nstates):
                if rng.random() < density:
                    succ[sym * nstates + src] |= 1 << dst
    init = 1 << rng.randrange(nstates)
    final = 0
    for q in range(nstates):
        if rng.random() < 0.25:
            final |= 1 << q
    return succ, init, final or 1


def workloads(seed):
    rng = random.Random(seed)
    a = random_nfa_tables(rng, 18, 3)
    b = random_nfa_tables(rng, 18, 3)
    big = random_nfa_tables(rng, 120, 2, density=0.03)
    return {
        "explore_subsets": lambda impl: impl.explore_subsets(18, 3, a[0], a[1]),
        "word_signature": lambda impl: impl.word_signature(18, 3, a[0], a[1], a[2], 7),
        "antichain_included": lambda impl: impl.antichain_included(
            3, 18, a[0], a[1], a[2], 18, b[0], b[1], b[2], None
        ),
        "product_nonempty": lambda impl: impl.product_nonempty(
            2, 120, big[0], big[1], big[2], 120, big[0], big[1], big[2]
        ),
    }


def time_call(fn, repeat):
    best = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best.append(time.perf_counter() - t0)
    return statistics.median(best)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=9)
    args = ap.parse_args()

    loads = workloads(args.seed)
    print(f"{'kernel':<22} {'pure':>12} {'compiled':>12} {'speedup':>9}")
    for name, call in loads.items():
        t_pure = time_call(lambda: call(pure), args.repeat)
        if compiled is None:
            print(f"{name:<22} {t_pure * 1e3:>10.3f}ms {'n/a':>12} {'n/a':>9}")
            continue
        t_fast = time_call(lambda: call(compiled), args.repeat)
        ratio = t_pure / t_fast if t_fast > 0 else float("inf")
        print(f"{name:<22} {t_pure * 1e3:>10.3f}ms {t_fast * 1e3:>10.3f}ms {ratio:>8.1f}x")
    if compiled is None:
        print("\ncompiled extension not built; showing pure timings only")


if __name__ == "__main__":
    main()
