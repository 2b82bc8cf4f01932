"""Compare the compiled integer kernels against the pure-Python twins.

Run:  python3 benchmarks/bench_kernels.py [--repeat N]

Workloads mirror the hot paths: fraction-free elimination and Berkowitz on
dense integer matrices, Sturm chains on characteristic-polynomial-sized
inputs, and batched sparse evaluation as used by the PIT scan.
"""

from __future__ import annotations

import argparse
import random
import time

from ncubes import _kernels_py as pure

try:
    from ncubes import _kernels as compiled
except ImportError:
    compiled = None


def _time(fn, args_list, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = random.Random(2024)
    cases = []

    mats8 = [
        ([[rng.randint(-99, 99) for _ in range(8)] for _ in range(8)],)
        for _ in range(40)
    ]
    cases.append(("mat_echelon 8x8, 7-bit entries", "mat_echelon", mats8))

    mats_big = [
        ([[rng.randint(-(2**60), 2**60) for _ in range(6)] for _ in range(6)],)
        for _ in range(40)
    ]
    cases.append(("mat_echelon 6x6, 60-bit entries", "mat_echelon", mats_big))

    cp = [
        ([[rng.randint(-99, 99) for _ in range(7)] for _ in range(7)],)
        for _ in range(40)
    ]
    cases.append(("charpoly 7x7", "charpoly", cp))

    polys = []
    for _ in range(60):
        p = [rng.randint(-(2**40), 2**40) for _ in range(9)]
        while p and p[-1] == 0:
            p.pop()
        polys.append((p,))
    cases.append(("sturm_chain deg 8, 40-bit", "sturm_chain", polys))

    n, terms = 4, 15
    coeffs = [rng.randint(-50, 50) for _ in range(terms)]
    exps = [rng.randint(0, 3) for _ in range(terms * n)]
    pts = [rng.randint(-20, 20) for _ in range(n * 400)]
    cases.append(
        ("eval_terms_many 400 pts, 15 terms, n=4", "eval_terms_many", [(coeffs, exps, n, pts)])
    )

    print(f"{'workload':44s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for label, fname, argset in cases:
        tp = _time(getattr(pure, fname), argset, args.repeat)
        if compiled is None:
            print(f"{label:44s} {tp * 1e3:9.2f}ms {'-':>10s} {'-':>8s}")
            continue
        tc = _time(getattr(compiled, fname), argset, args.repeat)
        print(f"{label:44s} {tp * 1e3:9.2f}ms {tc * 1e3:9.2f}ms {tp / tc:7.2f}x")
    if compiled is None:
        print("\ncompiled kernels unavailable (pure-only install)")


if __name__ == "__main__":
    main()
