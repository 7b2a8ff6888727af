"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

import numpy as np

from mediankit import kernels
from mediankit.core import MedianAlgebra, product_of_chains


def cases():
    cube4 = product_of_chains([2] * 4).table
    chain12 = MedianAlgebra.chain(12).table
    c3, c2 = MedianAlgebra.chain(3).table, MedianAlgebra.chain(2).table
    c32, c22 = product_of_chains([3, 2]).table, product_of_chains([2, 2]).table
    ident = np.arange(16, dtype=np.int32)
    return [
        ("assoc_witness 2^4", "assoc_witness", (cube4,)),
        ("assoc_witness C12", "assoc_witness", (chain12,)),
        ("derived_witness 2^4", "derived_witness", (cube4,)),
        ("hom_witness id 2^4", "hom_witness", (cube4, cube4, ident)),
        ("brute_homs C3->C2", "brute_homs", (c3, c2)),
        ("brute_homs C3xC2->2^2", "brute_homs", (c32, c22)),
        ("prime_convex_masks C12", "prime_convex_masks", (chain12,)),
        ("prime_convex_masks 2^4", "prime_convex_masks", (cube4,)),
        ("a2_subalgebra_witness C12", "a2_subalgebra_witness", (chain12,)),
    ]


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    mods = kernels.backends()
    names = [m.BACKEND for m in mods]
    print(f"{'kernel':<28}" + "".join(f"{n:>12}" for n in names) + ("   speedup" if len(mods) > 1 else ""))
    for label, name, fargs in cases():
        times = [best_of(getattr(m, name), fargs, args.repeat) for m in mods]
        row = f"{label:<28}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[-1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
