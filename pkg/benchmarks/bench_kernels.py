"""Compare the compiled and numpy kernel backends.

Runs each kernel on workloads taken from powers of the graphic-matroid
ideal of a square and a triangle joined by a bridge, then two end-to-end
computations.  Results are checked for equality across backends before
timings are printed.

    python3 benchmarks/bench_kernels.py [--repeat N] [--quick]
"""

import argparse
import time

import numpy as np

from ideal_persistence import kernels
from ideal_persistence.corpus import load_ideal
from ideal_persistence.monomial import PowerTable, colon_excess, variable
from ideal_persistence.persistence import ratliff_excess


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def workloads(quick):
    I = load_ideal("square_bridge_triangle").ideal
    powers = PowerTable(I)
    top = 4 if quick else 6
    big = powers[top]
    rng = np.random.default_rng(0)
    cands = big.rows[rng.integers(0, len(big), 2000)] + rng.integers(0, 2, (2000, I.n))
    cands = cands - (rng.random(cands.shape) < 0.3)
    cands = np.ascontiguousarray(np.maximum(cands, 0))
    shifted = big.rows + np.eye(I.n, dtype=np.int64)[rng.integers(0, I.n, len(big))]
    products = np.unique(np.concatenate([big.rows, shifted, powers[top - 1].rows * 2]), axis=0)
    products = np.ascontiguousarray(products[np.argsort(products.sum(axis=1), kind="stable")])
    mat = rng.integers(-3, 4, (120, 160)).astype(np.int64)
    n_var = I.n
    socle_power = powers[top]
    return {
        "member_mask": lambda: kernels.member_mask(big.rows, cands),
        "minimal_mask": lambda: kernels.minimal_mask(products),
        "reduce_rows": lambda: kernels.reduce_rows(np.ascontiguousarray(products[::-1])),
        "rank_mod_p": lambda: kernels.rank_mod_p(mat, 2147483647),
        f"socle of I^{top}": lambda: colon_excess(
            socle_power, [variable(n_var, i) for i in range(n_var)], socle_power),
        f"Ratliff colon at k={top - 1}": lambda: ratliff_excess(I, top - 1, powers),
    }


def canonical(x):
    x = np.asarray(x)
    if x.ndim == 2:
        return sorted(map(tuple, x.tolist()))
    return x.tolist()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller powers")
    args = ap.parse_args()
    found = kernels.backends()
    print(f"backends: {', '.join(sorted(found))}")
    jobs = workloads(args.quick)
    print(f"{'workload':<26}" + "".join(f"{b:>12}" for b in sorted(found)) + "     speedup")
    for label, fn in jobs.items():
        times, results = {}, {}
        for name in sorted(found):
            with kernels.use_backend(name):
                times[name], results[name] = best_of(fn, args.repeat)
        ref = canonical(results["python"])
        agree = all(canonical(r) == ref for r in results.values())
        row = f"{label:<26}" + "".join(f"{times[b]:>11.4f}s" for b in sorted(found))
        if "cython" in times:
            row += f"  {times['python'] / max(times['cython'], 1e-9):>9.1f}x"
        print(row + ("" if agree else "   RESULTS DIFFER"))


if __name__ == "__main__":
    main()
