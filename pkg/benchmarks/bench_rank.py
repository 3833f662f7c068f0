"""Compare the numba and numpy rank kernels.

    python3 benchmarks/bench_rank.py [--repeat 3] [--sizes 100,200,400]

Runs random signed 0/1 matrices of the given sizes plus the boundary
matrices of the order complex of T for (p, n, m) = (2, 2, 3), checks that
both backends agree, and prints the best time of each.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from drinfeld_filtration._kernels import DEFAULT_PRIME, HAVE_NUMBA, rank_mod_p
from drinfeld_filtration.building import FlagPoset, enumerate_submodules, order_complex


def best_time(fn, repeat: int) -> tuple[float, int]:
    best, out = float("inf"), -1
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(sizes: list[int], seed: int) -> list[tuple[str, np.ndarray]]:
    rng = np.random.default_rng(seed)
    out = []
    for s in sizes:
        a = rng.choice([-1, 0, 0, 0, 1], size=(s, s + s // 2)).astype(np.int64)
        out.append((f"random {s}x{s + s // 2}", a))
    P = FlagPoset.from_relation(enumerate_submodules(2, 2, 3, "T"), lambda a, b: a < b)
    for k, b in enumerate(order_complex(P).boundaries):
        if b.size:
            out.append((f"T(2,2,3) boundary {k}", b))
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sizes", default="100,200,400")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba unavailable or disabled; only the numpy backend runs")
    # warm the jit cache outside the timings
    rank_mod_p(np.eye(2, dtype=np.int64))
    print(f"{'case':<26}{'shape':>12}{'rank':>7}{'numpy s':>10}{'numba s':>10}{'speedup':>9}")
    for name, a in cases([int(x) for x in args.sizes.split(",")], args.seed):
        t_np, r_np = best_time(lambda: rank_mod_p(a, DEFAULT_PRIME, use_numba=False), args.repeat)
        if HAVE_NUMBA:
            t_nb, r_nb = best_time(lambda: rank_mod_p(a, DEFAULT_PRIME, use_numba=True), args.repeat)
            if r_nb != r_np:
                raise SystemExit(f"backends disagree on {name}: {r_np} vs {r_nb}")
            tail = f"{t_nb:>10.4f}{t_np / t_nb:>8.1f}x"
        else:
            tail = f"{'-':>10}{'-':>9}"
        shape = f"{a.shape[0]}x{a.shape[1]}"
        print(f"{name:<26}{shape:>12}{r_np:>7}{t_np:>10.4f}{tail}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
