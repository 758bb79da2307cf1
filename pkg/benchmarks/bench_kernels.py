"""Compare the numba and numpy kernel paths on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each workload is run once per backend to warm up (JIT compile, caches),
then timed over --repeat runs with the engine memo cleared between runs.
"""

import argparse
import itertools
import statistics
import time

import numpy as np

from schubtwist import _kernels, charring, cohomology, tangent
from schubtwist.rootsys import build
from schubtwist.weyl import enumerate_parabolic, longest_element


def clear():
    cohomology._h_line_bundle.cache_clear()
    tangent._bsdh_tangent.cache_clear()
    charring._weyl_character.cache_clear()


def bwb_sweep(t, box=2):
    rs = build(t)
    w0 = longest_element(rs).word

    def run():
        for lam in itertools.product(range(-box, box + 1), repeat=rs.rank):
            cohomology.h_line_bundle(rs, w0, lam)

    return run


def weyl_chars(t, top=3):
    rs = build(t)

    def run():
        for lam in itertools.product(range(top + 1), repeat=rs.rank):
            charring.weyl_character(rs, lam)

    return run


def tangent_sweep(t):
    rs = build(t)

    def run():
        for w in enumerate_parabolic(rs):
            tangent.bsdh_tangent(rs, w.word)

    return run


def raw_demazure(n=20000, rank=4, seed=0):
    rng = np.random.default_rng(seed)
    W = rng.integers(-6, 7, size=(n, rank)).astype(np.int64)
    M = rng.integers(1, 4, size=n).astype(np.int64)
    rs = build("A4")

    def run():
        for i in range(rank):
            _kernels.demazure(W, M, rs.alpha(i), i)

    return run


WORKLOADS = {
    "bwb B3 [-2,2]": bwb_sweep("B3"),
    "bwb C3 [-2,2]": bwb_sweep("C3"),
    "weyl chars F4 [0,1]": weyl_chars("F4", 1),
    "weyl chars B3 [0,3]": weyl_chars("B3", 3),
    "tangent D4 all w": tangent_sweep("D4"),
    "raw demazure 20k rows": raw_demazure(),
}


def timeit(fn, repeat):
    fn()
    out = []
    for _ in range(repeat):
        clear()
        t0 = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t0)
    return statistics.median(out)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--only", default=None, help="substring filter on workload names")
    args = ap.parse_args()
    if _kernels.NUMBA is None:
        raise SystemExit("numba not installed; nothing to compare")
    print(f"{'workload':28s} {'numba [s]':>10s} {'numpy [s]':>10s} {'speedup':>8s}")
    for name, fn in WORKLOADS.items():
        if args.only and args.only not in name:
            continue
        res = {}
        for b in ("numba", "numpy"):
            _kernels.set_backend(b)
            res[b] = timeit(fn, args.repeat)
        print(f"{name:28s} {res['numba']:10.4f} {res['numpy']:10.4f} {res['numpy'] / res['numba']:8.2f}x")


if __name__ == "__main__":
    main()
