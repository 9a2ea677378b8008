#!/usr/bin/env python3
"""Wall-clock scaling check: summarizer and utility sweep vs edge count,
plus summary-side vs original-side query times.

Prints one aligned table. Doubling the edge count at fixed density should
roughly double the linear passes (summarize, compute_utility) and the
summary-side Pagerank should touch far fewer units than the original.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import graphsum as gs
from graphsum.unionfind import UnionFind


def er_np(n: int, p: float, seed: int) -> gs.Graph:
    rng = np.random.default_rng(seed)
    iu, iv = np.triu_indices(n, k=1)
    mask = rng.random(len(iu)) < p
    return gs.from_edges(n, zip(iu[mask].tolist(), iv[mask].tolist()))


def median_time(fn, runs: int) -> float:
    samples = []
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--base-n", type=int, default=3000)
    parser.add_argument("--p", type=float, default=0.01)
    parser.add_argument("--doublings", type=int, default=3)
    parser.add_argument("--runs", type=int, default=5)
    parser.add_argument("--seed", type=int, default=4242)
    args = parser.parse_args()

    print(f"{'n':>7} {'m':>9} {'summarize':>10} {'utility':>9} {'sum_pr':>8} {'orig_pr':>8}")
    n = args.base_n
    for _ in range(args.doublings):
        g = er_np(n, args.p, args.seed)
        list(g.edges())
        model = gs.build_weight_model(g, gs.uniform_centrality(g))
        uf = UnionFind(g.n)
        rng = random.Random(3)
        for u in range(g.n):
            uf.union(u, rng.randrange(50))
        s = gs.summarize(g)
        t_sum = median_time(lambda: gs.summarize(g), args.runs)
        t_util = median_time(lambda: gs.compute_utility(g, model, uf), args.runs)
        t_spr = median_time(lambda: gs.pagerank_on_summary(s, 0.85), args.runs)
        t_opr = median_time(lambda: gs.pagerank(g, 0.85), args.runs)
        print(f"{g.n:>7} {g.m:>9} {t_sum:>10.4f} {t_util:>9.4f} {t_spr:>8.4f} {t_opr:>8.4f}")
        n = round(n * 2 ** 0.5)
    return 0


if __name__ == "__main__":
    sys.exit(main())
