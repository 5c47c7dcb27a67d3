"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each kernel on identical inputs, asserts both implementations return
identical results, and prints per-kernel timings plus the speedup.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from ultrafree._kernels import fallback

try:
    from ultrafree._kernels import _core
except ImportError:
    _core = None


def make_graph(n: int, p: float, seed: int) -> list[int]:
    rng = random.Random(seed)
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


CASES = [
    ("count_cliques b=4, n=40 p=0.5", lambda m: m.count_cliques, lambda a: (a, 4, (1 << 40) - 1), 40, 0.5),
    ("list_cliques b=3, n=40 p=0.5", lambda m: m.list_cliques, lambda a: (a, 3, (1 << 40) - 1), 40, 0.5),
    ("max_clique n=56 p=0.6", lambda m: m.max_clique, lambda a: (a, (1 << 56) - 1), 56, 0.6),
    ("chromatic_number n=30 p=0.5", lambda m: m.chromatic_number, lambda a: (a, 30), 30, 0.5),
    ("enumerate_mis n=44 p=0.35", lambda m: m.enumerate_mis, lambda a: (a, 44), 44, 0.35),
]


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _core is None:
        print("compiled kernel not installed; nothing to compare")
        return 1
    print(f"{'case':38} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, pick, mkargs, n, p in CASES:
        adj = make_graph(n, p, seed=1234)
        callargs = mkargs(adj)
        results = {}
        times = {}
        for label, mod in (("pure", fallback), ("compiled", _core)):
            fn = pick(mod)
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                out = fn(*callargs)
                best = min(best, time.perf_counter() - t0)
            results[label] = out
            times[label] = best
        assert results["pure"] == results["compiled"], f"mismatch in {name}"
        speedup = times["pure"] / times["compiled"] if times["compiled"] else float("inf")
        print(f"{name:38} {times['pure'] * 1e3:9.1f}ms {times['compiled'] * 1e3:9.1f}ms {speedup:7.1f}x")
    print("all results identical across backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
