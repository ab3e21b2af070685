"""Time whole-graph decomposition on grown quadrangulations of rising size."""

from __future__ import annotations

import argparse
import collections
import time
from dataclasses import dataclass

from arborsplit.decomposer import decompose
from arborsplit.generators import grow_quadrangulation
from arborsplit.validity import is_forest


@dataclass
class BenchConfig:
    sizes: tuple[int, ...] = (50, 100, 200, 300, 500)
    repeats: int = 5
    base_n: int = 8


def run(cfg: BenchConfig) -> None:
    print(f"{'n':>5} {'mean s':>8} {'depth':>6} {'nodes':>6}  busiest reductions")
    for n in cfg.sizes:
        times, depths, sizes = [], [], []
        kinds: collections.Counter = collections.Counter()
        for seed in range(cfg.repeats):
            g = grow_quadrangulation(steps=n - 4, rng_seed=seed)
            t0 = time.perf_counter()
            c, trace = decompose(g, base_n=cfg.base_n)
            times.append(time.perf_counter() - t0)
            ones = {v for v in g.vertices if c[v] == 1}
            assert is_forest(g, ones) and is_forest(g, set(g.vertices) - ones)
            nodes = list(trace.nodes())
            depths.append(trace.depth())
            sizes.append(len(nodes))
            kinds.update(nd.kind for nd in nodes)
        top = ", ".join(f"{k} {v}" for k, v in kinds.most_common(3))
        print(f"{n:>5} {sum(times) / len(times):>8.3f} {max(depths):>6} {max(sizes):>6}  {top}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(BenchConfig.sizes))
    ap.add_argument("--repeats", type=int, default=BenchConfig.repeats)
    ap.add_argument("--base-n", type=int, default=BenchConfig.base_n)
    a = ap.parse_args()
    run(BenchConfig(tuple(a.sizes), a.repeats, a.base_n))


if __name__ == "__main__":
    main()
