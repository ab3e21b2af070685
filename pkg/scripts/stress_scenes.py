"""Colour random scenes cut out of grids and grown quadrangulations.

Each scene: pick a host graph, delete a random vertex subset, keep the
largest component, then draw P (|P| <= 2, consecutive), delta and an
independent Q on the boundary.  Reports how often each reduction fired
and writes the trace of every certified failure to --failures.
"""

from __future__ import annotations

import argparse
import collections
import random
import time
from dataclasses import dataclass
from pathlib import Path

from arborsplit.decomposer import CertifiedFailure, color_scene
from arborsplit.generators import grid, grow_quadrangulation
from arborsplit.io import dumps
from arborsplit.scene import make_scene
from arborsplit.structure import components


@dataclass
class StressConfig:
    scenes: int = 1000
    base_n: int = 8
    seed: int = 0
    max_steps: int = 40
    failures: Path | None = None


def random_scene(rng: random.Random, max_steps: int):
    if rng.random() < 1 / 3:
        g = grid(rng.randint(2, 6), rng.randint(2, 6))
    else:
        g = grow_quadrangulation(steps=rng.randint(0, max_steps), rng_seed=rng.randrange(10**6))
    drop = set(rng.sample(sorted(g.vertices), rng.randint(0, len(g) // 3)))
    g = g.without(drop)
    g = g.induced_subgraph(max(components(g), key=len))
    walk = g.outer_face[0]
    P: tuple = ()
    r = rng.random()
    if r < 0.3:
        P = (walk[rng.randrange(len(walk))],)
    elif r < 0.8 and len(walk) >= 2:
        i = rng.randrange(len(walk))
        P = tuple(dict.fromkeys((walk[i], walk[(i + 1) % len(walk)])))
    delta = {v: rng.choice((1, 1, 2)) for v in P}
    Q: set[str] = set()
    for v in rng.sample(sorted(g.outer_vertices), len(g.outer_vertices)):
        if v not in P and not g.adjacency[v] & Q and rng.random() < 0.5:
            Q.add(v)
    return make_scene(g, P, Q, delta)


def run(cfg: StressConfig) -> int:
    kinds: collections.Counter = collections.Counter()
    failures = []
    start = time.perf_counter()
    for i in range(cfg.scenes):
        rng = random.Random(cfg.seed * 100_000 + i)
        s = random_scene(rng, cfg.max_steps)
        try:
            _, trace = color_scene(s, base_n=cfg.base_n)
        except CertifiedFailure as exc:
            failures.append(exc)
            continue
        for node in trace.nodes():
            label = node.kind + (f"/{node.case}" if node.case else "")
            kinds[label + (" (outer)" if node.data.get("outer") else "")] += 1
    elapsed = time.perf_counter() - start
    print(f"{cfg.scenes} scenes in {elapsed:.1f}s at oracle threshold {cfg.base_n}")
    for label, count in sorted(kinds.items()):
        print(f"  {label:24s} {count}")
    print(f"certified failures: {len(failures)}")
    if failures and cfg.failures is not None:
        cfg.failures.mkdir(parents=True, exist_ok=True)
        for k, exc in enumerate(failures):
            (cfg.failures / f"failure_{k}.json").write_text(dumps(exc.trace.to_dict()))
    return 1 if failures else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scenes", type=int, default=StressConfig.scenes)
    ap.add_argument("--base-n", type=int, default=StressConfig.base_n)
    ap.add_argument("--seed", type=int, default=StressConfig.seed)
    ap.add_argument("--max-steps", type=int, default=StressConfig.max_steps)
    ap.add_argument("--failures", type=Path)
    a = ap.parse_args()
    return run(StressConfig(a.scenes, a.base_n, a.seed, a.max_steps, a.failures))


if __name__ == "__main__":
    raise SystemExit(main())
