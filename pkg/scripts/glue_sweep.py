"""Count gluing violations for both forms of the second sub-scene.

"moved" puts every overlap vertex into P2 and drops them from Q2; "kept"
leaves overlap vertices that are in Q inside Q2 (what the decomposer does).
"""

from __future__ import annotations

import argparse
import collections
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from glue_cases import generate, tally  # noqa: E402


@dataclass
class SweepConfig:
    instances: int = 3000
    seeds: tuple[int, ...] = (0, 1, 2)
    per_graph: int = 30


def run(cfg: SweepConfig) -> None:
    print(f"{'form':6} {'seed':>4} {'cases':>6} {'(*)':>6} {'G2/G4':>6} {'full':>5}  by |H|")
    for retain in (False, True):
        for seed in cfg.seeds:
            cases = list(generate(cfg.instances, seed=seed, retain_q=retain, per_graph=cfg.per_graph))
            t = tally(cases)
            shapes = collections.Counter(len(c.split.h) for c, _ in t.full_violations)
            print(f"{'kept' if retain else 'moved':6} {seed:>4} {t.instances:>6} {t.star:>6} "
                  f"{len(t.partial_violations):>6} {len(t.full_violations):>5}  {dict(shapes)}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=SweepConfig.instances)
    ap.add_argument("--seeds", type=int, nargs="+", default=list(SweepConfig.seeds))
    ap.add_argument("--per-graph", type=int, default=SweepConfig.per_graph)
    a = ap.parse_args()
    run(SweepConfig(a.instances, tuple(a.seeds), a.per_graph))


if __name__ == "__main__":
    main()
