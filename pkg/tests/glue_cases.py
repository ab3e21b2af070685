"""Generator of gluing instances (S, split, c1, c2) with oracle sub-colourings.

Shared by the glue property tests, the acceptance suite and the sweep script.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from arborsplit.decomposer import glue
from arborsplit.generators import corpus_small, grow_quadrangulation
from arborsplit.oracle import valid_colorings
from arborsplit.scene import Scene, SceneError, SplitSpec, make_scene
from arborsplit.structure import components, extension_split, find_cut
from arborsplit.validity import check_valid


@dataclass
class GlueCase:
    scene: Scene
    split: SplitSpec
    c1: dict
    c2: dict


@dataclass
class GlueTally:
    instances: int = 0
    star: int = 0
    partial_violations: list = field(default_factory=list)
    full_violations: list = field(default_factory=list)


def boundary_choices(g, max_p: int = 2):
    """All consecutive P with |P| <= max_p on the (single) outer walk."""
    walk = g.outer_face[0]
    out = [()]
    out += [(v,) for v in sorted(set(walk))]
    if max_p >= 2:
        pairs = set()
        for i in range(len(walk)):
            a, b = walk[i], walk[(i + 1) % len(walk)]
            if a != b:
                pairs.add((a, b))
        out += sorted(pairs)
    return out


def deltas(P):
    return [dict(zip(P, cols)) for cols in itertools.product((1, 2), repeat=len(P))]


def independent_q(g, P, rng: random.Random, limit: int):
    """Deterministic sample of independent outer subsets avoiding P."""
    cand = sorted(g.outer_vertices - set(P))
    seen = {()}
    out = [frozenset()]
    for _ in range(limit * 4):
        if len(out) >= limit:
            break
        pick = [v for v in cand if rng.random() < 0.4]
        q = []
        for v in pick:
            if not g.adjacency[v] & set(q):
                q.append(v)
        key = tuple(q)
        if key not in seen:
            seen.add(key)
            out.append(frozenset(q))
    return out


def extension_splits(g, P):
    """Splits along s-x-t for every internal x with non-adjacent outer
    neighbours s < t, keeping P on the G1 side."""
    on = g.outer_vertices
    out = []
    for x in sorted(set(g.vertices) - on):
        kn = sorted(g.adjacency[x] & on)
        for i, a in enumerate(kn):
            for b in kn[i + 1:]:
                if g.has_edge(a, b):
                    continue
                split = extension_split(g, x, a, b, P)
                try:
                    split.check(g, P)
                except ValueError:
                    continue
                out.append(split)
    return out


def splits_for(g, P):
    cut = find_cut(g, P)
    if cut is not None:
        return [cut]
    return extension_splits(g, P)


def split_graphs(max_n: int = 9, seed: int = 0):
    """Connected graphs with a cut vertex, a chord or an internal vertex
    seeing two non-adjacent outer vertices; the three overlap shapes are
    interleaved so each is well represented."""
    pool = list(corpus_small(max_n))
    pool += [grow_quadrangulation(steps=k, rng_seed=r) for k in range(2, 9) for r in range(6)]
    by_kind: dict[int, list] = {1: [], 2: [], 3: []}
    for g in pool:
        if len(g) < 3 or len(components(g)) != 1:
            continue
        found = splits_for(g, ())
        if found:
            by_kind[len(found[0].h)].append(g)
    rng = random.Random(seed)
    for group in by_kind.values():
        rng.shuffle(group)
    for trio in itertools.zip_longest(by_kind[3], by_kind[2], by_kind[1]):
        yield from (g for g in trio if g is not None)


def second_scene(g, split: SplitSpec, Q, c1, retain_q: bool) -> Scene:
    """S2 with all of H in P2, or with H's Q-vertices kept in Q when
    ``retain_q`` (the form the decomposer uses)."""
    hs = set(split.h)
    g2 = g.induced_subgraph(split.g2)
    if retain_q:
        P2 = tuple(v for v in split.h if v not in Q)
        return make_scene(g2, P2, Q & split.g2, {v: c1[v] for v in P2})
    return make_scene(g2, split.h, Q & (split.g2 - hs), {v: c1[v] for v in split.h})


def graph_cases(g, rng: random.Random, per_scene: int, q_samples: int, retain_q: bool = False):
    combos = [(P, delta, Q) for P in boundary_choices(g) for delta in deltas(P)
              for Q in independent_q(g, P, rng, q_samples)]
    rng.shuffle(combos)
    for P, delta, Q in combos:
        found = splits_for(g, P)
        if not found:
            continue
        split = found[rng.randrange(len(found))]
        try:
            s = make_scene(g, P, Q, delta)
            s1 = make_scene(g.induced_subgraph(split.g1), P, Q & split.g1, delta)
        except SceneError:
            continue
        for c1 in itertools.islice(valid_colorings(s1), per_scene):
            try:
                s2 = second_scene(g, split, Q, c1, retain_q)
            except SceneError:
                continue
            for c2 in itertools.islice(valid_colorings(s2), per_scene):
                yield GlueCase(s, split, c1, c2)


def generate(limit: int = 1000, per_scene: int = 2, q_samples: int = 4, per_graph: int = 12,
             seed: int = 0, retain_q: bool = False):
    """Yield up to ``limit`` glue cases whose sub-scenes follow the gluing rule:
    S1 = (G1, P, Q & G1, delta) and S2 = (G2, H, Q & (G2 - G1), c1 on H)."""
    rng = random.Random(seed)
    made = 0
    for g in split_graphs(seed=seed):
        for case in itertools.islice(graph_cases(g, rng, per_scene, q_samples, retain_q), per_graph):
            yield case
            made += 1
            if made >= limit:
                return


def tally(cases) -> GlueTally:
    t = GlueTally()
    for case in cases:
        t.instances += 1
        res = glue(case.scene, case.split, case.c1, case.c2)
        part = check_valid(case.scene, res.coloring, clauses=("forced", "G2", "G4"))
        if not part.ok:
            t.partial_violations.append((case, part))
        if res.star:
            t.star += 1
            full = check_valid(case.scene, res.coloring)
            if not full.ok:
                t.full_violations.append((case, full))
    return t
