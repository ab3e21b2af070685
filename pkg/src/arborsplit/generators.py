"""Embedded triangle-free plane graphs for tests and benchmarks."""

from __future__ import annotations

import math
import random
from typing import Iterator, Mapping, Sequence

from .plane_graph import PlaneGraph, walk_darts


def from_coordinates(pos: Mapping[str, tuple[float, float]], edges) -> PlaneGraph:
    """Straight-line embedding: clockwise rotations from angles, outer face
    = the traced walk of most negative signed area."""
    nbrs: dict[str, list[str]] = {v: [] for v in pos}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = {}
    for v, ns in nbrs.items():
        x0, y0 = pos[v]
        rot[v] = sorted(ns, key=lambda u: (-math.atan2(pos[u][1] - y0, pos[u][0] - x0), u))
    probe = PlaneGraph.build(list(pos), rot)
    comp = probe._component_index()
    best: dict[int, tuple[float, tuple[str, ...]]] = {}
    for f in probe.faces:
        w = f.walk
        if len(w) < 2:
            continue
        area = 0.0
        for a, b in walk_darts(w):
            area += pos[a][0] * pos[b][1] - pos[b][0] * pos[a][1]
        c = comp[w[0]]
        if c not in best or area < best[c][0]:
            best[c] = (area, w)
    walks = []
    for c in sorted(set(comp.values())):
        if c in best:
            walks.append(best[c][1])
        else:
            walks.append(tuple(v for v in pos if comp[v] == c))
    return PlaneGraph.build(list(pos), rot, walks)


def grid(rows: int, cols: int) -> PlaneGraph:
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    pos = {f"v{r}_{c}": (float(c), float(-r)) for r in range(rows) for c in range(cols)}
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((f"v{r}_{c}", f"v{r}_{c + 1}"))
            if r + 1 < rows:
                edges.append((f"v{r}_{c}", f"v{r + 1}_{c}"))
    return from_coordinates(pos, edges)


def even_cycle(n: int) -> PlaneGraph:
    """The cycle C_n on v0..v{n-1}; any length >= 4 is triangle-free."""
    if n < 4:
        raise ValueError("cycles shorter than 4 are not in the corpus")
    names = [f"v{i}" for i in range(n)]
    rot = {names[i]: (names[(i + 1) % n], names[i - 1]) for i in range(n)}
    return PlaneGraph.build(names, rot, names)


def cube() -> PlaneGraph:
    """Q3 as two nested squares (outer v0..v3, inner v4..v7) joined by spokes."""
    pos = {}
    for i, (x, y) in enumerate([(-2, 2), (2, 2), (2, -2), (-2, -2)]):
        pos[f"v{i}"] = (float(x), float(y))
        pos[f"v{i + 4}"] = (x / 2, y / 2)
    edges = []
    for i in range(4):
        edges.append((f"v{i}", f"v{(i + 1) % 4}"))
        edges.append((f"v{i + 4}", f"v{(i + 1) % 4 + 4}"))
        edges.append((f"v{i}", f"v{i + 4}"))
    return from_coordinates(pos, edges)


def cube_with_p() -> PlaneGraph:
    """Q3 plus v8 inside the inner square, adjacent to v4 and v6."""
    g = cube()
    pos = {}
    for i, (x, y) in enumerate([(-2, 2), (2, 2), (2, -2), (-2, -2)]):
        pos[f"v{i}"] = (float(x), float(y))
        pos[f"v{i + 4}"] = (x / 2, y / 2)
    pos["v8"] = (0.0, 0.0)
    edges = list(g.edges) + [("v4", "v8"), ("v6", "v8")]
    return from_coordinates(pos, edges)


def _insert_after(rot: list[str], anchor: str, new: str) -> list[str]:
    i = rot.index(anchor)
    return rot[: i + 1] + [new] + rot[i + 1 :]


def _trace_from(rot: Mapping[str, Sequence[str]], dart: tuple[str, str]) -> tuple[str, ...]:
    walk = []
    a, b = dart
    start = dart
    while True:
        walk.append(a)
        nb = rot[b]
        a, b = b, nb[(list(nb).index(a) + 1) % len(nb)]
        if (a, b) == start:
            return tuple(walk)


def grow_quadrangulation(seed: PlaneGraph | None = None, steps: int = 0, rng_seed: int = 0) -> PlaneGraph:
    """Repeatedly put a new degree-2 vertex inside a random face, joined to two
    non-adjacent vertices of that face."""
    g = seed if seed is not None else even_cycle(4)
    rng = random.Random(rng_seed)
    counter = len(g)
    for _ in range(steps):
        options = []
        for f in g.faces:
            w = f.walk
            pairs = [
                (i, j)
                for i in range(len(w))
                for j in range(i + 1, len(w))
                if w[i] != w[j] and not g.has_edge(w[i], w[j])
            ]
            if pairs:
                options.append((f, pairs))
        if not options:
            raise ValueError("no face offers a non-adjacent pair")
        f, pairs = options[rng.randrange(len(options))]
        i, j = pairs[rng.randrange(len(pairs))]
        w = f.walk
        a, b = w[i], w[j]
        while f"v{counter}" in g.rotation:
            counter += 1
        new = f"v{counter}"
        counter += 1
        rot = {v: list(n) for v, n in g.rotation.items()}
        rot[a] = _insert_after(rot[a], w[i - 1], new)
        rot[b] = _insert_after(rot[b], w[j - 1], new)
        rot[new] = [a, b]
        outer = []
        for ow in g.outer_face:
            if f.is_outer and set(ow) & {a, b} and walk_darts(ow):
                outer.append(_trace_from(rot, walk_darts(ow)[0]))
            else:
                outer.append(ow)
        g = PlaneGraph.build(list(g.vertices) + [new], rot, outer)
    return g


def corpus_small(max_n: int) -> Iterator[PlaneGraph]:
    """Connected induced subgraphs of grid(4,4) with at most ``max_n``
    vertices, then C4..C_max_n, then Q3 and Q3 plus an inner vertex."""
    if max_n > 12:
        raise ValueError("corpus_small is meant for max_n <= 12")
    base = grid(4, 4)
    adj = base.adjacency
    level = {frozenset([v]) for v in base.vertices} if max_n >= 1 else set()
    seen: list[frozenset[str]] = []
    size = 1
    while level and size <= max_n:
        seen.extend(sorted(level, key=lambda s: sorted(s)))
        if size == max_n:
            break
        nxt = set()
        for s in level:
            border = set().union(*(adj[v] for v in s)) - s
            for v in border:
                nxt.add(s | {v})
        level = nxt
        size += 1
    for s in seen:
        yield base.induced_subgraph(s)
    for n in range(4, max_n + 1):
        yield even_cycle(n)
    if max_n >= 8:
        yield cube()
    if max_n >= 9:
        yield cube_with_p()
