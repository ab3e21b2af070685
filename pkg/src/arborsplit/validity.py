"""Validity of a 2-colouring for a scene: forced colours plus (G1)-(G4)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Mapping

from .scene import Scene


@dataclass(frozen=True)
class Report:
    ok: bool
    clause: str
    witness: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict[str, Any]:
        return {"ok": self.ok, "clause": self.clause, "witness": self.witness}


def _pass(clause: str) -> Report:
    return Report(True, clause)


class UnionFind:
    """Disjoint sets over hashable items, path halving + union by size."""

    def __init__(self) -> None:
        self.parent: dict[Any, Any] = {}
        self.size: dict[Any, int] = {}

    def find(self, a):
        parent = self.parent
        if a not in parent:
            parent[a] = a
            self.size[a] = 1
            return a
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a, b) -> bool:
        """Merge; False when ``a`` and ``b`` were already together."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def _bfs_path(adj: Mapping[str, set[str]], src: str, dst: str) -> list[str] | None:
    prev = {src: src}
    dq = deque([src])
    while dq:
        a = dq.popleft()
        if a == dst:
            path = [a]
            while path[-1] != src:
                path.append(prev[path[-1]])
            return path[::-1]
        for b in sorted(adj.get(a, ())):
            if b not in prev:
                prev[b] = a
                dq.append(b)
    return None


def find_cycle(s_or_graph, c: Mapping[str, int], color: int) -> list[str] | None:
    """A cycle inside colour class ``color``, or None if the class is a forest."""
    g = getattr(s_or_graph, "graph", s_or_graph)
    uf = UnionFind()
    forest: dict[str, set[str]] = {}
    for u, v in g.edges:
        if c[u] != color or c[v] != color:
            continue
        if not uf.union(u, v):
            path = _bfs_path(forest, u, v)
            assert path is not None
            return path
        forest.setdefault(u, set()).add(v)
        forest.setdefault(v, set()).add(u)
    return None


def is_forest(g, members) -> bool:
    """Plain acyclicity test of the subgraph induced by ``members``."""
    members = set(members)
    uf = UnionFind()
    for u, v in g.edges:
        if u in members and v in members and not uf.union(u, v):
            return False
    return True


def _check_total(s: Scene, c: Mapping[str, int]) -> Report | None:
    missing = [v for v in s.vertices if v not in c]
    if missing:
        return Report(False, "total", {"missing": sorted(missing)})
    bad = {v: c[v] for v in s.vertices if c[v] not in (1, 2)}
    if bad:
        return Report(False, "total", {"bad_colors": bad})
    return None


def check_forced(s: Scene, c: Mapping[str, int]) -> Report:
    for v in s.P:
        if c[v] != s.delta[v]:
            return Report(False, "forced", {"vertex": v, "expected": s.delta[v], "got": c[v]})
    for q in sorted(s.Q):
        if c[q] != 2:
            return Report(False, "forced", {"vertex": q, "expected": 2, "got": c[q]})
    return _pass("forced")


def check_g1(s: Scene, c: Mapping[str, int]) -> Report:
    g = s.graph
    adj = g.adjacency
    for v in g.vertices:
        if c[v] == 1:
            ones = [u for u in adj[v] if c[u] == 1]
            if len(ones) > 3:
                return Report(False, "G1", {"degree_vertex": v, "neighbors": sorted(ones)})
    for color in (1, 2):
        cyc = find_cycle(g, c, color)
        if cyc is not None:
            return Report(False, "G1", {"color": color, "cycle": cyc})
    return _pass("G1")


def check_g2(s: Scene, c: Mapping[str, int]) -> Report:
    adj = s.graph.adjacency
    pset = set(s.P)
    for v in s.ones:
        for u in sorted(adj[v]):
            if u not in pset and c[u] == 1:
                return Report(False, "G2", {"edge": [v, u]})
    return _pass("G2")


def mono_path(s: Scene, c: Mapping[str, int], u: str, w: str) -> list[str] | None:
    """A path from ``u`` to ``w`` using only vertices of colour ``c[u]``."""
    if u == w:
        raise ValueError("mono_path: endpoints must differ")
    if c[u] != c[w]:
        return None
    color = c[u]
    adj = s.graph.adjacency
    sub = {v: {x for x in adj[v] if c[x] == color} for v in s.vertices if c[v] == color}
    return _bfs_path(sub, u, w)


def mono_path_exists(s: Scene, c: Mapping[str, int], u: str, w: str) -> bool:
    return mono_path(s, c, u, w) is not None


def g3_pairs(s: Scene) -> list[tuple[str, str, str]]:
    """The (v, u, w) triples that (G3) constrains; empty unless exactly one
    precoloured vertex has colour 1."""
    ones = s.ones
    if len(ones) != 1:
        return []
    v = ones[0]
    g = s.graph
    out = []
    for u in sorted(g.adjacency[v] & s.Q):
        for w in sorted(g.k_neighbors(v) - {u}):
            out.append((v, u, w))
    return out


def check_g3(s: Scene, c: Mapping[str, int]) -> Report:
    for v, u, w in g3_pairs(s):
        path = mono_path(s, c, u, w)
        if path is not None:
            return Report(False, "G3", {"v": v, "u": u, "w": w, "path": path})
    return _pass("G3")


def check_g4(s: Scene, c: Mapping[str, int]) -> Report:
    g = s.graph
    pset = set(s.P)
    for v in g.vertices:
        if v in g.outer_vertices and v not in pset and c[v] == 1:
            ones = sorted(u for u in g.adjacency[v] if c[u] == 1)
            if len(ones) > 2:
                return Report(False, "G4", {"vertex": v, "neighbors": ones})
    return _pass("G4")


CHECKS = {"forced": check_forced, "G1": check_g1, "G2": check_g2, "G3": check_g3, "G4": check_g4}


def check_valid(s: Scene, c: Mapping[str, int], clauses=("forced", "G1", "G2", "G3", "G4")) -> Report:
    """Run the requested clauses in order; first failure wins."""
    bad = _check_total(s, c)
    if bad is not None:
        return bad
    for name in clauses:
        r = CHECKS[name](s, c)
        if not r.ok:
            return r
    return _pass("valid")


def is_valid(s: Scene, c: Mapping[str, int]) -> bool:
    return check_valid(s, c).ok
