"""Exhaustive ground truth over all 2-colourings of a scene.

Only the free vertices (outside P and Q) are enumerated.  Assignments are
scanned in lexicographic order over identifier-sorted free vertices with
colour 1 before colour 2, so the first hit is reproducible.  The validity
predicate here is a bitmask re-implementation, deliberately separate from
:mod:`arborsplit.validity`.
"""

from __future__ import annotations

import os
import weakref
from typing import Iterator

from .scene import Coloring, Scene

DEFAULT_CAP = int(os.environ.get("ARBORSPLIT_ORACLE_CAP", "20"))


class OracleCapExceeded(ValueError):
    pass


class _GraphMasks:
    """Identifier order and adjacency bitmasks of one graph."""

    def __init__(self, g) -> None:
        self.names = names = sorted(g.vertices)
        self.idx = idx = {v: i for i, v in enumerate(names)}
        self.adj = [0] * len(names)
        for u, v in g.edges:
            self.adj[idx[u]] |= 1 << idx[v]
            self.adj[idx[v]] |= 1 << idx[u]


# Many scenes share one graph; keep its masks while the graph is alive.
_GRAPH_CACHE: dict[int, _GraphMasks] = {}


def _graph_masks(g) -> _GraphMasks:
    key = id(g)
    gm = _GRAPH_CACHE.get(key)
    if gm is None:
        gm = _GRAPH_CACHE[key] = _GraphMasks(g)
        weakref.finalize(g, _GRAPH_CACHE.pop, key, None)
    return gm


class _Compiled:
    """Index/bitmask form of a scene."""

    def __init__(self, s: Scene) -> None:
        g = s.graph
        gm = _graph_masks(g)
        names, idx = gm.names, gm.idx
        self.names = names
        self.n = n = len(names)
        self.full = (1 << n) - 1
        self.adj = gm.adj
        pset = set(s.P)
        self.p_mask = sum(1 << idx[v] for v in pset)
        self.forced1 = sum(1 << idx[v] for v in s.P if s.delta[v] == 1)
        self.ones = [idx[v] for v in s.P if s.delta[v] == 1]
        outer = g.outer_vertices
        self.k_nonp = [idx[v] for v in names if v in outer and v not in pset]
        self.free = [idx[v] for v in names if v not in pset and v not in s.Q]
        self.g3: list[tuple[int, int]] = []
        if len(self.ones) == 1:
            v = s.ones[0]
            for u in g.adjacency[v] & s.Q:
                for w in g.k_neighbors(v) - {u}:
                    self.g3.append((idx[u], idx[w]))

    def _component(self, start: int, m: int) -> int:
        seen = 1 << start
        frontier = seen
        adj = self.adj
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= m & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def _is_forest(self, m: int) -> bool:
        adj = self.adj
        twice_edges = 0
        f = m
        while f:
            low = f & -f
            twice_edges += (adj[low.bit_length() - 1] & m).bit_count()
            f ^= low
        comps = 0
        rest = m
        while rest:
            low = rest & -rest
            rest &= ~self._component(low.bit_length() - 1, m)
            comps += 1
        return twice_edges // 2 == m.bit_count() - comps

    def valid(self, m1: int) -> bool:
        adj = self.adj
        m2 = self.full & ~m1
        for b in self.ones:
            if adj[b] & m1 & ~self.p_mask:
                return False
        f = m1
        while f:
            low = f & -f
            if (adj[low.bit_length() - 1] & m1).bit_count() > 3:
                return False
            f ^= low
        for v in self.k_nonp:
            if (m1 >> v) & 1 and (adj[v] & m1).bit_count() > 2:
                return False
        if not self._is_forest(m1) or not self._is_forest(m2):
            return False
        for u, w in self.g3:
            bit_u, bit_w = 1 << u, 1 << w
            m = m1 if m1 & bit_u else m2
            if m & bit_w and self._component(u, m) & bit_w:
                return False
        return True

    def masks(self) -> Iterator[int]:
        free = self.free
        k = len(free)
        # counter bit b set means free[k-1-b] gets colour 2; stepping the
        # counter clears its trailing ones and sets the next zero, which
        # maps to one OR and one AND-NOT on the colour-1 mask
        bit = [1 << free[k - 1 - b] for b in range(k)]
        below = [0] * k
        for b in range(1, k):
            below[b] = below[b - 1] | bit[b - 1]
        m1 = self.forced1 | sum(bit)
        yield m1
        for code in range(1, 1 << k):
            b = (code & -code).bit_length() - 1
            m1 = (m1 | below[b]) & ~bit[b]
            yield m1

    def decode(self, m1: int) -> Coloring:
        return {v: 1 if (m1 >> i) & 1 else 2 for i, v in enumerate(self.names)}


def _compile(s: Scene, cap: int | None) -> _Compiled:
    comp = _Compiled(s)
    limit = DEFAULT_CAP if cap is None else cap
    if len(comp.free) > limit:
        raise OracleCapExceeded(f"{len(comp.free)} free vertices exceed cap {limit}")
    return comp


def valid_colorings(s: Scene, cap: int | None = None) -> Iterator[Coloring]:
    comp = _compile(s, cap)
    for m1 in comp.masks():
        if comp.valid(m1):
            yield comp.decode(m1)


def brute_force(s: Scene, cap: int | None = None) -> Coloring | None:
    """First valid colouring in enumeration order, or None."""
    return next(valid_colorings(s, cap), None)


def count_valid(s: Scene, cap: int | None = None) -> int:
    comp = _compile(s, cap)
    return sum(1 for m1 in comp.masks() if comp.valid(m1))
