"""Finders for the configurations that drive each reduction.

All finders scan in identifier order and return the first hit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .plane_graph import PlaneGraph, canonical_walk, cycle_sides, outer_cycle
from .scene import SplitSpec


def components(g: PlaneGraph) -> list[frozenset[str]]:
    comp = g._component_index()
    groups: dict[int, set[str]] = {}
    for v, c in comp.items():
        groups.setdefault(c, set()).add(v)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def cut_vertices(g: PlaneGraph) -> list[str]:
    """Articulation points (iterative Hopcroft-Tarjan), sorted."""
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    cuts: set[str] = set()
    t = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, None, iter(g.rotation[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if u in disc:
                    low[v] = min(low[v], disc[u])
                    continue
                disc[u] = low[u] = t
                t += 1
                if v == root:
                    root_children += 1
                stack.append((u, v, iter(g.rotation[u])))
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts)


def _components_without(g: PlaneGraph, drop: set[str]) -> list[set[str]]:
    seen: set[str] = set()
    out = []
    for v in sorted(g.vertices):
        if v in drop or v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            a = stack.pop()
            for b in g.rotation[a]:
                if b not in drop and b not in comp:
                    comp.add(b)
                    stack.append(b)
        seen |= comp
        out.append(comp)
    return out


def chords(g: PlaneGraph) -> list[tuple[str, str]]:
    """Edges joining two outer-cycle vertices that are not outer edges."""
    if len(g.outer_face) != 1:
        return []
    walk = g.outer_face[0]
    on = set(walk)
    bnd = {frozenset((walk[i], walk[(i + 1) % len(walk)])) for i in range(len(walk))}
    return [e for e in g.edges if e[0] in on and e[1] in on and frozenset(e) not in bnd]


def find_cut(g: PlaneGraph, P: Sequence[str] = ()) -> SplitSpec | None:
    """A cut vertex, or failing that a chord of the outer cycle, as a split
    with P inside G1."""
    cuts = cut_vertices(g)
    if cuts:
        w = cuts[0]
        parts = _components_without(g, {w})
        rest_p = set(P) - {w}
        if rest_p:
            first = next(c for c in parts if c & rest_p)
        else:
            outer = sorted(g.outer_vertices - {w})
            first = next(c for c in parts if outer[0] in c)
        g1 = frozenset(first | {w})
        g2 = frozenset(set(g.vertices) - first)
        return SplitSpec(g1, g2, (w,), q=w)
    ch = chords(g)
    if not ch:
        return None
    u, v = ch[0]
    walk = list(g.outer_face[0])
    iu, iv = walk.index(u), walk.index(v)
    n = len(walk)
    arc1 = [walk[(iu + k) % n] for k in range((iv - iu) % n + 1)]
    arc2 = [walk[(iv + k) % n] for k in range((iu - iv) % n + 1)]
    side1 = set(arc1) | cycle_sides(g, arc1)[0]
    side2 = set(arc2) | cycle_sides(g, arc2)[0]
    rest_p = set(P) - {u, v}
    if rest_p and not rest_p <= side1:
        side1, side2 = side2, side1
    return SplitSpec(frozenset(side1), frozenset(side2), (u, v), q=u)


def four_cycles(g: PlaneGraph):
    """Every 4-cycle once, as (a, b, c, d) with a smallest and b < d."""
    adj = g.adjacency
    for a in sorted(g.vertices):
        nbrs = sorted(x for x in adj[a] if x > a)
        for i, b in enumerate(nbrs):
            for d in nbrs[i + 1 :]:
                for c in sorted(adj[b] & adj[d]):
                    if c > a:
                        yield (a, b, c, d)


def find_separating_4cycle(g: PlaneGraph) -> tuple[str, ...] | None:
    """First 4-cycle that bounds no face (outer face included)."""
    faces = {f.walk for f in g.faces if len(f.walk) == 4}
    faces |= {canonical_walk(w) for w in g.outer_face if len(w) == 4}
    for cyc in four_cycles(g):
        keys = {canonical_walk(cyc), canonical_walk((cyc[0], cyc[3], cyc[2], cyc[1]))}
        if not keys & faces:
            return cyc
    return None


def outer_four_cycle(g: PlaneGraph) -> tuple[str, ...] | None:
    """The outer walk when it is a 4-cycle with something inside it."""
    if len(g.outer_face) != 1 or len(g) <= 4:
        return None
    walk = g.outer_face[0]
    if len(walk) == 4 and len(set(walk)) == 4:
        return walk
    return None


def _cyc_dist(pos: Mapping[str, int], n: int, a: str, b: str) -> int:
    d = abs(pos[a] - pos[b])
    return min(d, n - d)


def find_extension_config(g: PlaneGraph, Q) -> tuple[str, str, str] | None:
    """Internal x with non-adjacent outer neighbours s, t and s in Q."""
    if not Q or len(g.outer_face) != 1:
        return None
    walk = g.outer_face[0]
    pos = {v: i for i, v in enumerate(walk)}
    on = g.outer_vertices
    Q = set(Q)
    for x in sorted(set(g.vertices) - on):
        kn = sorted(g.adjacency[x] & on)
        for s in kn:
            if s not in Q:
                continue
            cands = [t for t in kn if t != s and not g.has_edge(s, t)]
            if cands:
                t = min(cands, key=lambda t: (-_cyc_dist(pos, len(walk), s, t), t))
                return (x, s, t)
    return None


def extension_split(g: PlaneGraph, x: str, s: str, t: str, P: Sequence[str] = ()) -> SplitSpec:
    """Cut G along the path s-x-t (x internal, s and t on the outer cycle)
    into the two closed sides, with P - {s, t} on the G1 side."""
    walk = list(g.outer_face[0])
    n = len(walk)
    i_s, i_t = walk.index(s), walk.index(t)
    arc1 = [walk[(i_s + k) % n] for k in range((i_t - i_s) % n + 1)]
    arc2 = [walk[(i_t + k) % n] for k in range((i_s - i_t) % n + 1)]
    side1 = set(arc1) | {x} | cycle_sides(g, arc1 + [x])[0]
    side2 = set(arc2) | {x} | cycle_sides(g, arc2 + [x])[0]
    rest_p = set(P) - {s, t}
    if rest_p and not rest_p <= side1:
        side1, side2 = side2, side1
    return SplitSpec(frozenset(side1), frozenset(side2), (s, x, t), q=s)


@dataclass(frozen=True)
class MainQuad:
    case: str
    r: str
    s: str
    x: str
    z: str
    t: str


class NoCaseApplies(RuntimeError):
    """No boundary position matches any of the four final cases."""


def choose_main_quad(g: PlaneGraph, P: Sequence[str], Q, delta: Mapping[str, int]) -> MainQuad:
    ob = outer_cycle(g)
    if not ob.simple or len(ob.walk) < 4:
        raise NoCaseApplies("outer boundary is not a cycle of length >= 4")
    walk = ob.walk
    n = len(walk)
    pos = {v: i for i, v in enumerate(walk)}
    pset, Q = set(P), set(Q)
    ones = {v for v in P if delta[v] == 1}

    def step(v: str, away: str) -> str:
        i = pos[v]
        a, b = walk[(i + 1) % n], walk[i - 1]
        return a if b == away else b

    for x in sorted(walk):
        if x in pset or x in Q or g.adjacency[x] & ones:
            continue
        i = pos[x]
        nb = sorted({walk[(i + 1) % n], walk[i - 1]})
        orients = [(nb[0], nb[1]), (nb[1], nb[0])]
        quads = []
        for s, z in orients:
            quads.append((step(s, x), s, z, step(z, x)))
        for case in "ABCD":
            for r, s, z, t in quads:
                if case == "A":
                    hit = s in Q and z in Q
                elif case == "B":
                    hit = s in Q and z not in pset | Q and t in Q
                elif case == "C":
                    hit = s in Q and z not in Q and t not in Q
                else:
                    hit = not {r, s, z, t} & Q
                if hit:
                    return MainQuad(case, r, s, x, z, t)
    raise NoCaseApplies(
        f"no case applies on boundary {list(walk)} with P={list(P)} Q={sorted(Q)} delta={dict(delta)}"
    )
