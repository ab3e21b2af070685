"""Plane graphs stored as rotation systems with a designated outer face.

Rotations are clockwise.  Faces are traced with the rule: after arriving at
``v`` from ``u``, leave along ``(v, w)`` where ``w`` follows ``u`` in the
rotation of ``v``.  Every connected component carries exactly one designated
outer walk; an isolated vertex ``v`` has the degenerate walk ``(v,)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Dart = tuple[str, str]
Walk = tuple[str, ...]


class MalformedGraphError(ValueError):
    """The rotation system or outer face description is inconsistent."""


@dataclass(frozen=True)
class FaceWalk:
    walk: Walk
    is_outer: bool = False

    def darts(self) -> list[Dart]:
        w = self.walk
        if len(w) < 2:
            return []
        return [(w[i], w[(i + 1) % len(w)]) for i in range(len(w))]


def walk_darts(walk: Sequence[str]) -> list[Dart]:
    if len(walk) < 2:
        return []
    return [(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))]


def canonical_walk(walk: Sequence[str]) -> Walk:
    """Rotate a closed walk so that it starts at its smallest dart."""
    n = len(walk)
    if n < 2:
        return tuple(walk)
    best = min(range(n), key=lambda i: (walk[i], walk[(i + 1) % n]))
    return tuple(walk[best:]) + tuple(walk[:best])


class _DSU:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class PlaneGraph:
    vertices: tuple[str, ...]
    rotation: Mapping[str, tuple[str, ...]] = field(compare=True)
    outer_face: tuple[Walk, ...] = ()

    def __post_init__(self) -> None:
        self._validate()

    # -- construction -----------------------------------------------------

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        rotation: Mapping[str, Sequence[str]],
        outer_face: Sequence[str] | Sequence[Sequence[str]] | None = None,
    ) -> "PlaneGraph":
        """Build from plain containers.

        ``outer_face`` is either one walk (connected graphs) or a list of
        walks, one per component.  When omitted, each component gets its
        longest traced face (ties broken by trace order).
        """
        verts = tuple(vertices)
        rot = {v: tuple(rotation.get(v, ())) for v in verts}
        if outer_face is None:
            walks: tuple[Walk, ...] | None = None
        elif len(outer_face) == 0:
            walks = ()
        elif isinstance(outer_face[0], str):
            walks = (tuple(outer_face),)  # type: ignore[arg-type]
        else:
            walks = tuple(tuple(w) for w in outer_face)  # type: ignore[union-attr]
        if walks is None:
            probe = object.__new__(cls)
            object.__setattr__(probe, "vertices", verts)
            object.__setattr__(probe, "rotation", rot)
            object.__setattr__(probe, "outer_face", ())
            probe._check_rotations()
            walks = probe._default_outer()
        return cls(verts, rot, tuple(canonical_walk(w) for w in walks))

    def _default_outer(self) -> tuple[Walk, ...]:
        faces = self._trace()
        comp_of = self._component_index()
        chosen: dict[int, Walk] = {}
        for w in faces:
            c = comp_of[w[0]]
            if c not in chosen or len(w) > len(chosen[c]):
                chosen[c] = w
        for v in self.vertices:
            if not self.rotation[v]:
                chosen[comp_of[v]] = (v,)
        return tuple(chosen[c] for c in sorted(chosen))

    # -- validation -------------------------------------------------------

    def _check_rotations(self) -> None:
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise MalformedGraphError("duplicate vertex identifiers")
        if set(self.rotation) != vset:
            raise MalformedGraphError("rotation keys differ from vertex set")
        for v, nbrs in self.rotation.items():
            if len(set(nbrs)) != len(nbrs):
                raise MalformedGraphError(f"repeated neighbour in rotation of {v}")
            for u in nbrs:
                if u == v:
                    raise MalformedGraphError(f"loop at {v}")
                if u not in vset:
                    raise MalformedGraphError(f"unknown neighbour {u} of {v}")
                if v not in self.rotation[u]:
                    raise MalformedGraphError(f"asymmetric rotation: {v}->{u}")

    def _validate(self) -> None:
        self._check_rotations()
        faces = {canonical_walk(w) for w in self._trace()}
        comp_of = self._component_index()
        seen: set[int] = set()
        for w in self.outer_face:
            if len(w) == 1:
                if self.rotation.get(w[0]):
                    raise MalformedGraphError(f"degenerate outer walk at non-isolated {w[0]}")
            elif canonical_walk(w) not in faces:
                raise MalformedGraphError(f"outer walk {list(w)} is not a traced face")
            c = comp_of[w[0]]
            if c in seen:
                raise MalformedGraphError("two outer walks in one component")
            seen.add(c)
        if len(seen) != len(set(comp_of.values())):
            raise MalformedGraphError("some component has no outer walk")

    # -- basic structure --------------------------------------------------

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self.rotation[v]

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        return {v: frozenset(n) for v, n in self.rotation.items()}

    @cached_property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted((u, v) for u in self.vertices for v in self.rotation[u] if u < v))

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.adjacency[u]

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def _rot_index(self) -> dict[str, dict[str, int]]:
        return {v: {u: i for i, u in enumerate(n)} for v, n in self.rotation.items()}

    def successor(self, v: str, u: str) -> str:
        """Neighbour following ``u`` clockwise around ``v``."""
        nbrs = self.rotation[v]
        return nbrs[(self._rot_index[v][u] + 1) % len(nbrs)]

    def _trace(self) -> list[Walk]:
        seen: set[Dart] = set()
        walks: list[Walk] = []
        for v in self.vertices:
            for u in self.rotation[v]:
                if (v, u) in seen:
                    continue
                walk = []
                a, b = v, u
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    a, b = b, self.successor(b, a)
                walks.append(tuple(walk))
        return walks

    def _component_index(self) -> dict[str, int]:
        comp: dict[str, int] = {}
        k = 0
        for root in self.vertices:
            if root in comp:
                continue
            comp[root] = k
            stack = [root]
            while stack:
                a = stack.pop()
                for b in self.rotation[a]:
                    if b not in comp:
                        comp[b] = k
                        stack.append(b)
            k += 1
        return comp

    @cached_property
    def triangle(self) -> tuple[str, str, str] | None:
        """Some triangle (u, v, w) with uv the first such edge, or None."""
        adj = self.adjacency
        for u, v in self.edges:
            common = adj[u] & adj[v]
            if common:
                return (u, v, min(common))
        return None

    @cached_property
    def outer_darts(self) -> frozenset[Dart]:
        return frozenset(d for w in self.outer_face for d in walk_darts(w))

    @cached_property
    def outer_vertices(self) -> frozenset[str]:
        return frozenset(v for w in self.outer_face for v in w)

    @cached_property
    def faces(self) -> tuple[FaceWalk, ...]:
        outer = {canonical_walk(w) for w in self.outer_face}
        out = [FaceWalk(canonical_walk(w), canonical_walk(w) in outer) for w in self._trace()]
        for v in self.vertices:
            if not self.rotation[v]:
                out.append(FaceWalk((v,), (v,) in outer))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> dict[Dart, int]:
        idx: dict[Dart, int] = {}
        for i, f in enumerate(self.faces):
            for d in f.darts():
                idx[d] = i
        return idx

    @cached_property
    def _boundary_nbrs(self) -> dict[str, frozenset[str]]:
        acc: dict[str, set[str]] = {v: set() for v in self.outer_vertices}
        for a, b in self.outer_darts:
            acc[a].add(b)
            acc[b].add(a)
        return {v: frozenset(s) for v, s in acc.items()}

    def k_neighbors(self, v: str) -> frozenset[str]:
        return self._boundary_nbrs.get(v, frozenset())

    # -- surgery ----------------------------------------------------------

    def induced_subgraph(self, keep: Iterable[str]) -> "PlaneGraph":
        """Restrict to ``keep`` with the inherited embedding.

        The new outer walk of each component is the face bordering the
        region that contains the old outer face; regions are tracked by
        merging old faces across every removed edge.  Components that do not
        touch that region get their longest face.
        """
        keep_set = set(keep)
        if not keep_set:
            raise ValueError("induced_subgraph: empty keep set")
        unknown = keep_set - set(self.vertices)
        if unknown:
            raise ValueError(f"induced_subgraph: unknown vertices {sorted(unknown)}")
        verts = tuple(v for v in self.vertices if v in keep_set)
        rot = {v: tuple(u for u in self.rotation[v] if u in keep_set) for v in verts}
        if len(verts) == len(self.vertices):
            return self

        faces = self.faces
        fod = self.face_of_dart
        dsu = _DSU(len(faces))
        outer_ids = [i for i, f in enumerate(faces) if f.is_outer]
        for i in outer_ids[1:]:
            dsu.union(outer_ids[0], i)
        for u, v in self.edges:
            if u not in keep_set or v not in keep_set:
                dsu.union(fod[(u, v)], fod[(v, u)])
        outer_cls = dsu.find(outer_ids[0]) if outer_ids else -1

        sub = object.__new__(PlaneGraph)
        object.__setattr__(sub, "vertices", verts)
        object.__setattr__(sub, "rotation", rot)
        object.__setattr__(sub, "outer_face", ())
        comp_of = sub._component_index()
        chosen: dict[int, Walk] = {}
        fallback: dict[int, Walk] = {}
        for w in sub._trace():
            c = comp_of[w[0]]
            cls = dsu.find(fod[(w[0], w[1])])
            if cls == outer_cls:
                chosen[c] = w
            if c not in fallback or len(w) > len(fallback[c]):
                fallback[c] = w
        for v in verts:
            if not rot[v]:
                chosen[comp_of[v]] = (v,)
        walks = tuple(canonical_walk(chosen.get(c, fallback.get(c, ()))) for c in sorted(set(comp_of.values())))
        return PlaneGraph(verts, rot, walks)

    def without(self, drop: Iterable[str]) -> "PlaneGraph":
        d = set(drop)
        return self.induced_subgraph(v for v in self.vertices if v not in d)


# -- free functions mirroring the module operations ---------------------------


def trace_faces(g: PlaneGraph) -> list[FaceWalk]:
    return list(g.faces)


def is_triangle_free(g: PlaneGraph) -> bool:
    return g.triangle is None


def find_triangle(g: PlaneGraph) -> tuple[str, str, str] | None:
    return g.triangle


@dataclass(frozen=True)
class OuterBoundary:
    walk: Walk
    simple: bool
    induced: bool


def outer_cycle(g: PlaneGraph) -> OuterBoundary:
    """The outer boundary walk of a connected graph, with shape flags."""
    if len(g.outer_face) != 1:
        raise ValueError("outer_cycle expects a connected graph")
    walk = g.outer_face[0]
    simple = len(walk) >= 3 and len(set(walk)) == len(walk)
    induced = False
    if simple:
        on = set(walk)
        boundary = {frozenset(d) for d in walk_darts(walk)}
        induced = all(frozenset(e) in boundary for e in g.edges if e[0] in on and e[1] in on)
    return OuterBoundary(walk, simple, induced)


def internal_vertices(g: PlaneGraph) -> frozenset[str]:
    return frozenset(g.vertices) - g.outer_vertices


def induced_subgraph(g: PlaneGraph, keep: Iterable[str]) -> PlaneGraph:
    return g.induced_subgraph(keep)


def cycle_sides(g: PlaneGraph, cycle: Sequence[str]) -> tuple[frozenset[str], frozenset[str]]:
    """Split the vertices off ``cycle`` into (inside, outside).

    "Outside" is the side holding the outer face.  The side containing the
    face of dart ``(c[i], c[i+1])`` is found by sweeping clockwise at each
    cycle vertex from the previous cycle vertex to the next one.
    """
    m = len(cycle)
    if m < 3 or len(set(cycle)) != m:
        raise ValueError("cycle_sides: not a simple cycle")
    for i in range(m):
        if not g.has_edge(cycle[i], cycle[(i + 1) % m]):
            raise ValueError("cycle_sides: consecutive cycle vertices not adjacent")
    on = set(cycle)
    left_seed: set[str] = set()
    right_seed: set[str] = set()
    for i in range(m):
        prev, cur, nxt = cycle[i - 1], cycle[i], cycle[(i + 1) % m]
        w = g.successor(cur, prev)
        while w != nxt:
            if w not in on:
                left_seed.add(w)
            w = g.successor(cur, w)
        w = g.successor(cur, nxt)
        while w != prev:
            if w not in on:
                right_seed.add(w)
            w = g.successor(cur, w)

    def flood(seed: set[str]) -> set[str]:
        out = set(seed)
        stack = list(seed)
        while stack:
            a = stack.pop()
            for b in g.rotation[a]:
                if b not in on and b not in out:
                    out.add(b)
                    stack.append(b)
        return out

    left, right = flood(left_seed), flood(right_seed)
    fwd = walk_darts(cycle)
    left_outer = any(d in g.outer_darts for d in fwd) or bool(left & g.outer_vertices)
    right_outer = any((b, a) in g.outer_darts for a, b in fwd) or bool(right & g.outer_vertices)
    if left_outer == right_outer:
        raise ValueError("cycle_sides: cannot decide which side holds the outer face")
    if left_outer:
        return frozenset(right), frozenset(left)
    return frozenset(left), frozenset(right)


def disk_subgraph(g: PlaneGraph, cycle: Sequence[str]) -> PlaneGraph:
    """Subgraph drawn in the closed disk bounded by ``cycle``."""
    inside, _ = cycle_sides(g, cycle)
    return g.induced_subgraph(set(inside) | set(cycle))
