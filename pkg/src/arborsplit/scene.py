"""Scenes, colourings, split descriptions and derivation traces."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from .plane_graph import PlaneGraph, find_triangle

Coloring = dict[str, int]


class SceneError(ValueError):
    """A tuple (G, P, Q, delta) that is not a scene.

    ``kind`` is one of ``triangle-found``, ``P-not-consecutive``,
    ``Q-meets-P``, ``Q-not-on-boundary``, ``Q-not-independent``,
    ``delta-domain-mismatch``, ``bad-color``.
    """

    def __init__(self, kind: str, detail: str) -> None:
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail


def _consecutive_on_walk(walk: Sequence[str], seg: Sequence[str]) -> bool:
    n, k = len(walk), len(seg)
    if k > n:
        return False
    for direction in (1, -1):
        for start in range(n):
            if all(walk[(start + direction * i) % n] == seg[i] for i in range(k)):
                return True
    return False


@dataclass(frozen=True)
class Scene:
    graph: PlaneGraph
    P: tuple[str, ...] = ()
    Q: frozenset[str] = frozenset()
    delta: Mapping[str, int] = field(default_factory=dict)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.graph.vertices

    def __len__(self) -> int:
        return len(self.graph)

    @property
    def ones(self) -> tuple[str, ...]:
        """Precoloured vertices with colour 1."""
        return tuple(v for v in self.P if self.delta[v] == 1)


def make_scene(
    g: PlaneGraph,
    P: Sequence[str] = (),
    Q: Iterable[str] = (),
    delta: Mapping[str, int] | None = None,
) -> Scene:
    """Validate the scene axioms and build a :class:`Scene`."""
    P = tuple(P)
    Qs = frozenset(Q)
    delta = dict(delta or {})
    tri = find_triangle(g)
    if tri is not None:
        raise SceneError("triangle-found", f"triangle {list(tri)}")
    if set(delta) != set(P) or len(set(P)) != len(P):
        raise SceneError("delta-domain-mismatch", f"P={list(P)} delta keys={sorted(delta)}")
    bad = {v: c for v, c in delta.items() if c not in (1, 2)}
    if bad:
        raise SceneError("bad-color", f"delta values outside {{1,2}}: {bad}")
    vset = set(g.vertices)
    missing = (set(P) | Qs) - vset
    if missing:
        raise SceneError("P-not-consecutive" if set(P) & missing else "Q-not-on-boundary",
                         f"unknown vertices {sorted(missing)}")
    if P and not any(_consecutive_on_walk(w, P) for w in g.outer_face):
        raise SceneError("P-not-consecutive", f"{list(P)} is not a boundary segment")
    if Qs & set(P):
        raise SceneError("Q-meets-P", f"{sorted(Qs & set(P))}")
    off = Qs - g.outer_vertices
    if off:
        raise SceneError("Q-not-on-boundary", f"{sorted(off)}")
    adj = g.adjacency
    for q in sorted(Qs):
        hit = adj[q] & Qs
        if hit:
            raise SceneError("Q-not-independent", f"edge {q}-{min(hit)}")
    return Scene(g, P, Qs, delta)


def forced_assignments(s: Scene) -> Coloring:
    out = {v: s.delta[v] for v in s.P}
    for q in s.Q:
        out[q] = 2
    return out


@dataclass(frozen=True)
class SplitSpec:
    """G = G1 ∪ G2 with the overlap H given as a path (or cycle) sequence."""

    g1: frozenset[str]
    g2: frozenset[str]
    h: tuple[str, ...]
    q: str | None = None
    h_is_cycle: bool = False

    def check(self, g: PlaneGraph, P: Sequence[str] = ()) -> None:
        if self.g1 | self.g2 != set(g.vertices):
            raise ValueError("split does not cover the graph")
        if self.g1 & self.g2 != set(self.h) or len(set(self.h)) != len(self.h):
            raise ValueError("overlap differs from H")
        if not set(P) <= self.g1:
            raise ValueError("P not inside G1")
        only1, only2 = self.g1 - self.g2, self.g2 - self.g1
        for u in only1:
            if g.adjacency[u] & only2:
                raise ValueError("edge between G1-H and G2-H")
        hs = set(self.h)
        m = len(self.h)
        want = {frozenset((self.h[i], self.h[i + 1])) for i in range(m - 1)}
        if self.h_is_cycle:
            want.add(frozenset((self.h[-1], self.h[0])))
        have = {frozenset(e) for e in g.edges if e[0] in hs and e[1] in hs}
        if want != have:
            raise ValueError("H does not induce the stated path/cycle")
        if self.q is not None and self.q not in hs:
            raise ValueError("anchor q not in H")


@dataclass
class DerivationTrace:
    """One node of the recursion tree.

    ``assign`` holds the colours fixed by this node itself (deleted vertices);
    the node's colouring is the union of its children's colourings and
    ``assign``.  Base nodes keep their scene so replay can rerun the oracle.
    """

    kind: str
    scene: Scene
    case: str | None = None
    data: dict[str, Any] = field(default_factory=dict)
    assign: dict[str, int] = field(default_factory=dict)
    children: list["DerivationTrace"] = field(default_factory=list)
    coloring: Coloring | None = None

    @property
    def size(self) -> int:
        return len(self.scene)

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)

    def nodes(self):
        stack = [self]
        while stack:
            n = stack.pop()
            yield n
            stack.extend(reversed(n.children))

    def to_dict(self) -> dict[str, Any]:
        from .io import scene_to_dict

        out: dict[str, Any] = {"kind": self.kind, "case": self.case, "size": self.size}
        if self.data:
            out["data"] = self.data
        if self.assign:
            out["assign"] = dict(sorted(self.assign.items()))
        if self.kind == "base":
            out["scene"] = scene_to_dict(self.scene)
            out["coloring"] = dict(sorted((self.coloring or {}).items()))
        out["children"] = [c.to_dict() for c in self.children]
        return out
