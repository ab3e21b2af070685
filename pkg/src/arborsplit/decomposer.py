"""Recursive colouring of scenes by reduction to strictly smaller scenes.

Reductions are tried in a fixed priority: small-scene oracle, components,
cut vertex or outer chord, separating 4-cycle, extension configuration,
and finally one of the four boundary cases.  Every internal node re-checks
its own colouring when defensive checks are on.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from typing import Any, Mapping

from .oracle import brute_force
from .plane_graph import PlaneGraph, cycle_sides, is_triangle_free
from .scene import Coloring, DerivationTrace, Scene, SceneError, SplitSpec, make_scene
from .structure import (
    MainQuad,
    NoCaseApplies,
    choose_main_quad,
    components,
    extension_split,
    find_cut,
    find_extension_config,
    find_separating_4cycle,
    outer_four_cycle,
)
from .validity import Report, check_valid

DEFAULT_BASE_N = 8
# A 4-cycle whose only free vertex touches the colour-1 precoloured vertex
# admits no reduction, so scenes this small always go to the oracle.
MIN_BASE_N = 4


class DecompositionError(RuntimeError):
    pass


class CertifiedFailure(DecompositionError):
    """A node produced a colouring that fails validation for its scene."""

    def __init__(self, message: str, trace: DerivationTrace, report: Report | None = None) -> None:
        super().__init__(message)
        self.trace = trace
        self.report = report


class NotTriangleFree(SceneError):
    def __init__(self) -> None:
        super().__init__("triangle-found", "input graph contains a triangle")


def base_threshold() -> int:
    return int(os.environ.get("ARBORSPLIT_BASE_N", DEFAULT_BASE_N))


@dataclass(frozen=True)
class GlueResult:
    coloring: Coloring
    star: bool
    q: str | None

    @property
    def level(self) -> str:
        return "full" if self.star else "G2+G4"


def star_anchor(s: Scene, split: SplitSpec, c1: Mapping[str, int]) -> str | None:
    """A vertex q of H on the outer boundary with H - q monochromatic under
    ``c1`` (H must be a path); None when no such q exists."""
    if split.h_is_cycle:
        return None
    h = split.h
    order = ([split.q] if split.q is not None else []) + sorted(h)
    for q in order:
        if q not in s.graph.outer_vertices:
            continue
        rest = {c1[v] for v in h if v != q}
        if len(rest) <= 1:
            return q
    return None


def glue(s: Scene, split: SplitSpec, c1: Mapping[str, int], c2: Mapping[str, int]) -> GlueResult:
    """Union of two colourings agreeing on the overlap."""
    for v in split.h:
        if c1.get(v) != c2.get(v):
            raise ValueError(f"glue: colourings disagree on overlap vertex {v}")
    if set(c1) != split.g1 or set(c2) != split.g2:
        raise ValueError("glue: colouring domains do not match the split")
    out = dict(c1)
    out.update(c2)
    q = star_anchor(s, split, c1)
    return GlueResult(out, q is not None, q)


def _restrict(d: Mapping[str, int], keys) -> dict[str, int]:
    return {k: d[k] for k in keys}


class _Solver:
    def __init__(self, base_n: int, defensive: bool) -> None:
        self.base_n = base_n
        self.defensive = defensive

    def _scene(self, node: DerivationTrace, g: PlaneGraph, P, Q, delta) -> Scene:
        try:
            return make_scene(g, P, Q, delta)
        except SceneError as exc:
            node.data["error"] = str(exc)
            raise CertifiedFailure(f"derived scene rejected at {node.kind}: {exc}", node) from exc

    def solve(self, s: Scene) -> tuple[Coloring, DerivationTrace]:
        g = s.graph
        n = len(g)
        if n <= max(self.base_n, MIN_BASE_N):
            node = DerivationTrace("base", s)
            c = brute_force(s)
            if c is None:
                raise CertifiedFailure("oracle found no valid colouring", node)
            node.coloring = c
            return c, node

        comps = components(g)
        if len(comps) > 1:
            node = DerivationTrace("components", s, data={"parts": [sorted(p) for p in comps]})
            c = self.reduce_components(s, comps, node)
        else:
            split = find_cut(g, s.P)
            if split is not None:
                node = DerivationTrace("cut", s, case="vertex" if len(split.h) == 1 else "chord",
                                       data={"h": list(split.h)})
                c = self.reduce_cut(s, split, node)
            else:
                cyc = find_separating_4cycle(g)
                if cyc is not None:
                    node = DerivationTrace("four_cycle", s, data={"cycle": list(cyc)})
                    c = self.reduce_4cycle(s, cyc, node)
                else:
                    cfg = find_extension_config(g, s.Q)
                    if cfg is not None:
                        x, sv, tv = cfg
                        node = DerivationTrace("extend", s, data={"x": x, "s": sv, "t": tv})
                        c = self.reduce_extend(s, x, sv, tv, node)
                    else:
                        try:
                            quad = choose_main_quad(g, s.P, s.Q, s.delta)
                        except NoCaseApplies as exc:
                            # An outer 4-cycle with an interior can still be
                            # cut like a separating one.
                            outer = outer_four_cycle(g)
                            if outer is None:
                                node = DerivationTrace("main_case", s, data={"error": str(exc)})
                                raise CertifiedFailure(str(exc), node) from exc
                            node = DerivationTrace("four_cycle", s, data={"cycle": list(outer), "outer": True})
                            c = self.reduce_4cycle(s, outer, node)
                        else:
                            node = DerivationTrace("main_case", s, case=quad.case, data={
                                "r": quad.r, "s": quad.s, "x": quad.x, "z": quad.z, "t": quad.t})
                            c = self.reduce_main(s, quad, node)
        node.coloring = c
        for child in node.children:
            if child.size >= n:
                raise CertifiedFailure("child scene is not smaller", node)
        if self.defensive:
            rep = check_valid(s, c)
            if not rep.ok:
                raise CertifiedFailure(f"{node.kind}/{node.case}: {rep.clause} fails", node, rep)
        return c, node

    def _recurse(self, node: DerivationTrace, s: Scene) -> Coloring:
        c, t = self.solve(s)
        node.children.append(t)
        return c

    # -- reductions -------------------------------------------------------

    def reduce_components(self, s: Scene, comps, node: DerivationTrace) -> Coloring:
        out: Coloring = {}
        for part in comps:
            sub = s.graph.induced_subgraph(part)
            P = s.P if set(s.P) <= part else ()
            out.update(self._recurse(node, self._scene(node, sub, P, s.Q & part, _restrict(s.delta, P))))
        return out

    def reduce_cut(self, s: Scene, split: SplitSpec, node: DerivationTrace) -> Coloring:
        g = s.graph
        g1 = g.induced_subgraph(split.g1)
        c1 = self._recurse(node, self._scene(node, g1, s.P, s.Q & split.g1, s.delta))
        g2 = g.induced_subgraph(split.g2)
        # H vertices already in Q stay in Q: moving them into P would drop
        # the (G3) protection they carry in S.
        P2 = tuple(v for v in split.h if v not in s.Q)
        c2 = self._recurse(node, self._scene(node, g2, P2, s.Q & split.g2, _restrict(c1, P2)))
        res = glue(s, split, c1, c2)
        node.data["glue"] = res.level
        return res.coloring

    def reduce_4cycle(self, s: Scene, cyc, node: DerivationTrace) -> Coloring:
        g = s.graph
        inside, _ = cycle_sides(g, cyc)
        g1 = g.induced_subgraph(set(g.vertices) - inside)
        c1 = self._recurse(node, self._scene(node, g1, s.P, s.Q, s.delta))
        naming = None
        for y in sorted(cyc):
            if c1[y] != 1:
                continue
            i = cyc.index(y)
            a, b, x = cyc[i - 1], cyc[(i + 1) % 4], cyc[(i + 2) % 4]
            if c1[a] == 2 and c1[b] == 2:
                sv, tv = sorted((a, b))
                naming = ("a", x, sv, y, tv)
            elif c1[a] == 2 or c1[b] == 2:
                sv, tv = (a, b) if c1[a] == 1 else (b, a)
                naming = ("b", x, sv, y, tv)
            if naming:
                break
        if naming is None:
            raise CertifiedFailure("4-cycle is monochromatic under the outer colouring", node)
        case, x, sv, y, tv = naming
        node.case = case
        node.data.update({"x": x, "s": sv, "y": y, "t": tv})
        g2 = g.induced_subgraph((inside | set(cyc)) - {y})
        Y = inside & g.adjacency[y]
        if case == "a":
            P2, Q2 = (x,), {sv, tv} | Y
        else:
            P2, Q2 = (x, sv), {tv} | Y
        c2 = self._recurse(node, self._scene(node, g2, P2, Q2, _restrict(c1, P2)))
        for v in (x, sv, tv):
            if c1[v] != c2[v]:
                raise CertifiedFailure(f"inner colouring disagrees on {v}", node)
        node.assign = {y: 1}
        out = dict(c1)
        out.update(c2)
        out[y] = 1
        return out

    def reduce_extend(self, s: Scene, x: str, sv: str, tv: str, node: DerivationTrace) -> Coloring:
        g = s.graph
        split = extension_split(g, x, sv, tv, s.P)
        split.check(g, s.P)
        g1 = g.induced_subgraph(split.g1)
        c1 = self._recurse(node, self._scene(node, g1, s.P, s.Q & split.g1, s.delta))
        g2 = g.induced_subgraph(split.g2)
        P2 = (x, tv)
        Q2 = (s.Q & split.g2) - {tv}
        c2 = self._recurse(node, self._scene(node, g2, P2, Q2, _restrict(c1, P2)))
        res = glue(s, split, c1, c2)
        node.data["glue"] = res.level
        return res.coloring

    def reduce_main(self, s: Scene, quad: MainQuad, node: DerivationTrace) -> Coloring:
        g = s.graph
        on = g.outer_vertices
        x, z = quad.x, quad.z
        if quad.case == "A":
            drop = {x}
            extra = set(g.adjacency[x] - on)
        elif quad.case == "B":
            drop = {x, z}
            Z = (g.adjacency[x] | g.adjacency[z]) - on
            pool = Z | {quad.s, quad.t}
            inner_edges = [e for e in g.edges if e[0] in pool and e[1] in pool]
            if len(inner_edges) > 1 or any(not set(e) <= Z for e in inner_edges):
                node.data["edges"] = [list(e) for e in inner_edges]
                raise CertifiedFailure("case B: unexpected edges among Z + {s, t}", node)
            extra = set(Z)
            if inner_edges:
                a = min(inner_edges[0])
                node.data["a"] = a
                extra.discard(a)
        else:
            drop = {x}
            extra = set(g.adjacency[x]) - s.Q - set(s.P)
        sub = g.without(drop)
        c = self._recurse(node, self._scene(node, sub, s.P, s.Q | extra, s.delta))
        node.assign = {v: 1 for v in sorted(drop)}
        out = dict(c)
        out.update(node.assign)
        return out


def color_scene(s: Scene, base_n: int | None = None, defensive: bool = True) -> tuple[Coloring, DerivationTrace]:
    """Valid colouring of a scene with at most two precoloured vertices."""
    if len(s.P) > 2:
        raise ValueError(f"color_scene needs |P| <= 2, got {len(s.P)}")
    need = 4 * len(s) + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)
    solver = _Solver(base_threshold() if base_n is None else base_n, defensive)
    return solver.solve(s)


def decompose(g: PlaneGraph, base_n: int | None = None, defensive: bool = True) -> tuple[Coloring, DerivationTrace]:
    """Split V(g) into colour 2 (a forest) and colour 1 (a forest of max degree 3)."""
    if not is_triangle_free(g):
        raise NotTriangleFree()
    return color_scene(make_scene(g), base_n=base_n, defensive=defensive)


def replay(trace: DerivationTrace) -> Coloring:
    """Rebuild the colouring bottom-up: oracle at leaves, unions above."""
    if trace.kind == "base":
        c = brute_force(trace.scene)
        if c is None:
            raise DecompositionError("replay: base scene has no valid colouring")
        return c
    out: Coloring = {}
    for child in trace.children:
        out.update(replay(child))
    out.update(trace.assign)
    return out


def replay_dict(d: Mapping[str, Any]) -> Coloring:
    """Same as :func:`replay` for the JSON form of a trace."""
    from .io import scene_from_dict

    if d["kind"] == "base":
        c = brute_force(scene_from_dict(d["scene"], "trace"))
        if c is None:
            raise DecompositionError("replay: base scene has no valid colouring")
        return c
    out: Coloring = {}
    for child in d["children"]:
        out.update(replay_dict(child))
    out.update(d.get("assign", {}))
    return out
