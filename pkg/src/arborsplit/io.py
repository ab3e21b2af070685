"""JSON interchange for graphs, scenes, colourings and traces; DOT output."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .plane_graph import MalformedGraphError, PlaneGraph
from .scene import Coloring, Scene, SceneError, make_scene


class SchemaError(ValueError):
    """Input file does not match the expected JSON layout."""


def _load(path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: line {exc.lineno} col {exc.colno}: {exc.msg}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def graph_to_dict(g: PlaneGraph) -> dict[str, Any]:
    outer: Any
    if len(g.outer_face) == 1:
        outer = list(g.outer_face[0])
    else:
        outer = [list(w) for w in g.outer_face]
    return {
        "vertices": list(g.vertices),
        "rotation": {v: list(g.rotation[v]) for v in g.vertices},
        "outer_face": outer,
    }


def _require(d: Mapping, key: str, kind, where: str):
    if key not in d:
        raise SchemaError(f"{where}: missing field '{key}'")
    if not isinstance(d[key], kind):
        raise SchemaError(f"{where}: field '{key}' has type {type(d[key]).__name__}")
    return d[key]


def graph_from_dict(d: Mapping, where: str = "graph") -> PlaneGraph:
    if not isinstance(d, Mapping):
        raise SchemaError(f"{where}: expected an object")
    verts = _require(d, "vertices", list, where)
    rot = _require(d, "rotation", dict, where)
    outer = _require(d, "outer_face", list, where)
    if not all(isinstance(v, str) for v in verts):
        raise SchemaError(f"{where}: vertex identifiers must be strings")
    for v, nbrs in rot.items():
        if not isinstance(nbrs, list) or not all(isinstance(u, str) for u in nbrs):
            raise SchemaError(f"{where}: rotation['{v}'] must be a list of strings")
    try:
        return PlaneGraph.build(verts, rot, outer)
    except MalformedGraphError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def scene_to_dict(s: Scene) -> dict[str, Any]:
    d = graph_to_dict(s.graph)
    d["P"] = list(s.P)
    d["Q"] = sorted(s.Q)
    d["delta"] = {v: s.delta[v] for v in s.P}
    return d


def scene_from_dict(d: Mapping, where: str = "scene") -> Scene:
    g = graph_from_dict(d, where)
    P = d.get("P", [])
    Q = d.get("Q", [])
    delta = d.get("delta", {})
    if not isinstance(P, list) or not isinstance(Q, list) or not isinstance(delta, dict):
        raise SchemaError(f"{where}: P and Q must be lists, delta an object")
    for v, c in delta.items():
        if c not in (1, 2) or isinstance(c, bool):
            raise SchemaError(f"{where}: delta['{v}'] = {c!r} is not 1 or 2")
    try:
        return make_scene(g, P, Q, delta)
    except SceneError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def coloring_to_dict(c: Mapping[str, int]) -> dict[str, Any]:
    return {"assignment": {v: c[v] for v in sorted(c)}}


def coloring_from_dict(d: Mapping, where: str = "coloring") -> Coloring:
    if not isinstance(d, Mapping):
        raise SchemaError(f"{where}: expected an object")
    a = _require(d, "assignment", dict, where)
    for v, c in a.items():
        if c not in (1, 2) or isinstance(c, bool):
            raise SchemaError(f"{where}: assignment['{v}'] = {c!r} is not 1 or 2")
    return dict(a)


def read_graph(path) -> PlaneGraph:
    return graph_from_dict(_load(path), str(path))


def read_scene(path) -> Scene:
    return scene_from_dict(_load(path), str(path))


def read_coloring(path) -> Coloring:
    return coloring_from_dict(_load(path), str(path))


def write_graph(path, g: PlaneGraph) -> None:
    Path(path).write_text(dumps(graph_to_dict(g)))


def write_scene(path, s: Scene) -> None:
    Path(path).write_text(dumps(scene_to_dict(s)))


def write_coloring(path, c: Mapping[str, int]) -> None:
    Path(path).write_text(dumps(coloring_to_dict(c)))


def write_trace(path, trace) -> None:
    Path(path).write_text(dumps(trace.to_dict()))


def render_dot(g: PlaneGraph, coloring: Mapping[str, int] | None = None) -> str:
    """DOT text; colour-1 vertices are filled."""
    lines = ["graph G {"]
    if g.vertices:
        lines.append("  node [shape=circle];")
    for v in sorted(g.vertices):
        if coloring is not None and coloring[v] == 1:
            lines.append(f'  "{v}" [style=filled, fillcolor="#f4a261"];')
        else:
            lines.append(f'  "{v}";')
    for u, v in g.edges:
        attr = ""
        if coloring is not None and coloring[u] == coloring[v]:
            attr = ' [penwidth=2, color="#e76f51"]' if coloring[u] == 1 else ' [penwidth=2]'
        lines.append(f'  "{u}" -- "{v}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def render(g: PlaneGraph, coloring: Mapping[str, int] | None = None, fmt: str = "dot") -> str:
    if fmt != "dot":
        raise ValueError(f"unsupported render format {fmt!r}")
    return render_dot(g, coloring)
