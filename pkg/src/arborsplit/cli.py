"""Command-line driver: ``arborsplit decompose|check|oracle|gen|render``.

Exit codes: 0 success, 1 domain failure (no or invalid colouring),
2 usage or IO error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators, io
from .decomposer import CertifiedFailure, NotTriangleFree, base_threshold, decompose
from .oracle import OracleCapExceeded, brute_force, count_valid
from .scene import SceneError, make_scene
from .validity import check_valid

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_scene_or_graph(path: str):
    """Accept either a scene file or a bare graph file (empty P and Q)."""
    raw = io._load(path)
    if isinstance(raw, dict) and any(k in raw for k in ("P", "Q", "delta")):
        return io.scene_from_dict(raw, path)
    return make_scene(io.graph_from_dict(raw, path))


def cmd_decompose(a) -> int:
    g = io.read_graph(a.input)
    try:
        c, trace = decompose(g, base_n=base_threshold(), defensive=not a.no_defensive_checks)
    except NotTriangleFree as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except CertifiedFailure as exc:
        print(f"certified failure: {exc}", file=sys.stderr)
        if a.trace:
            io.write_trace(a.trace, exc.trace)
        return EXIT_DOMAIN
    io.write_coloring(a.output, c)
    if a.trace:
        io.write_trace(a.trace, trace)
    return EXIT_OK


def cmd_check(a) -> int:
    s = _read_scene_or_graph(a.scene)
    c = io.read_coloring(a.coloring)
    rep = check_valid(s, c)
    sys.stdout.write(io.dumps(rep.to_dict()))
    return EXIT_OK if rep.ok else EXIT_DOMAIN


def cmd_oracle(a) -> int:
    s = _read_scene_or_graph(a.input)
    if a.count:
        n = count_valid(s, a.cap)
        print(json.dumps({"count": n}))
        return EXIT_OK if n else EXIT_DOMAIN
    c = brute_force(s, a.cap)
    if c is None:
        print(json.dumps({"assignment": None}))
        return EXIT_DOMAIN
    sys.stdout.write(io.dumps(io.coloring_to_dict(c)))
    return EXIT_OK


def _parse_params(items: list[str]) -> dict[str, int]:
    out = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep:
            raise ValueError(f"parameter {item!r} is not key=value")
        out[key] = int(val)
    return out


def cmd_gen(a) -> int:
    p = _parse_params(a.params)
    if a.family == "grid":
        g = generators.grid(p.get("rows", 3), p.get("cols", 3))
    elif a.family == "cycle":
        g = generators.even_cycle(p.get("n", 4))
    else:
        g = generators.grow_quadrangulation(steps=p.get("steps", 50), rng_seed=p.get("seed", 0))
    io.write_graph(a.out, g)
    return EXIT_OK


def cmd_render(a) -> int:
    g = io.read_graph(a.input)
    c = io.read_coloring(a.coloring) if a.coloring else None
    if c is not None and set(c) != set(g.vertices):
        print("error: colouring does not cover the graph", file=sys.stderr)
        return EXIT_DOMAIN
    text = io.render(g, c, a.format)
    if a.out:
        Path(a.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="arborsplit", description="Split triangle-free plane graphs into two forests.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    d = sub.add_parser("decompose", help="colour a graph (class 1 = forest of max degree 3)")
    d.add_argument("--input", required=True)
    d.add_argument("--output", required=True)
    d.add_argument("--trace")
    d.add_argument("--no-defensive-checks", action="store_true")
    d.set_defaults(func=cmd_decompose)

    c = sub.add_parser("check", help="validate a colouring against a scene")
    c.add_argument("--scene", required=True)
    c.add_argument("--coloring", required=True)
    c.set_defaults(func=cmd_check)

    o = sub.add_parser("oracle", help="brute-force a scene")
    o.add_argument("--input", required=True)
    o.add_argument("--count", action="store_true")
    o.add_argument("--cap", type=int, default=None)
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="write a generated graph")
    g.add_argument("--family", choices=["grid", "cycle", "quad"], required=True)
    g.add_argument("--params", nargs="*", default=[], metavar="KEY=INT",
                   help="grid: rows cols; cycle: n; quad: steps seed")
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("render", help="emit DOT for a graph and optional colouring")
    r.add_argument("--input", required=True)
    r.add_argument("--coloring")
    r.add_argument("--format", default="dot", choices=["dot"])
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, SceneError, OracleCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
