"""Plain-text graph files.

::

    # comment
    v <id> <x> <y>      geometric vertex (17 significant digits)
    v <id> - -          pseudo-vertex with no position
    e <id1> <id2>       edge
    p <id> <colour>     precoloured vertex

Vertex ids are arbitrary tokens; emitted files use the vertex index.
"""

from __future__ import annotations

from typing import Iterable

from ..geometry import Point
from ..lattice import LatticeCoord, LatticeCycle
from ..witness import FiniteGeometricGraph


class GraphFormatError(ValueError):
    pass


def _num(x: float) -> str:
    return "%.17g" % x


def emit(g: FiniteGeometricGraph, header: str | None = None) -> str:
    lines = []
    if header:
        lines += [f"# {h}" for h in header.splitlines()]
    for i, p in enumerate(g.points):
        lines.append(f"v {i} - -" if p is None else f"v {i} {_num(p.x)} {_num(p.y)}")
    lines += [f"e {a} {b}" for a, b in g.sorted_edges()]
    lines += [f"p {v} {c}" for v, c in sorted(g.precolour.items())]
    return "\n".join(lines) + "\n"


def parse(text: str) -> tuple[FiniteGeometricGraph, list[str]]:
    """Graph plus the original vertex ids in index order."""
    ids: dict[str, int] = {}
    points: list[Point | None] = []
    edges: list[tuple[int, int]] = []
    pre: dict[int, int] = {}

    def lookup(tok: str, lineno: int) -> int:
        if tok not in ids:
            raise GraphFormatError(f"line {lineno}: undeclared vertex id {tok!r}")
        return ids[tok]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag, args = parts[0], parts[1:]
        if len(args) != {"v": 3, "e": 2, "p": 2}.get(tag, -1):
            raise GraphFormatError(f"line {lineno}: cannot parse {raw.strip()!r}")
        if tag == "v":
            vid, xs, ys = args
            if vid in ids:
                raise GraphFormatError(f"line {lineno}: duplicate vertex id {vid!r}")
            if (xs == "-") != (ys == "-"):
                raise GraphFormatError(f"line {lineno}: pseudo-vertex needs '- -'")
            try:
                pt = None if xs == "-" else Point(float(xs), float(ys))
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: bad coordinate ({exc})") from None
            ids[vid] = len(points)
            points.append(pt)
        elif tag == "e":
            a, b = lookup(args[0], lineno), lookup(args[1], lineno)
            if a == b:
                raise GraphFormatError(f"line {lineno}: self-loop at {args[0]!r}")
            edges.append((a, b))
        else:
            v = lookup(args[0], lineno)
            try:
                c = int(args[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: colour must be an integer") from None
            if c < 0:
                raise GraphFormatError(f"line {lineno}: colour must be nonnegative")
            pre[v] = c
    return FiniteGeometricGraph(points, frozenset(edges), pre), list(ids)


def emit_coords(coords: Iterable[tuple[int, int]]) -> str:
    return "".join(f"{i} {j}\n" for i, j in coords)


def parse_coords(text: str) -> list[LatticeCoord]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'i j'")
        try:
            out.append(LatticeCoord(int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: lattice coordinates must be integers") from None
    return out


def emit_cycle(cycle: LatticeCycle) -> str:
    return emit_coords(cycle.vertices)


def parse_cycle(text: str) -> LatticeCycle:
    return LatticeCycle(parse_coords(text))
