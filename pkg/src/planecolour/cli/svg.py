"""Deterministic SVG 1.1 output for tilings and witness graphs."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from ..tiling import CANONICAL, SquareTilingSpec, colour_at
from ..geometry import Point
from ..witness import FiniteGeometricGraph

PALETTE = ("crimson", "darkorange", "gold", "forestgreen", "royalblue", "indigo", "orchid")


def _f(x: float) -> str:
    s = f"{x:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _open(width: float, height: float) -> list[str]:
    return ['<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_f(width)}" height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">']


def tiling_svg(spec: SquareTilingSpec = CANONICAL,
               window: tuple[float, float, float, float] | None = None,
               scale: float = 80.0) -> str:
    """Tiles meeting ``window = (xmin, xmax, ymin, ymax)``, labelled 1..colours."""
    s = spec.side
    x0, x1, y0, y1 = window if window is not None else (0.0, 7 * s, 0.0, 4 * s)
    if not (x1 > x0 and y1 > y0):
        raise ValueError("empty window")
    if scale <= 0:
        raise ValueError("scale must be positive")
    caption = 30.0
    w, h = (x1 - x0) * scale, (y1 - y0) * scale

    def sx(x):
        return (x - x0) * scale

    def sy(y):
        return (y1 - y) * scale

    out = _open(w, h + caption)
    out.append(f'<defs><clipPath id="win"><rect x="0" y="0" width="{_f(w)}" height="{_f(h)}"/>'
               '</clipPath></defs>')
    out.append('<g clip-path="url(#win)" stroke="black" stroke-width="1">')
    font = _f(min(0.4 * s * scale, 24.0))
    for row in range(math.floor(y0 / s), math.ceil(y1 / s)):
        off = spec.shift_sign * row * spec.row_shift
        for col in range(math.floor((x0 + off) / s), math.floor((x1 + off) / s) + 1):
            bx0, bx1, by0, by1 = spec.tile_box(row, col)
            c = colour_at(spec, Point((bx0 + bx1) / 2, (by0 + by1) / 2))
            out.append(f'<rect x="{_f(sx(bx0))}" y="{_f(sy(by1))}" width="{_f(s * scale)}" '
                       f'height="{_f(s * scale)}" fill="{PALETTE[c % len(PALETTE)]}"/>')
            out.append(f'<text x="{_f(sx((bx0 + bx1) / 2))}" y="{_f(sy((by0 + by1) / 2))}" '
                       f'font-size="{font}" text-anchor="middle" dominant-baseline="central" '
                       f'stroke="none" fill="white">{c + 1}</text>')
    out.append("</g>")
    side = "left" if spec.shift_sign > 0 else "right"
    note = (f"side {s:.6f}, each row shifted {spec.row_shift:.6f} "
            f"({spec.row_shift / s:g} tiles) to the {side}, {spec.colours} colours")
    out.append(f'<text x="4" y="{_f(h + caption / 2)}" font-size="12" '
               f'dominant-baseline="central">{escape(note)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def graph_svg(g: FiniteGeometricGraph, colouring: list[int] | None = None,
              scale: float = 200.0) -> str:
    """Geometric vertices and edges; pseudo-vertices are listed in the caption."""
    pts = [(i, p) for i, p in enumerate(g.points) if p is not None]
    if not pts:
        raise ValueError("graph has no positioned vertices")
    xs = [p.x for _, p in pts]
    ys = [p.y for _, p in pts]
    pad = 0.15
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    caption = 24.0
    w, h = (x1 - x0) * scale, (y1 - y0) * scale

    def sx(x):
        return (x - x0) * scale

    def sy(y):
        return (y1 - y) * scale

    out = _open(w, h + caption)
    out.append('<g stroke="black" stroke-width="1">')
    for a, b in g.geometric_edges():
        p, q = g.points[a], g.points[b]
        out.append(f'<line x1="{_f(sx(p.x))}" y1="{_f(sy(p.y))}" '
                   f'x2="{_f(sx(q.x))}" y2="{_f(sy(q.y))}"/>')
    out.append("</g>")
    out.append('<g stroke="black" stroke-width="1">')
    r = _f(max(2.0, min(6.0, 0.03 * scale)))
    for i, p in pts:
        fill = "white" if colouring is None else PALETTE[colouring[i] % len(PALETTE)]
        out.append(f'<circle cx="{_f(sx(p.x))}" cy="{_f(sy(p.y))}" r="{r}" fill="{fill}"/>')
    out.append("</g>")
    pseudo = [i for i, p in enumerate(g.points) if p is None]
    note = f"{g.n} vertices, {len(g.edges)} edges"
    if pseudo:
        note += "; pseudo-vertices " + ", ".join(
            f"{i}" + (f" (colour {g.precolour[i]})" if i in g.precolour else "") for i in pseudo)
    out.append(f'<text x="4" y="{_f(h + caption / 2)}" font-size="12" '
               f'dominant-baseline="central">{escape(note)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
