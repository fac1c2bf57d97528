"""SVG drawings of floor subdivisions."""
from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from pathlib import Path

from .floors import FloorCurve, cell_edges, GermKind
from .lattice import triangle_points

UNIT = 48
MARGIN = 24


def _xy(p, d):
    # lattice point (u, v) -> svg coordinates, v pointing up
    return MARGIN + p[0] * UNIT, MARGIN + (d - p[1]) * UNIT


def _length(e):
    (a, b), (c, d) = e
    return math.gcd(abs(c - a), abs(d - b))


def render_floor(floor: FloorCurve) -> str:
    d = floor.degree
    size = 2 * MARGIN + d * UNIT
    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg", width=str(size),
                     height=str(size), viewBox=f"0 0 {size} {size}")
    ET.SubElement(svg, "title").text = floor.tag or f"degree {d} floor"
    germ_cells = {c for g in floor.germs for c in g.cells if g.kind != GermKind.UPWARD_STRING}
    for c in floor.cells:
        pts = " ".join(f"{x},{y}" for x, y in (_xy(p, d) for p in _ordered(c)))
        ET.SubElement(svg, "polygon", points=pts,
                      fill="#f3d9a4" if c in germ_cells else "#ffffff",
                      stroke="none", **{"class": "cell"})
    edges = sorted({e for c in floor.cells for e in cell_edges(c)})
    for e in edges:
        (x1, y1), (x2, y2) = _xy(e[0], d), _xy(e[1], d)
        w = _length(e)
        ET.SubElement(svg, "line", x1=str(x1), y1=str(y1), x2=str(x2), y2=str(y2),
                      stroke="#222222", **{"stroke-width": str(1.2 * w),
                                           "class": f"edge weight-{w}"})
    path = " ".join(f"{x},{y}" for x, y in (_xy(p, d) for p in floor.path))
    ET.SubElement(svg, "polyline", points=path, fill="none", stroke="#c0392b",
                  **{"stroke-width": "3", "stroke-opacity": "0.7", "class": "path"})
    omitted = set(floor.omitted)
    for p in triangle_points(d):
        x, y = _xy(p, d)
        ET.SubElement(svg, "circle", cx=str(x), cy=str(y), r="4",
                      fill="#ffffff" if p in omitted else "#222222", stroke="#222222",
                      **{"class": "omitted" if p in omitted else "lattice"})
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"


def _ordered(cell):
    cx = sum(p[0] for p in cell) / len(cell)
    cy = sum(p[1] for p in cell) / len(cell)
    return sorted(cell, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def render_plan(plan, out) -> list[Path]:
    """One SVG per floor. `out` is a directory, or a file name used as stem."""
    out = Path(out)
    if out.suffix == ".svg":
        base, stem = out.parent, out.stem
    else:
        base, stem = out, plan.plan_id
    base.mkdir(parents=True, exist_ok=True)
    written = []
    for curve in plan.curves:
        p = base / f"{stem}-C{curve.degree}.svg"
        p.write_text(render_floor(curve))
        written.append(p)
    return written
