"""Plane tropical floors through stretched collinear points.

A floor of degree i is a plane tropical curve through projected points
Q_j = s**j * (eta, eta**2).  Its dual subdivision of the i-dilated
triangle contains the marked lattice path (lex order through the
triangle with some points omitted).  Omitting g points frees g
parameters; each is absorbed by a node germ (parallelogram, edge of
weight two, string, ...).

The catalog is generated: enumerate subdivisions compatible with the
path, keep the ones an LP can realize with a strictly positive margin,
and sort the freed parameters into germs.  Catalog tags are attached by
looking shapes up in a small table of known canonical forms.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, gcd
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

from .config import RealizeConfig
from .lattice import InvalidDegree, Point2, det2, sub, triangle_points


class NoSuchFloor(ValueError):
    pass


class GermKind(str, Enum):
    PARALLELOGRAM = "ParallelogramVertex"
    HORIZONTAL_W2 = "HorizontalWeight2End"
    DIAGONAL_W2 = "DiagonalWeight2End"
    VERTICAL_W2 = "VerticalWeight2End"
    LEFT_STRING = "LeftString"
    RIGHT_STRING = "RightString"
    UPWARD_STRING = "UpwardString"
    TWO_DIM_STRING = "TwoDimString"
    WEIGHT_THREE = "WeightThreeEnd"

    def __str__(self):
        return self.value


STRING_KINDS = {GermKind.LEFT_STRING, GermKind.RIGHT_STRING, GermKind.UPWARD_STRING,
                GermKind.TWO_DIM_STRING}


class Orientation(str, Enum):
    HORIZONTAL = "Horizontal"
    DIAGONAL = "Diagonal"

    def __str__(self):
        return self.value


# directions of lattice edges dual to horizontal / diagonal tropical edges
_DUAL_DIR = {Orientation.HORIZONTAL: (0, 1), Orientation.DIAGONAL: (1, -1)}


def _prim(v):
    g = gcd(abs(v[0]), abs(v[1])) or 1
    a, b = v[0] // g, v[1] // g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return (a, b)


def _edge(p, q):
    return tuple(sorted((tuple(p), tuple(q))))


def _length(p, q):
    return gcd(abs(p[0] - q[0]), abs(p[1] - q[1]))


# -- germs and floors ---------------------------------------------------------

@dataclass(frozen=True)
class NodeGerm:
    """One node germ of a floor.

    `cells` holds the dual cells carrying the germ (the parallelogram, or the
    triangle over an edge of weight two, or the corner triangle of a string).
    `edge` is the weight-two/three lattice edge, `corner` the string corner,
    `ends` the lattice edges dual to the string's movable ends.
    """
    kind: GermKind
    cells: tuple = ()
    edge: tuple | None = None
    corner: Point2 | None = None
    ends: tuple = ()
    weight: int = 1

    @property
    def is_string(self) -> bool:
        return self.kind in STRING_KINDS

    def to_json(self) -> dict:
        out = {"kind": str(self.kind), "weight": self.weight,
               "cells": [[list(v) for v in c] for c in self.cells]}
        if self.edge is not None:
            out["edge"] = [list(v) for v in self.edge]
        if self.corner is not None:
            out["corner"] = list(self.corner)
        if self.ends:
            out["ends"] = [[list(v) for v in e] for e in self.ends]
        return out


@dataclass(frozen=True)
class BoundedEdgeRecord:
    orientation: Orientation
    dual_edge: tuple
    floor_degree: int

    @property
    def k(self) -> int:
        """x-coordinate of the dual edge (meaningful for horizontal edges)."""
        return self.dual_edge[0][0]

    def to_json(self) -> dict:
        return {"orientation": str(self.orientation),
                "dual_edge": [list(v) for v in self.dual_edge],
                "floor_degree": self.floor_degree}


class VertexMode(str, Enum):
    NOT_ADJACENT_HORIZONTAL = "NotAdjacentHorizontal"
    NOT_ADJACENT_DIAGONAL = "NotAdjacentDiagonal"


@dataclass(frozen=True)
class SpecialVertex:
    cell: tuple
    floor_degree: int
    mode: VertexMode

    def to_json(self) -> dict:
        return {"cell": [list(v) for v in self.cell], "floor_degree": self.floor_degree,
                "mode": self.mode.value}


@dataclass(frozen=True)
class FloorCurve:
    degree: int
    omitted: tuple
    cells: tuple
    germs: tuple = ()
    tag: str | None = None

    @property
    def path(self) -> list[Point2]:
        return [p for p in triangle_points(self.degree) if p not in self.omitted]

    @property
    def marked_edges(self) -> list[tuple]:
        p = self.path
        return [(p[i], p[i + 1]) for i in range(len(p) - 1)]

    @property
    def n_points(self) -> int:
        return len(self.path) - 1

    @property
    def vertices(self) -> set:
        return {v for c in self.cells for v in c}

    def edges(self) -> dict:
        """Lattice edge -> number of cells containing it."""
        cnt: dict = {}
        for c in self.cells:
            for e in cell_edges(c):
                cnt[e] = cnt.get(e, 0) + 1
        return cnt

    def germ(self, kind: GermKind) -> NodeGerm | None:
        return next((g for g in self.germs if g.kind == kind), None)

    @property
    def strings(self) -> list[NodeGerm]:
        return [g for g in self.germs if g.is_string]

    def to_json(self) -> dict:
        return {"degree": self.degree, "tag": self.tag,
                "omitted": [list(p) for p in self.omitted],
                "path": [list(p) for p in self.path],
                "germs": [g.to_json() for g in self.germs],
                "cells": [[list(v) for v in c] for c in self.cells]}


# -- polygon helpers -----------------------------------------------------------

def _hull(pts):
    pts = sorted(set(pts))
    if len(pts) < 3:
        return pts

    def half(ps):
        h = []
        for p in ps:
            while len(h) >= 2 and det2(sub(h[-1], h[-2]), sub(p, h[-2])) <= 0:
                h.pop()
            h.append(p)
        return h
    return half(pts)[:-1] + half(pts[::-1])[:-1]


def area2(poly) -> int:
    """Twice the Euclidean area (= normalized area) of a convex polygon."""
    n = len(poly)
    return abs(sum(det2(poly[i], poly[(i + 1) % n]) for i in range(n)))


def _strict_inside(p, poly) -> bool:
    n = len(poly)
    cs = [det2(sub(poly[(i + 1) % n], poly[i]), sub(p, poly[i])) for i in range(n)]
    return all(c > 0 for c in cs) or all(c < 0 for c in cs)


def _on_segment(p, a, b) -> bool:
    return (det2(sub(b, a), sub(p, a)) == 0 and min(a, b) <= p <= max(a, b)
            and p != a and p != b)


def cell_edges(c) -> list[tuple]:
    return [_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


def _segment_meets_interior(seg, poly) -> bool:
    """Does the open segment meet the open polygon?  2D separating axes."""
    a, b = seg
    axes = []
    n = len(poly)
    for i in range(n):
        e = sub(poly[(i + 1) % n], poly[i])
        axes.append((-e[1], e[0]))
    d = sub(b, a)
    axes.append((-d[1], d[0]))
    for ax in axes:
        ps = [ax[0] * p[0] + ax[1] * p[1] for p in poly]
        ss = [ax[0] * p[0] + ax[1] * p[1] for p in seg]
        if max(ss) <= min(ps) or max(ps) <= min(ss):
            return False
    return True


@functools.cache
def candidate_cells(d: int) -> tuple:
    """Empty lattice triangles and parallelograms in the d-triangle.

    Lattice points may sit on triangle edges (weight > 1 edges), never in
    the interior; parallelograms carry no points besides their corners.
    """
    P = triangle_points(d)
    out = []
    for k in (3, 4):
        for vs in itertools.combinations(P, k):
            h = _hull(vs)
            if len(h) != k:
                continue
            if any(_strict_inside(p, h) for p in P):
                continue
            if k == 4:
                a, b, c, e = h
                if (a[0] + c[0], a[1] + c[1]) != (b[0] + e[0], b[1] + e[1]):
                    continue
                if any(p not in h and any(_on_segment(p, *s) for s in cell_edges(h)) for p in P):
                    continue
            out.append(tuple(h))
    return tuple(out)


_SAMPLE_OFFSETS = [(Fraction(23, 97), Fraction(31, 101)), (Fraction(71, 103), Fraction(67, 107)),
                   (Fraction(13, 109), Fraction(59, 113)), (Fraction(61, 127), Fraction(11, 131))]


@functools.cache
def _samples(d):
    return tuple((a + ox, b + oy) for a in range(d) for b in range(d)
                 for ox, oy in _SAMPLE_OFFSETS if a + ox + b + oy < d)


def _proper_pair(c, o) -> bool:
    """No vertex of one cell sits inside an edge of the other."""
    for v in c:
        if any(v not in e and _on_segment(v, *e) for e in cell_edges(o)):
            return False
    for v in o:
        if any(v not in e and _on_segment(v, *e) for e in cell_edges(c)):
            return False
    return True


@functools.cache
def _cell_tables(d: int):
    """Sample coverage of each candidate cell and pairwise properness."""
    cells = candidate_cells(d)
    S = _samples(d)
    cov = {c: frozenset(i for i, s in enumerate(S) if _strict_inside(s, c)) for c in cells}
    ok = {c: frozenset(o for o in cells if not (cov[c] & cov[o]) and _proper_pair(c, o))
          for c in cells}
    return cov, ok


def subdivisions(d: int, marked: Sequence[tuple] = ()) -> list[tuple]:
    """All polyhedral subdivisions of the d-triangle into candidate cells
    containing every marked edge as an edge.

    Backtracking over a fixed set of generic sample points: each sample is
    covered by exactly one open cell.
    """
    cov, ok = _cell_tables(d)
    cells = [c for c in candidate_cells(d)
             if not any(_segment_meets_interior(m, c) for m in marked)]
    n = len(_samples(d))
    marked = {_edge(*m) for m in marked}
    res = []

    def rec(chosen, covered, allowed):
        if len(covered) == n:
            es = {e for c in chosen for e in cell_edges(c)}
            if marked <= es:
                res.append(tuple(sorted(chosen)))
            return
        i = min(set(range(n)) - covered)
        for c in cells:
            if i in cov[c] and c in allowed:
                rec(chosen + [c], covered | cov[c], allowed & ok[c])
    rec([], frozenset(), frozenset(cells))
    return res


# -- realizability -----------------------------------------------------------------

def projected_points(n: int, cfg: RealizeConfig | None = None, start: int = 1) -> list:
    cfg = cfg or RealizeConfig()
    eta, s = Fraction(cfg.eta), Fraction(cfg.spacing)
    return [(s ** j * eta, s ** j * eta * eta) for j in range(start, start + n)]


def realizability_margin(path, cells, Q) -> float | None:
    """Largest slack t with which a tropical curve dual to `cells` passes
    through Q along `path` (LP over the coefficients).  None if infeasible.

    Coefficients c_w of vertices w; at Q_j the marked edge's endpoints tie
    for the maximum and every other monomial is at least t below; for every
    cell, points off the cell lie at least t below the cell's affine lift.
    """
    V = sorted({v for c in cells for v in c})
    idx = {v: i for i, v in enumerate(V)}
    n = len(V)
    A_eq, b_eq, A_ub, b_ub = [], [], [], []

    def row():
        return [0.0] * (n + 1)
    for (u, v), q in zip(zip(path, path[1:]), Q):
        r = row()
        r[idx[u]] += 1
        r[idx[v]] -= 1
        A_eq.append(r)
        b_eq.append(float((v[0] - u[0]) * q[0] + (v[1] - u[1]) * q[1]))
        for w in V:
            if w in (u, v):
                continue
            r = row()
            r[idx[w]] += 1
            r[idx[u]] -= 1
            r[n] = 1
            A_ub.append(r)
            b_ub.append(float((u[0] - w[0]) * q[0] + (u[1] - w[1]) * q[1]))
    for c in cells:
        v0, v1, v2 = c[0], c[1], c[2]
        if len(c) == 4:
            a, b, cc, e = c
            r = row()
            r[idx[a]] += 1
            r[idx[cc]] += 1
            r[idx[b]] -= 1
            r[idx[e]] -= 1
            A_eq.append(r)
            b_eq.append(0.0)
        D = det2(sub(v1, v0), sub(v2, v0))
        for w in V:
            if w in c:
                continue
            s_ = Fraction(det2(sub(w, v0), sub(v2, v0)), D)
            t_ = Fraction(det2(sub(v1, v0), sub(w, v0)), D)
            r = row()
            r[idx[w]] += 1
            r[idx[v0]] -= float(1 - s_ - t_)
            r[idx[v1]] -= float(s_)
            r[idx[v2]] -= float(t_)
            r[n] = 1
            A_ub.append(r)
            b_ub.append(0.0)
    r = row()
    r[0] = 1
    A_eq.append(r)
    b_eq.append(0.0)
    obj = np.zeros(n + 1)
    obj[n] = -1.0
    bounds = [(None, None)] * n + [(None, 1.0)]
    res = linprog(obj, A_ub=np.array(A_ub) if A_ub else None, b_ub=b_ub or None,
                  A_eq=np.array(A_eq), b_eq=b_eq, bounds=bounds, method="highs")
    if res.status != 0:
        return None
    return float(res.x[n])


# -- germ extraction -------------------------------------------------------------------

def corners(d: int) -> dict:
    return {(0, 0): GermKind.LEFT_STRING, (d, 0): GermKind.RIGHT_STRING,
            (0, d): GermKind.UPWARD_STRING}


def _side_of(p, d):
    """Boundary sides containing p: 'u' (u=0), 'v' (v=0), 'h' (u+v=d)."""
    s = set()
    if p[0] == 0:
        s.add("u")
    if p[1] == 0:
        s.add("v")
    if p[0] + p[1] == d:
        s.add("h")
    return s


def _corner_string(corner, d, cells) -> NodeGerm | None:
    """A corner can carry a string if it lies in exactly one cell, a triangle
    whose other two vertices lie on the two boundary sides through it."""
    cs = [c for c in cells if corner in c]
    if len(cs) != 1 or len(cs[0]) != 3:
        return None
    others = [v for v in cs[0] if v != corner]
    sides = _side_of(corner, d)
    if not all(_side_of(o, d) & sides for o in others):
        return None
    if len({frozenset(_side_of(o, d) & sides) for o in others}) != 2:
        return None
    ends = tuple(sorted(_edge(corner, o) for o in others))
    return NodeGerm(corners(d)[corner], cells=(cs[0],), corner=corner, ends=ends)


def _two_dim_string(corner, nb, d, cells) -> NodeGerm | None:
    side = _side_of(corner, d) & _side_of(nb, d)
    if not side:
        return None
    step = sub(nb, corner)
    if _length(corner, nb) != 1:
        return None
    nxt = (nb[0] + step[0], nb[1] + step[1])
    V = {v for c in cells for v in c}
    if corner not in V or nb not in V or nxt not in V:
        return None
    touching = tuple(sorted(c for c in cells if corner in c or nb in c))
    return NodeGerm(GermKind.TWO_DIM_STRING, cells=touching, corner=corner,
                    ends=(_edge(corner, nb), _edge(nb, nxt)), weight=2)


def _edge_germs(cells, nonvert) -> list[NodeGerm]:
    out = []
    for c in cells:
        for e in cell_edges(c):
            L = _length(*e)
            if L < 2:
                continue
            a, b = e
            inner = [(a[0] + t * (b[0] - a[0]) // L, a[1] + t * (b[1] - a[1]) // L)
                     for t in range(1, L)]
            if not all(p in nonvert for p in inner):
                continue
            if L == 3:
                out.append(NodeGerm(GermKind.WEIGHT_THREE, cells=(c,), edge=e, weight=2))
                continue
            dirn = _prim(sub(e[1], e[0]))
            kind = {(0, 1): GermKind.HORIZONTAL_W2, (1, 0): GermKind.VERTICAL_W2,
                    (1, -1): GermKind.DIAGONAL_W2}.get(dirn)
            if kind is None:
                raise NoSuchFloor(f"weight-two edge {e} in unexpected direction")
            out.append(NodeGerm(kind, cells=(c,), edge=e))
    return out


def germ_readings(d: int, omitted, cells) -> list[tuple]:
    """All ways to account for the freed parameters of a realizable shape.

    dof = #omitted - #parallelograms - #non-vertex lattice points has to be
    carried by strings: a corner string carries one, a corner plus its
    boundary neighbour moving together (two-dimensional string) carries two.
    """
    P = triangle_points(d)
    V = {v for c in cells for v in c}
    nonvert = [p for p in P if p not in V]
    if not set(nonvert) <= set(omitted):
        return []
    pars = [c for c in cells if len(c) == 4]
    fixed = [NodeGerm(GermKind.PARALLELOGRAM, cells=(c,)) for c in pars]
    fixed += _edge_germs(cells, nonvert)
    dof = len(omitted) - len(pars) - len(nonvert)
    if dof < 0:
        return []
    options = []
    om = [p for p in omitted if p in V]
    for p in om:
        if p in corners(d):
            g = _corner_string(p, d, cells)
            if g is not None:
                options.append(g)
            for q in om:
                if q != p:
                    g2 = _two_dim_string(p, q, d, cells)
                    if g2 is not None:
                        options.append(g2)
    readings = []
    for r in range(0, len(options) + 1):
        for combo in itertools.combinations(options, r):
            if sum(g.weight for g in combo) != dof:
                continue
            used = [g.corner for g in combo]
            if len(set(used)) != len(used):
                continue
            readings.append(tuple(fixed) + combo)
    return readings


def _smooth_cells(d):
    return set(smooth_floor(d).cells) if d > 0 else set()


@functools.cache
def generate_floors(d: int, g: int, eta=Fraction(1, 64), spacing: int = 8) -> tuple:
    """Every realizable floor of degree d with g omitted path points, untagged.

    Two-dimensional strings admit a family of subdivisions; the one sharing
    the most cells with the smooth floor is kept.
    """
    if d < 1:
        raise InvalidDegree(d)
    P = triangle_points(d)
    cfg = RealizeConfig(eta=eta, spacing=spacing)
    Q = projected_points(len(P) - 1 - g, cfg)
    smooth = _smooth_cells(d) if g else set()
    out = []
    for om in itertools.combinations(P, g):
        path = [p for p in P if p not in om]
        marked = list(zip(path, path[1:]))
        two_dim: list = []
        for cells in subdivisions(d, marked):
            readings = germ_readings(d, om, cells)
            if not readings:
                continue
            t = realizability_margin(path, cells, Q)
            if t is None or t <= 1e-9:
                continue
            for germs in readings:
                f = FloorCurve(d, tuple(om), tuple(cells), tuple(germs))
                if any(x.kind == GermKind.TWO_DIM_STRING for x in germs):
                    two_dim.append(f)
                else:
                    out.append(f)
        if two_dim:
            by_corner: dict = {}
            for f in two_dim:
                key = tuple(sorted((x.kind.value, x.corner) for x in f.germs))
                by_corner.setdefault(key, []).append(f)
            for fs in by_corner.values():
                out.append(max(fs, key=lambda f: (len(smooth & set(f.cells)),
                                                  [tuple(c) for c in f.cells])))
    out.sort(key=floor_key)
    return tuple(out)


def floor_key(f: FloorCurve):
    return (f.degree, f.omitted, tuple(sorted(f.cells)),
            tuple(sorted((x.kind.value, x.corner or (), x.edge or ()) for x in f.germs)))


@functools.cache
def smooth_floor(degree: int) -> FloorCurve:
    """The unique floor through binom(degree+2,2)-1 stretched points."""
    if degree < 1:
        raise InvalidDegree(degree)
    P = triangle_points(degree)
    Q = projected_points(len(P) - 1)
    path = P
    found = []
    for cells in subdivisions(degree, list(zip(path, path[1:]))):
        t = realizability_margin(path, cells, Q)
        if t is not None and t > 1e-9:
            found.append(cells)
    assert len(found) == 1, found
    tag = {1: "line", 2: "conic", 3: "cubic"}[degree]
    return FloorCurve(degree, (), found[0], (), tag=f"smooth_{tag}")


# -- catalog tags -----------------------------------------------------------------------

def _shape_key(f: FloorCurve):
    special = tuple(sorted(tuple(sorted(c)) for c in f.cells if len(c) == 4 or area2(c) > 1))
    kinds = tuple(sorted(g.kind.value for g in f.germs))
    return (f.degree, tuple(sorted(f.omitted)), special, kinds)


def _K(d, om, special, *kinds):
    return (d, tuple(sorted(om)), tuple(sorted(tuple(sorted(c)) for c in special)),
            tuple(sorted(k.value for k in kinds)))


G = GermKind
_PAR_A = ((0, 1), (0, 2), (1, 1), (1, 0))
_PAR_B = ((0, 1), (1, 0), (2, 0), (1, 1))
_SQUARE = ((0, 0), (1, 0), (1, 1), (0, 1))

# canonical forms of the catalog floors: (degree, omitted, non-unimodular
# cells, germ kinds) -> tag.  Tags ending in a letter are shapes that never
# carry separated nodes.
CATALOG_TAGS = {
    # cubics with one germ (top floor: right string or diagonal weight two)
    _K(3, [(3, 0)], [], G.RIGHT_STRING): "31_1",
    _K(3, [(1, 2)], [((0, 3), (1, 1), (2, 1))], G.DIAGONAL_W2): "31_2",
    _K(3, [(2, 1)], [((1, 2), (2, 0), (3, 0))], G.DIAGONAL_W2): "31_3",
    # conics with one germ
    _K(2, [(0, 2)], [_PAR_A], G.PARALLELOGRAM): "21_1",
    _K(2, [(1, 0)], [_PAR_A], G.PARALLELOGRAM): "21_2",
    _K(2, [(1, 0)], [_SQUARE], G.PARALLELOGRAM): "21_3",
    _K(2, [(0, 1)], [((0, 0), (1, 0), (0, 2))], G.HORIZONTAL_W2): "21_4",
    _K(2, [(1, 1)], [((0, 2), (1, 0), (2, 0))], G.DIAGONAL_W2): "21_5",
    _K(2, [(0, 0)], [], G.LEFT_STRING): "21_7",
    # line
    _K(1, [(0, 0)], [], G.LEFT_STRING): "11_1",
    # conics with two germs that can carry separated nodes
    _K(2, [(0, 0), (0, 1)], [((0, 0), (1, 0), (0, 2))], G.LEFT_STRING, G.HORIZONTAL_W2): "22_1",
    _K(2, [(0, 0), (0, 1)], [], G.TWO_DIM_STRING): "22_1b",
    _K(2, [(0, 0), (0, 2)], [_PAR_A], G.LEFT_STRING, G.PARALLELOGRAM): "22_2",
    _K(2, [(0, 0), (1, 0)], [_PAR_A], G.LEFT_STRING, G.PARALLELOGRAM): "22_4",
    _K(2, [(0, 0), (1, 0)], [_PAR_B], G.LEFT_STRING, G.PARALLELOGRAM): "22_5",
    _K(2, [(0, 0), (1, 1)], [((0, 2), (1, 0), (2, 0))], G.LEFT_STRING, G.DIAGONAL_W2): "22_6",
    _K(2, [(0, 1), (1, 1)], [((0, 0), (1, 0), (0, 2)), ((0, 2), (1, 0), (2, 0))],
       G.HORIZONTAL_W2, G.DIAGONAL_W2): "22_9",
    # conics with two germs eliminated by the floor rules
    _K(2, [(0, 0), (1, 0)], [((0, 0), (2, 0), (0, 1))], G.LEFT_STRING, G.VERTICAL_W2): "22_a",
    _K(2, [(0, 1), (1, 0)], [((0, 0), (1, 1), (0, 2)), ((0, 0), (2, 0), (1, 1))],
       G.HORIZONTAL_W2, G.VERTICAL_W2): "22_b",
    _K(2, [(0, 2), (1, 0)], [((0, 0), (2, 0), (1, 1))], G.UPWARD_STRING, G.VERTICAL_W2): "22_c",
    _K(2, [(1, 0), (1, 1)], [((0, 0), (2, 0), (0, 1)), ((0, 1), (2, 0), (0, 2))],
       G.VERTICAL_W2, G.DIAGONAL_W2): "22_d",
    _K(2, [(0, 1), (0, 2)], [((0, 0), (1, 1), (0, 2))], G.UPWARD_STRING, G.HORIZONTAL_W2): "22_e",
    _K(2, [(0, 2), (1, 1)], [((0, 1), (2, 0), (0, 2))], G.UPWARD_STRING, G.DIAGONAL_W2): "22_f",
    _K(2, [(0, 0), (1, 0)], [], G.TWO_DIM_STRING): "22_a'",
    _K(2, [(0, 2), (1, 0)], [_SQUARE], G.UPWARD_STRING, G.PARALLELOGRAM): "22_c'",
    _K(2, [(0, 1), (0, 2)], [], G.TWO_DIM_STRING): "22_e'",
    _K(2, [(0, 1), (0, 2)], [_SQUARE], G.UPWARD_STRING, G.PARALLELOGRAM): "22_e''",
    _K(2, [(0, 2), (1, 1)], [], G.TWO_DIM_STRING): "22_f'",
    _K(2, [(0, 2), (1, 1)], [_PAR_B], G.UPWARD_STRING, G.PARALLELOGRAM): "22_f''",
    # cubics with two germs
    _K(3, [(1, 2), (3, 0)], [((0, 3), (1, 1), (2, 1))], G.RIGHT_STRING, G.DIAGONAL_W2): "33_1",
    _K(3, [(2, 1), (3, 0)], [((1, 2), (2, 0), (3, 0))], G.RIGHT_STRING, G.DIAGONAL_W2): "33_4",
    _K(3, [(2, 1), (3, 0)], [], G.TWO_DIM_STRING): "33_2",
    _K(3, [(1, 2), (2, 1)], [((0, 3), (2, 0), (3, 0))], G.WEIGHT_THREE): "33_3",
}

# floors outside the catalog that enumeration still has to see so that the
# elimination rules can dispose of them (right strings in conics, and the
# left-plus-upward string conic)
def _has_right_corner(f):
    return any(g.corner == (f.degree, 0) for g in f.germs)


EXTRA_KINDS = {
    (2, 1): _has_right_corner,
    (2, 2): lambda f: (_has_right_corner(f)
                       or {g.kind for g in f.germs} == {G.LEFT_STRING, G.UPWARD_STRING}),
}


def _tag(f: FloorCurve) -> FloorCurve:
    t = CATALOG_TAGS.get(_shape_key(f))
    return FloorCurve(f.degree, f.omitted, f.cells, f.germs, tag=t)


def _extra_tag(f: FloorCurve) -> str:
    kinds = "+".join(sorted(g.kind.value for g in f.germs))
    om = "".join(f"{u}{v}" for u, v in f.omitted)
    return f"x{f.degree}{len(f.omitted)}_{om}_{kinds}"


@functools.cache
def germ_floors(degree: int, germ_count: int) -> tuple:
    """Catalog floors of the given degree with germ_count node germs,
    in canonical tag order (including shapes later eliminated)."""
    if degree not in (1, 2, 3) or germ_count not in (1, 2):
        raise NoSuchFloor(f"no catalog for degree {degree} with {germ_count} germs")
    if (degree, germ_count) == (1, 2):
        raise NoSuchFloor("a line carries at most one node germ")
    tagged = [_tag(f) for f in generate_floors(degree, germ_count)]
    out = [f for f in tagged if f.tag is not None]
    return tuple(sorted(out, key=lambda f: _tag_order(f.tag)))


@functools.cache
def extra_floors(degree: int, germ_count: int) -> tuple:
    """Generated floors outside the catalog that candidates must still cover."""
    pick = EXTRA_KINDS.get((degree, germ_count))
    if pick is None:
        return ()
    out = []
    seen: dict = {}
    for f in generate_floors(degree, germ_count):
        if CATALOG_TAGS.get(_shape_key(f)) is None and pick(f):
            t = _extra_tag(f)
            seen[t] = seen.get(t, 0) + 1
            if seen[t] > 1:
                t = f"{t}~{seen[t]}"
            out.append(FloorCurve(f.degree, f.omitted, f.cells, f.germs, tag=t))
    return tuple(out)


def _tag_order(tag: str):
    order = list(CATALOG_TAGS.values())
    return order.index(tag)


def floor_by_tag(tag: str) -> FloorCurve:
    if tag.startswith("smooth_"):
        return smooth_floor({"line": 1, "conic": 2, "cubic": 3}[tag[7:]])
    for (d, g) in ((3, 1), (2, 1), (1, 1), (2, 2), (3, 2)):
        for f in germ_floors(d, g) + extra_floors(d, g):
            if f.tag == tag:
                return f
    raise NoSuchFloor(tag)


# -- features -------------------------------------------------------------------------------

def bounded_edges(floor: FloorCurve) -> list[BoundedEdgeRecord]:
    """Horizontal and diagonal bounded edges with their dual lattice edges."""
    out = []
    for e, n in sorted(floor.edges().items()):
        if n != 2:
            continue
        dirn = _prim(sub(e[1], e[0]))
        for o, dd in _DUAL_DIR.items():
            if dirn == dd and _length(*e) == 1:
                out.append(BoundedEdgeRecord(o, e, floor.degree))
    out.sort(key=lambda r: (r.orientation.value, r.dual_edge))
    return out


def horizontal_edges(floor):
    return [r for r in bounded_edges(floor) if r.orientation == Orientation.HORIZONTAL]


def diagonal_edges(floor):
    return [r for r in bounded_edges(floor) if r.orientation == Orientation.DIAGONAL]


def special_vertices(floor: FloorCurve, mode: VertexMode | str) -> list[SpecialVertex]:
    """Vertices of the curve with no adjacent edge of the given orientation
    (bounded or not), i.e. dual cells without a lattice edge of the dual
    direction."""
    mode = VertexMode(mode)
    if floor.degree == 1:
        return []
    dd = _DUAL_DIR[Orientation.HORIZONTAL if mode == VertexMode.NOT_ADJACENT_HORIZONTAL
                   else Orientation.DIAGONAL]
    out = []
    for c in floor.cells:
        if all(_prim(sub(e[1], e[0])) != dd for e in cell_edges(c)):
            out.append(SpecialVertex(tuple(sorted(c)), floor.degree, mode))
    return sorted(out, key=lambda s: s.cell)


def floor_point_count(degree: int, germs: int) -> int:
    return comb(degree + 2, 2) - 1 - germs
