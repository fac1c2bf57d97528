"""Exact lattice geometry for floor-decomposed cubic surfaces.

Points are plain tuples of ints. Cells are convex hulls of lattice points,
stored by their vertex sets. Everything here is exact integer/rational
arithmetic; nothing touches floats.
"""
from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Sequence

Point2 = tuple[int, int]
Point3 = tuple[int, int, int]


class LatticeError(ValueError):
    pass


class InvalidDegree(LatticeError):
    pass


class InvalidSlice(LatticeError):
    pass


class MalformedComplex(LatticeError):
    pass


def triangle_points(d: int) -> list[Point2]:
    """Lattice points of the d-dilated standard triangle, in lex order."""
    if not isinstance(d, int) or d < 1:
        raise InvalidDegree(f"degree must be a positive integer, got {d!r}")
    pts = [(a, b) for a in range(d + 1) for b in range(d + 1 - a)]
    assert len(pts) == comb(d + 2, 2)
    return pts


def simplex_points(d: int) -> list[Point3]:
    if d < 1:
        raise InvalidDegree(d)
    return [(x, y, z) for x in range(d + 1) for y in range(d + 1 - x)
            for z in range(d + 1 - x - y)]


# -- small vector helpers ---------------------------------------------------

def sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def add(p, q):
    return tuple(a + b for a, b in zip(p, q))


def dot(p, q):
    return sum(a * b for a, b in zip(p, q))


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def det3(u, v, w):
    return dot(u, cross(v, w))


def affine_rank(points: Iterable[Sequence[int]]) -> int:
    """Dimension of the affine hull (-1 for the empty set)."""
    pts = list(dict.fromkeys(tuple(p) for p in points))
    if not pts:
        return -1
    rows = [[Fraction(c) for c in sub(p, pts[0])] for p in pts[1:]]
    rank = 0
    ncol = len(pts[0])
    for col in range(ncol):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def lattice_length(p, q) -> int:
    """Lattice length of the segment pq (number of primitive steps)."""
    g = 0
    for c in sub(q, p):
        g = gcd(g, abs(c))
    return g


def primitive(v):
    g = 0
    for c in v:
        g = gcd(g, abs(c))
    return tuple(c // g for c in v) if g else tuple(v)


# -- convex hull pieces (brute force; cells here have at most ~10 vertices) --

def facets3(points: Sequence[Point3]) -> list[tuple[tuple[int, int, int], int, frozenset]]:
    """Facets of a full-dimensional 3D point set as (normal, offset, vertex set).

    The normal points outward: dot(n, p) <= offset for all points.
    """
    pts = list(dict.fromkeys(points))
    out = {}
    for a, b, c in itertools.combinations(pts, 3):
        n = cross(sub(b, a), sub(c, a))
        if n == (0, 0, 0):
            continue
        n = primitive(n)
        off = dot(n, a)
        vals = [dot(n, p) - off for p in pts]
        if all(v <= 0 for v in vals):
            pass
        elif all(v >= 0 for v in vals):
            n = tuple(-x for x in n)
            off = -off
        else:
            continue
        on = frozenset(p for p in pts if dot(n, p) == off)
        out[on] = (n, off, on)
    return list(out.values())


def _order_polygon(verts: Sequence[Point3], normal) -> list[Point3]:
    """Sort coplanar convex-position vertices cyclically around the normal."""
    verts = list(verts)
    if len(verts) <= 3:
        return verts
    n = len(verts)
    c = tuple(Fraction(sum(v[i] for v in verts), n) for i in range(3))
    ref = sub(verts[0], c)

    def half(w):
        s = dot(normal, cross(ref, w))
        return 0 if s > 0 or (s == 0 and dot(ref, w) > 0) else 1

    def cmp(p, q):
        wp, wq = sub(p, c), sub(q, c)
        hp, hq = half(wp), half(wq)
        if hp != hq:
            return hp - hq
        s = dot(normal, cross(wp, wq))
        return -1 if s > 0 else (1 if s < 0 else 0)

    return sorted(verts, key=functools.cmp_to_key(cmp))


def _in_segment(p, a, b) -> bool:
    if affine_rank([p, a, b]) > 1:
        return False
    return dot(sub(p, a), sub(b, a)) >= 0 and dot(sub(p, b), sub(a, b)) >= 0


def _in_triangle(p, a, b, c, normal) -> bool:
    s1 = dot(normal, cross(sub(b, a), sub(p, a)))
    s2 = dot(normal, cross(sub(c, b), sub(p, b)))
    s3 = dot(normal, cross(sub(a, c), sub(p, c)))
    return (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0)


def polygon_vertices3(points: Sequence[Point3], normal) -> list[Point3]:
    """Extreme points of a coplanar 3D point set."""
    pts = list(dict.fromkeys(points))
    keep = []
    for p in pts:
        others = [q for q in pts if q != p]
        inner = any(_in_segment(p, a, b) for a, b in itertools.combinations(others, 2))
        if not inner:
            inner = any(affine_rank([a, b, c]) == 2 and _in_triangle(p, a, b, c, normal)
                        for a, b, c in itertools.combinations(others, 3))
        if not inner:
            keep.append(p)
    return keep


def normalized_volume(points: Sequence[Point3]) -> int:
    """Normalized volume (unimodular simplex = 1) of conv(points) in its own dimension.

    Only full-dimensional 3D sets, planar sets and segments are supported.
    """
    pts = list(dict.fromkeys(tuple(p) for p in points))
    r = affine_rank(pts)
    if r <= 0:
        return 0
    if r == 1:
        return max(lattice_length(p, q) for p, q in itertools.combinations(pts, 2))
    if r == 2:
        n = None
        for a, b, c in itertools.combinations(pts, 3):
            n = cross(sub(b, a), sub(c, a))
            if n != (0, 0, 0):
                break
        poly = _order_polygon(polygon_vertices3(pts, n), n)
        tot = 0
        for i in range(1, len(poly) - 1):
            w = cross(sub(poly[i], poly[0]), sub(poly[i + 1], poly[0]))
            g = 0
            for x in w:
                g = gcd(g, abs(x))
            tot += g
        return tot
    apex = pts[0]
    tot = 0
    for n, off, on in facets3(pts):
        if dot(n, apex) == off:
            continue
        poly = _order_polygon(polygon_vertices3(sorted(on), n), n)
        for i in range(1, len(poly) - 1):
            tot += abs(det3(sub(poly[0], apex), sub(poly[i], apex), sub(poly[i + 1], apex)))
    return tot


def hull_contains(points: Sequence[Point3], q, strict: bool = False) -> bool:
    """Membership test for conv(points), full-dimensional 3D sets only."""
    for n, off, _ in facets3(points):
        v = dot(n, q)
        if v > off or (strict and v == off):
            return False
    return True


def lattice_points_in(points: Sequence[Point3]) -> list[Point3]:
    lo = [min(p[i] for p in points) for i in range(3)]
    hi = [max(p[i] for p in points) for i in range(3)]
    fs = facets3(points)
    out = []
    for q in itertools.product(*(range(lo[i], hi[i] + 1) for i in range(3))):
        if all(dot(n, q) <= off for n, off, _ in fs):
            out.append(q)
    return out


# -- cells and complexes ------------------------------------------------------

@dataclass(frozen=True, order=True)
class Cell:
    vertices: tuple

    def __init__(self, vertices):
        vs = tuple(sorted(dict.fromkeys(tuple(int(c) for c in v) for v in vertices)))
        if not vs:
            raise MalformedComplex("empty cell")
        object.__setattr__(self, "vertices", vs)

    @property
    def dim(self) -> int:
        return affine_rank(self.vertices)

    @property
    def volume(self) -> int:
        return normalized_volume(self.vertices)

    def is_simplex(self) -> bool:
        return self.dim == len(self.vertices) - 1

    def translate(self, t) -> "Cell":
        return Cell(add(v, t) for v in self.vertices)

    def map(self, f) -> "Cell":
        return Cell(f(v) for v in self.vertices)

    def edges(self) -> list[tuple]:
        """1-faces of a 3D cell (vertex pairs)."""
        return list(_cell_edges(self.vertices))

    def faces(self) -> set[frozenset]:
        """All nonempty faces as vertex sets, by closing the facets under intersection."""
        V = frozenset(self.vertices)
        if self.dim < 3:
            return {V} | {frozenset([v]) for v in V}
        fac = [on for _, _, on in facets3(self.vertices)]
        faces = {V}
        for k in range(1, len(fac) + 1):
            for combo in itertools.combinations(fac, k):
                s = frozenset.intersection(*combo)
                if s:
                    faces.add(s)
        return faces


@functools.lru_cache(maxsize=None)
def _cell_edges(vertices: tuple) -> tuple:
    dim = affine_rank(vertices)
    if dim < 3:
        return ((vertices[0], vertices[-1]),) if dim == 1 else ()
    out = set()
    for n, off, on in facets3(vertices):
        poly = _order_polygon(polygon_vertices3(sorted(on), n), n)
        for i in range(len(poly)):
            out.add(tuple(sorted((poly[i], poly[(i + 1) % len(poly)]))))
    return tuple(sorted(out))


@functools.lru_cache(maxsize=None)
def _facet_normals(vertices: tuple) -> tuple:
    return tuple(n for n, _, _ in facets3(vertices))


class CircuitClass(str):
    """Circuit class label; Unseparated carries a variant tag after a colon."""

    PENTATOPE = "PentatopeA"
    BIPYRAMID = "BipyramidD"
    WEIGHT_TWO = "WeightTwoE"
    UNSEPARATED = "Unseparated"
    NONE = "None"

    @property
    def kind(self) -> str:
        return self.split(":", 1)[0]

    @property
    def tag(self):
        parts = self.split(":", 1)
        return parts[1] if len(parts) > 1 else None

    @classmethod
    def unseparated(cls, tag: str) -> "CircuitClass":
        return cls(f"{cls.UNSEPARATED}:{tag}")


@dataclass(frozen=True)
class PolytopeComplex:
    cells: tuple
    tag: str | None = None
    label: str = ""
    validated: bool = field(default=True, compare=False)

    def __init__(self, cells, tag=None, label="", validate=True):
        cs = tuple(sorted(set(c if isinstance(c, Cell) else Cell(c) for c in cells)))
        object.__setattr__(self, "cells", cs)
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "validated", validate)
        if validate:
            check_complex(cs)

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for c in self.cells for v in c.vertices)

    def translate(self, t) -> "PolytopeComplex":
        return PolytopeComplex([c.translate(t) for c in self.cells], self.tag, self.label)

    def map(self, f) -> "PolytopeComplex":
        return PolytopeComplex([c.map(f) for c in self.cells], self.tag, self.label)

    def to_json(self) -> dict:
        return {"cells": [[list(v) for v in c.vertices] for c in self.cells],
                "class": classify_circuit(self)}

    @classmethod
    def from_json(cls, obj) -> "PolytopeComplex":
        klass = CircuitClass(obj.get("class", "None"))
        return cls([Cell(tuple(v) for v in c) for c in obj["cells"]], tag=klass.tag)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _interiors_meet(a: Cell, b: Cell) -> bool:
    """True iff two full-dimensional 3D cells have intersecting interiors.

    Separating-axis test: candidate axes are facet normals of both cells and
    cross products of edge directions.
    """
    # boxes that at most touch cannot hold a common interior point
    for i in range(3):
        if (max(v[i] for v in a.vertices) <= min(v[i] for v in b.vertices)
                or max(v[i] for v in b.vertices) <= min(v[i] for v in a.vertices)):
            return False
    if a.dim < 3 or b.dim < 3:
        return False
    axes = list(_facet_normals(a.vertices)) + list(_facet_normals(b.vertices))
    for e in a.edges():
        for f in b.edges():
            w = cross(sub(e[1], e[0]), sub(f[1], f[0]))
            if w != (0, 0, 0):
                axes.append(w)
    for n in axes:
        pa = [dot(n, v) for v in a.vertices]
        pb = [dot(n, v) for v in b.vertices]
        if max(pa) <= min(pb) or max(pb) <= min(pa):
            return False
    return True


def check_complex(cells: Sequence[Cell]) -> None:
    """Raise MalformedComplex unless cells pairwise meet in common faces."""
    for a, b in itertools.combinations(cells, 2):
        if _interiors_meet(a, b):
            raise MalformedComplex(f"cells {a.vertices} and {b.vertices} overlap")
        shared = frozenset(a.vertices) & frozenset(b.vertices)
        if not shared:
            continue
        if a.dim == 3 and shared not in a.faces():
            raise MalformedComplex(f"shared vertices {sorted(shared)} not a face of {a.vertices}")
        if b.dim == 3 and shared not in b.faces():
            raise MalformedComplex(f"shared vertices {sorted(shared)} not a face of {b.vertices}")


# -- circuit classification ---------------------------------------------------

def _is_parallelogram(q) -> bool:
    if len(q) != 4 or affine_rank(q) != 2:
        return False
    a, b, c, d = q
    return (add(a, b) == add(c, d) or add(a, c) == add(b, d) or add(a, d) == add(b, c))


def _is_pentatope(cell: Cell) -> bool:
    vs = cell.vertices
    if len(vs) != 5 or cell.dim != 3:
        return False
    # a circuit on all five points: no four of them coplanar
    if any(affine_rank(s) < 3 for s in itertools.combinations(vs, 4)):
        return False
    # empty lattice polytope; the normalized volume is not pinned (3 is the
    # smallest value five lattice points in general position can reach)
    return set(lattice_points_in(vs)) == set(vs)


def _is_bipyramid(cells: Sequence[Cell]) -> bool:
    if len(cells) != 2:
        return False
    a, b = cells
    if len(a.vertices) != 5 or len(b.vertices) != 5 or a.dim != 3 or b.dim != 3:
        return False
    base = frozenset(a.vertices) & frozenset(b.vertices)
    if len(base) != 4 or not _is_parallelogram(sorted(base)):
        return False
    ap = (set(a.vertices) - base).pop()
    bp = (set(b.vertices) - base).pop()
    p0, p1, p2 = sorted(base)[:3]
    n = cross(sub(p1, p0), sub(p2, p0))
    sa, sb = dot(n, sub(ap, p0)), dot(n, sub(bp, p0))
    return sa * sb < 0


def _weight_two_edge(cells: Sequence[Cell]):
    common = frozenset.intersection(*(frozenset(c.vertices) for c in cells))
    for p, q in itertools.combinations(sorted(common), 2):
        if lattice_length(p, q) == 2 and all((p, q) in c.edges() or (q, p) in c.edges()
                                             for c in cells):
            return (p, q)
    return None


def classify_circuit(cx: PolytopeComplex) -> CircuitClass:
    if not cx.validated:
        check_complex(cx.cells)
    cells = cx.cells
    if cx.tag:
        return CircuitClass.unseparated(cx.tag)
    if len(cells) == 1 and _is_pentatope(cells[0]):
        return CircuitClass(CircuitClass.PENTATOPE)
    if _is_bipyramid(cells):
        return CircuitClass(CircuitClass.BIPYRAMID)
    if len(cells) >= 2 and all(c.dim == 3 and c.is_simplex() for c in cells):
        if _weight_two_edge(cells) is not None:
            return CircuitClass(CircuitClass.WEIGHT_TWO)
    return CircuitClass(CircuitClass.NONE)


# -- intersections --------------------------------------------------------------

class IntersectionKind(str):
    DISJOINT = "Disjoint"
    VERTEX = "SharedVertex"
    EDGE = "SharedEdge"
    FACET = "SharedFacet"
    OVERLAP = "Overlap"


_RANK = ["Disjoint", "SharedVertex", "SharedEdge", "SharedFacet", "Overlap"]


def _cell_points(c: Cell) -> set:
    return set(_points_of(c.vertices))


@functools.lru_cache(maxsize=None)
def _points_of(vertices: tuple) -> tuple:
    if affine_rank(vertices) == 3:
        return tuple(lattice_points_in(vertices))
    return vertices


def complexes_intersect(c1: PolytopeComplex, c2: PolytopeComplex) -> IntersectionKind:
    """Largest shared face dimension, or Overlap when interiors meet."""
    for a in c1.cells:
        for b in c2.cells:
            if _interiors_meet(a, b):
                return IntersectionKind(IntersectionKind.OVERLAP)
    p1 = set().union(*(_cell_points(c) for c in c1.cells))
    p2 = set().union(*(_cell_points(c) for c in c2.cells))
    shared = p1 & p2
    r = affine_rank(shared)
    return IntersectionKind(_RANK[min(r, 2) + 1])


def shared_face_bruteforce(c1: PolytopeComplex, c2: PolytopeComplex) -> IntersectionKind:
    """Reference for complexes_intersect built from explicit face lattices.

    Meant for small complexes; enumerates every face of every cell.
    """
    for a in c1.cells:
        for b in c2.cells:
            if a == b and a.dim == 3:
                return IntersectionKind(IntersectionKind.OVERLAP)
    best = -1
    for a in c1.cells:
        fa = a.faces()
        for b in c2.cells:
            fb = b.faces()
            for f in fa & fb:
                best = max(best, affine_rank(f))
    # the two complexes may also touch along a face that is not a common face
    # of any pair of cells (e.g. a vertex inside a facet); fall back on points
    if best < 2:
        p1 = set().union(*(_cell_points(c) for c in c1.cells))
        p2 = set().union(*(_cell_points(c) for c in c2.cells))
        best = max(best, affine_rank(p1 & p2))
    for a in c1.cells:
        for b in c2.cells:
            if _interiors_meet(a, b):
                return IntersectionKind(IntersectionKind.OVERLAP)
    return IntersectionKind(_RANK[min(best, 2) + 1])


def embed_floor(cells2d: Iterable[Sequence[Point2]], slice_index: int, d: int = 3,
                floor_degree: int | None = None) -> list[Cell]:
    """Lift floor cells (u, v) to the plane x = slice_index of the degree-d simplex."""
    if not 0 <= slice_index <= d:
        raise InvalidSlice(f"slice {slice_index} outside 0..{d}")
    if floor_degree is not None and slice_index != d - floor_degree:
        raise InvalidSlice(f"degree-{floor_degree} floor lives in slice {d - floor_degree}")
    out = []
    for c in cells2d:
        lifted = [(slice_index, u, v) for u, v in c]
        if any(u + v > d - slice_index or u < 0 or v < 0 for _, u, v in lifted):
            raise InvalidSlice(f"cell {tuple(c)} does not fit slice {slice_index}")
        out.append(Cell(lifted))
    return out
