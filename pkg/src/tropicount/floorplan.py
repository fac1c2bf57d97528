"""Floor plans: candidate assembly, eliminations, separation verdicts, complexes.

A floor plan fixes a floor curve of each degree 3, 2, 1 (slices x = 0, 1, 2 of
the degree-3 simplex; slice 3 is the single point), places the node germs and
resolves where every string is aligned. Each alignment target gives its own
plan.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .floors import (GermKind, NodeGerm, FloorCurve, BoundedEdgeRecord, SpecialVertex,
                     VertexMode, Orientation, germ_floors, extra_floors, smooth_floor,
                     horizontal_edges, diagonal_edges, special_vertices, cell_edges,
                     floor_point_count, _prim)
from .lattice import (Cell, PolytopeComplex, CircuitClass, IntersectionKind, MalformedComplex,
                      classify_circuit, complexes_intersect, hull_contains, sub)
from .multiplicity import (GermContext, Multiplicity, complex_mult, real_mult, combine,
                           parallelogram_data)

G = GermKind
D = 3  # degree of the surfaces
DEGREES = (3, 2, 1)


class MalformedPlan(ValueError):
    pass


class UnsupportedDelta(ValueError):
    pass


# -- placements -----------------------------------------------------------------

@dataclass(frozen=True)
class GermPlacement:
    """Floor degrees carrying the node germs, largest first."""
    case: tuple

    def __post_init__(self):
        case = tuple(sorted(self.case, reverse=True))
        if len(case) > 2 or any(c not in DEGREES for c in case):
            raise ValueError(f"bad placement {self.case}")
        if case.count(1) > 1:
            raise ValueError("a line floor carries at most one germ")
        object.__setattr__(self, "case", case)

    def germs_on(self, degree: int) -> int:
        return self.case.count(degree)

    @property
    def delta(self) -> int:
        return len(self.case)

    @property
    def label(self) -> str:
        return "(" + ",".join(map(str, self.case)) + ")" if self.case else "()"

    @property
    def code(self) -> str:
        return "".join(map(str, self.case)) or "0"


PLACEMENTS = {
    0: (GermPlacement(()),),
    1: tuple(GermPlacement((i,)) for i in (3, 2, 1)),
    2: tuple(GermPlacement(c) for c in ((3, 1), (2, 1), (3, 2), (2, 2), (3, 3))),
}


def placements(delta: int) -> tuple:
    if delta not in PLACEMENTS:
        raise UnsupportedDelta(f"delta must be 0, 1 or 2, got {delta}")
    return PLACEMENTS[delta]


def allocate_points(placement: GermPlacement) -> tuple:
    """Points through which C3, C2, C1 pass."""
    return tuple(floor_point_count(i, placement.germs_on(i)) for i in DEGREES)


def total_points(placement: GermPlacement) -> int:
    """Floor points plus one point fixing the position of each floor."""
    return sum(allocate_points(placement)) + len(DEGREES)


def lift(degree: int, p) -> tuple:
    """Floor coordinates (u, v) of the degree-`degree` floor -> (x, u, v)."""
    return (D - degree, p[0], p[1])


# -- alignments -----------------------------------------------------------------

@dataclass(frozen=True)
class Target:
    """Where a string end goes: a bounded edge or a vertex of a neighbouring floor."""
    kind: str  # "edge" | "vertex"
    floor_degree: int
    edge: BoundedEdgeRecord | None = None
    vertex: SpecialVertex | None = None

    @property
    def k(self) -> int:
        return self.edge.k

    @property
    def points(self) -> tuple:
        return self.edge.dual_edge if self.kind == "edge" else self.vertex.cell

    def describe(self) -> str:
        pts = "".join(f"({a},{b})" for a, b in self.points)
        return f"{self.kind}{pts}@C{self.floor_degree}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "floor": self.floor_degree,
                "dual": [list(p) for p in self.points]}


@dataclass(frozen=True)
class Alignment:
    """Resolved alignment of a string germ; `targets` is empty when none exists."""
    source_degree: int
    source_kind: GermKind
    ends: tuple
    targets: tuple = ()

    @property
    def resolved(self) -> bool:
        return bool(self.targets)

    @property
    def target_kind(self) -> str:
        if not self.targets:
            return "none"
        return self.targets[0].kind

    @property
    def target_floor(self) -> int | None:
        return self.targets[0].floor_degree if self.targets else None

    def describe(self) -> str:
        tgt = "+".join(t.describe() for t in self.targets) or "unaligned"
        return f"{self.source_kind}@C{self.source_degree}->{tgt}"

    def to_json(self) -> dict:
        return {"source": {"floor": self.source_degree, "kind": str(self.source_kind),
                           "ends": [[list(p) for p in e] for e in self.ends]},
                "targets": [t.to_json() for t in self.targets]}


def _edge_targets(floor, orient):
    recs = horizontal_edges(floor) if orient == Orientation.HORIZONTAL else diagonal_edges(floor)
    return [Target("edge", floor.degree, edge=r) for r in recs]


def _vertex_targets(floor, orient):
    mode = (VertexMode.NOT_ADJACENT_HORIZONTAL if orient == Orientation.HORIZONTAL
            else VertexMode.NOT_ADJACENT_DIAGONAL)
    return [Target("vertex", floor.degree, vertex=v) for v in special_vertices(floor, mode)]


def _end_orientation(end) -> Orientation | None:
    dirn = _prim(sub(end[1], end[0]))
    if dirn == (0, 1):
        return Orientation.HORIZONTAL
    if dirn in ((1, -1), (-1, 1)):
        return Orientation.DIAGONAL
    return None


def _neighbour_floor(degree: int, orient: Orientation) -> int:
    # horizontal ends reach the floor above in degree, diagonal ends the one below
    return degree + 1 if orient == Orientation.HORIZONTAL else degree - 1


def alignment_options(floors: dict, degree: int, germ: NodeGerm) -> list[tuple]:
    """Possible target tuples for one string germ of floors[degree]."""
    if germ.kind in (G.LEFT_STRING, G.RIGHT_STRING):
        orient = Orientation.HORIZONTAL if germ.kind == G.LEFT_STRING else Orientation.DIAGONAL
        nb = _neighbour_floor(degree, orient)
        if nb not in floors:
            return []
        f = floors[nb]
        return [(t,) for t in _edge_targets(f, orient) + _vertex_targets(f, orient)]
    if germ.kind == G.TWO_DIM_STRING:
        orients = {_end_orientation(e) for e in germ.ends}
        if len(orients) != 1 or None in orients or germ.corner == (0, degree):
            return []
        orient = orients.pop()
        nb = _neighbour_floor(degree, orient)
        if nb not in floors:
            return []
        return list(itertools.combinations(_edge_targets(floors[nb], orient), 2))
    return []  # upward strings never reach another floor


def _string_end(germ: NodeGerm):
    """The end of a one-freedom string that gets aligned."""
    want = (0, 1) if germ.kind == G.LEFT_STRING else (1, -1)
    for e in germ.ends:
        if _prim(sub(e[1], e[0])) in (want, (-want[0], -want[1])):
            return e
    raise MalformedPlan(f"{germ.kind} at {germ.corner} has no movable end")


# -- plans ----------------------------------------------------------------------

@dataclass(frozen=True)
class FloorPlan:
    plan_id: str
    placement: GermPlacement
    curves: tuple  # (C3, C2, C1)
    alignments: tuple = ()
    complexes: tuple = ()

    def floor(self, degree: int) -> FloorCurve:
        return self.curves[D - degree]

    @property
    def floors(self) -> dict:
        return {i: self.floor(i) for i in DEGREES}

    @property
    def tags(self) -> tuple:
        return tuple(c.tag for c in self.curves)

    @property
    def case_label(self) -> str:
        """Case label: tags of the germ-carrying floors, the line's string left out
        unless it is the only germ."""
        tags = [self.floor(i).tag for i in DEGREES if self.placement.germs_on(i)]
        if len(tags) > 1 and tags[-1] == "11_1":
            tags = tags[:-1]
        return "(" + ", ".join(tags) + ")"

    def alignment_for(self, degree: int, germ: NodeGerm) -> Alignment | None:
        for a in self.alignments:
            if a.source_degree == degree and a.source_kind == germ.kind:
                return a
        return None

    def germs(self):
        """(degree, germ) pairs, top floor first."""
        return [(i, g) for i in DEGREES for g in self.floor(i).germs]

    def describe(self) -> str:
        al = "; ".join(a.describe() for a in self.alignments)
        return f"{'+'.join(self.tags)}" + (f" [{al}]" if al else "")

    def to_json(self) -> dict:
        return {"id": self.plan_id, "placement": self.placement.label,
                "floors": list(self.tags),
                "alignments": [a.to_json() for a in self.alignments]}


def floor_options(placement: GermPlacement, degree: int) -> tuple:
    g = placement.germs_on(degree)
    if g == 0:
        return (smooth_floor(degree),)
    return germ_floors(degree, g) + extra_floors(degree, g)


def enumerate_candidates(placement: GermPlacement) -> list[FloorPlan]:
    """All floor plans of a placement in canonical order; one plan per alignment."""
    out = []
    for curves in itertools.product(*(floor_options(placement, i) for i in DEGREES)):
        floors = dict(zip(DEGREES, curves))
        strings = [(i, g) for i in DEGREES for g in floors[i].strings]
        opts = []
        for i, g in strings:
            o = alignment_options(floors, i, g)
            ends = g.ends if g.kind == G.TWO_DIM_STRING else (
                (_string_end(g),) if g.kind in (G.LEFT_STRING, G.RIGHT_STRING) else g.ends)
            opts.append([Alignment(i, g.kind, ends, t) for t in o]
                        or [Alignment(i, g.kind, ends, ())])
        for combo in itertools.product(*opts):
            pid = f"d{placement.delta}-{placement.code}-{len(out) + 1:02d}"
            out.append(FloorPlan(pid, placement, tuple(curves), tuple(combo)))
    return out


# -- eliminations ------------------------------------------------------------------

@dataclass(frozen=True)
class Separated:
    complexes: tuple
    verdict: str = "Separated"


@dataclass(frozen=True)
class Unseparated:
    tag: str
    complexes: tuple = ()
    verdict: str = "Unseparated"


@dataclass(frozen=True)
class Eliminated:
    rule: str
    verdict: str = "Eliminated"


SeparationVerdict = Separated | Unseparated | Eliminated


def _opposite_edge(cell, corner):
    rest = [v for v in cell if v != corner]
    return rest[0], rest[1]


def _is_direction(e, d) -> bool:
    return _prim(sub(e[1], e[0])) in (d, (-d[0], -d[1]))


def _upward_pull(floor: FloorCurve, germ: NodeGerm) -> str:
    """'vertical' when the top corner string can only be pulled straight up."""
    if germ.kind == G.UPWARD_STRING:
        cell = germ.cells[0]
        if _is_direction(_opposite_edge(cell, germ.corner), (1, 0)):
            return "vertical"
    return "slope"


def _is_upward(floor, germ) -> bool:
    return germ.kind == G.UPWARD_STRING or (germ.is_string and germ.corner == (0, floor.degree))


def weight_two_completions(plan: FloorPlan, degree: int, germ: NodeGerm,
                           drop_used: bool = True) -> list[tuple]:
    """Unit edges (lifted) of the neighbouring floor that complete a weight-two end.

    A diagonal end meets the left side of the floor below; a horizontal end the
    hypotenuse of the floor above. Edges used up by string alignments are dropped.
    """
    if germ.kind == G.DIAGONAL_W2:
        nb = degree - 1
        if nb < 1:
            return []
        cand = [((0, a), (0, a + 1)) for a in range(nb)]
        used = {a.ends[0] for a in plan.alignments
                if a.source_degree == nb and a.target_floor == degree}
        if drop_used:
            cand = [e for e in cand if e not in used]
    elif germ.kind == G.HORIZONTAL_W2:
        nb = degree + 1
        if nb > D:
            return []
        cand = [((a, nb - a), (a + 1, nb - a - 1)) for a in range(nb)]
    else:
        return []
    return [(lift(nb, e[0]), lift(nb, e[1])) for e in cand]


def consumed_intersections(plan: FloorPlan, degree: int, germ: NodeGerm) -> int:
    if germ.kind != G.DIAGONAL_W2:
        return 0
    return (degree - 1) - len(weight_two_completions(plan, degree, germ))


def _vertex_alignment_hull(plan, a: Alignment):
    t = a.targets[0]
    return [lift(t.floor_degree, p) for p in t.vertex.cell] + \
           [lift(a.source_degree, p) for p in a.ends[0]]


def _dimension_obstruction(plan: FloorPlan, a: Alignment) -> bool:
    """A string aligned with the vertex of a weight-two triangle whose every
    completion stays inside the pentatope: the pentatope cannot hold both nodes."""
    if a.target_kind != "vertex":
        return False
    t = a.targets[0]
    f = plan.floor(t.floor_degree)
    cell = set(t.vertex.cell)
    for g in f.germs:
        if g.kind in (G.DIAGONAL_W2, G.HORIZONTAL_W2) and set(g.edge) <= cell:
            hull = _vertex_alignment_hull(plan, a)
            comps = weight_two_completions(plan, t.floor_degree, g, drop_used=False)
            if comps and all(hull_contains(hull, p) for e in comps for p in e):
                return True
    return False


def apply_eliminations(plan: FloorPlan) -> Eliminated | None:
    floors = plan.floors
    if any(g.corner == (2, 0) for g in floors[2].germs):
        return Eliminated("right-string-in-conic")
    if any(g.kind == G.VERTICAL_W2 for i, g in plan.germs()):
        return Eliminated("vertical-weight-two")
    for i, g in plan.germs():
        if _is_upward(floors[i], g):
            pull = _upward_pull(floors[i], g)
            return Eliminated("upward-string-vertical-pull" if pull == "vertical" else "slope")
    for i, g in plan.germs():
        if g.kind == G.RIGHT_STRING:
            if not _is_direction(_opposite_edge(g.cells[0], g.corner), (0, 1)):
                return Eliminated("slope")
    for a in plan.alignments:
        if not a.resolved:
            f = floors[a.source_degree]
            if a.source_kind == G.TWO_DIM_STRING and any(
                    g.corner == (f.degree, 0) for g in f.strings):
                return Eliminated("slope")
            return Eliminated("string-unalignable")
    for a in plan.alignments:
        if _dimension_obstruction(plan, a):
            return Eliminated("dimension")
    return None


def is_prospect(plan: FloorPlan, verdict: Eliminated | None = None) -> bool:
    """Eliminated plans that an alignment with ends might still rescue: a floor
    rule removed them, a string is present, none of the strings is pulled
    straight up, and no conic has a right string."""
    verdict = verdict or apply_eliminations(plan)
    if verdict is None or verdict.rule == "dimension":
        return False
    floors = plan.floors
    if any(g.corner == (2, 0) for g in floors[2].germs):
        return False
    strings = [(i, g) for i, g in plan.germs() if g.is_string]
    if not strings:
        return False
    return not any(_is_upward(floors[i], g) and _upward_pull(floors[i], g) == "vertical"
                   for i, g in strings)


# -- unseparated rule table ----------------------------------------------------

PRISM = "prism-with-two-pyramids"

# case label -> tag, for plans unseparated whatever the alignment
_UNSEPARATED_CASES = {
    "(21_1)": PRISM, "(21_2)": PRISM, "(21_3)": PRISM,
    "(31_1, 21_1)": PRISM, "(31_1, 21_2)": PRISM,
    "(31_1, 21_4)": "string-on-weight-two-triangle",
    "(31_2, 21_4)": "shared-tetrahedron", "(31_3, 21_4)": "shared-tetrahedron",
    "(31_1, 21_3)": "string-on-parallelogram-vertex",
    "(33_3)": "weight-three-end",
}

# (case label, description of the conic's left-string target) -> tag
_UNSEPARATED_ALIGNED = {
    ("(31_1, 21_7)", "edge(2,0)(2,1)@C3"): PRISM,
    ("(31_2, 21_7)", "edge(2,0)(2,1)@C3"): "bipyramid-holds-weight-two-end",
    ("(31_3, 21_7)", "vertex(1,2)(2,0)(3,0)@C3"): "pentatope-on-weight-two-triangle",
    ("(22_1)", "edge(1,0)(1,1)@C3"): "trapezoid-bipyramid-inner",
    ("(22_1)", "edge(1,1)(1,2)@C3"): "trapezoid-bipyramid-inner",
    ("(22_1)", "edge(2,0)(2,1)@C3"): "trapezoid-bipyramid-outer",
}

# the nine unseparated classes, with the cases that produce them
UNSEPARATED_CLASSES = {
    PRISM: ("(21_1)-(21_3)", "(31_1, 21_1)", "(31_1, 21_2)", "(31_1, 21_7)"),
    "string-on-weight-two-triangle": ("(31_1, 21_4)",),
    "shared-tetrahedron": ("(31_2, 21_4)", "(31_3, 21_4)"),
    "string-on-parallelogram-vertex": ("(31_1, 21_3)",),
    "bipyramid-holds-weight-two-end": ("(31_2, 21_7)",),
    "pentatope-on-weight-two-triangle": ("(31_3, 21_7)",),
    "trapezoid-bipyramid-inner": ("(22_1)",),
    "trapezoid-bipyramid-outer": ("(22_1)",),
    "weight-three-end": ("(33_3)",),
}


def unseparated_tag(plan: FloorPlan) -> str | None:
    if plan.placement.delta < 2:
        return None
    label = plan.case_label
    if label in _UNSEPARATED_CASES:
        return _UNSEPARATED_CASES[label]
    for a in plan.alignments:
        for t in a.targets:
            tag = _UNSEPARATED_ALIGNED.get((label, t.describe()))
            if tag:
                return tag
    return None


# -- node complexes -------------------------------------------------------------

# Floors whose reference triangulation differs from the one the point conditions
# give: the quadrilateral (0,3),(1,1),(2,0),(2,1) is cut along the other
# diagonal. The node complexes are built on the reference cells; the alignment
# targets (bounded edges, special vertex count) agree for both.
REFERENCE_FLIPS = {
    "31_2": ((((0, 3), (1, 1), (2, 1)), ((1, 1), (2, 0), (2, 1))),
             (((0, 3), (1, 1), (2, 0)), ((0, 3), (2, 0), (2, 1)))),
}


def reference_floor(floor: FloorCurve) -> FloorCurve:
    flip = REFERENCE_FLIPS.get(floor.tag)
    if flip is None:
        return floor
    old, new = flip
    cells = tuple(c for c in floor.cells if c not in old) + new
    return replace(floor, cells=tuple(sorted(cells)))


def _vertex_cell(floor: FloorCurve, target: Target):
    ref = reference_floor(floor)
    if target.vertex.cell in {tuple(sorted(c)) for c in ref.cells}:
        return target.vertex.cell
    moved = [v.cell for v in special_vertices(ref, target.vertex.mode)
             if v not in special_vertices(floor, target.vertex.mode)]
    if len(moved) != 1:
        raise MalformedPlan(f"vertex {target.vertex.cell} of {floor.tag} has no reference counterpart")
    return moved[0]


def _cells_with_edge(floor: FloorCurve, e):
    return [c for c in floor.cells if tuple(sorted(e)) in cell_edges(c)]


def _apexes(floor: FloorCurve, e):
    out = []
    for c in _cells_with_edge(floor, e):
        rest = [v for v in c if v not in e]
        # a parallelogram next to the edge: take the vertex adjacent to the edge's start
        out.append(rest[0] if len(rest) == 1 else min(rest))
    return out


def string_bipyramid(plan: FloorPlan, degree: int, end, target: Target) -> PolytopeComplex:
    """Bipyramid over the parallelogram spanned by a string end and its edge."""
    tf = reference_floor(plan.floor(target.floor_degree))
    e = target.edge.dual_edge
    base = [lift(degree, p) for p in end] + [lift(tf.degree, p) for p in e]
    src = plan.floor(degree)
    strings = {g.corner: g for g in tf.strings}
    apexes = []
    for a in _apexes(tf, e):
        if a in strings:
            # the neighbour's own string corner is pulled away by its alignment;
            # the pyramid closes up in the source floor's corner triangle instead
            own = next(g for g in src.strings if set(end) <= set(g.cells[0]))
            third = [v for v in own.cells[0] if v not in end]
            apexes.append(lift(degree, third[0]))
        else:
            apexes.append(lift(tf.degree, a))
    if len(apexes) != 2:
        raise MalformedPlan(f"edge {e} of {tf.tag} is not bounded")
    return PolytopeComplex([Cell(base + [apexes[0]]), Cell(base + [apexes[1]])])


def string_pentatope(plan: FloorPlan, degree: int, end, target: Target) -> PolytopeComplex:
    tf = plan.floor(target.floor_degree)
    cell = _vertex_cell(tf, target)
    pts = [lift(tf.degree, p) for p in cell] + [lift(degree, p) for p in end]
    return PolytopeComplex([Cell(pts)])


def parallelogram_bipyramid(degree: int, germ: NodeGerm) -> PolytopeComplex:
    x = D - degree
    base = [lift(degree, p) for p in germ.cells[0]]
    up = (x - 1, degree + 1, 0)
    down = (x + 1, 0, 0)
    return PolytopeComplex([Cell(base + [up]), Cell(base + [down])])


def weight_two_stars(plan: FloorPlan, degree: int, germ: NodeGerm):
    """Candidate complexes of a weight-two end, one per completing unit edge."""
    p, q = (lift(degree, v) for v in germ.edge)
    own = next(c for c in reference_floor(plan.floor(degree)).cells if set(germ.edge) <= set(c))
    n0 = lift(degree, next(v for v in own if v not in germ.edge))
    for a, b in weight_two_completions(plan, degree, germ):
        for na, nb in ((a, b), (b, a)):
            try:
                yield PolytopeComplex([Cell([p, q, n0, na]), Cell([p, q, na, nb])])
            except MalformedComplex:
                continue


def _classified(cx) -> bool:
    return classify_circuit(cx).kind in (CircuitClass.PENTATOPE, CircuitClass.BIPYRAMID,
                                         CircuitClass.WEIGHT_TWO)


def _compatible(cx, others) -> bool:
    return _classified(cx) and all(
        complexes_intersect(cx, o) != IntersectionKind.OVERLAP for o in others)


def node_complexes(plan: FloorPlan) -> tuple:
    """One polytope complex per node, built from the germs and their alignments.

    Where a germ leaves a choice (pairing of a two-freedom string's ends, the
    completing edge of a weight-two end) the first choice keeping every complex
    classified and all interiors apart is taken.
    """
    groups, stars = [], []  # groups: per germ, the alternative lists of complexes
    for i, g in plan.germs():
        if g.kind == G.PARALLELOGRAM:
            groups.append([[parallelogram_bipyramid(i, g)]])
        elif g.kind in (G.DIAGONAL_W2, G.HORIZONTAL_W2):
            stars.append((i, g))
        elif g.kind in (G.LEFT_STRING, G.RIGHT_STRING):
            a = plan.alignment_for(i, g)
            t = a.targets[0]
            build = string_bipyramid if t.kind == "edge" else string_pentatope
            groups.append([[build(plan, i, a.ends[0], t)]])
        elif g.kind == G.TWO_DIM_STRING:
            a = plan.alignment_for(i, g)
            alts = []
            for ts in itertools.permutations(a.targets):
                try:
                    alts.append([string_bipyramid(plan, i, e, t) for e, t in zip(a.ends, ts)])
                except MalformedComplex:
                    continue
            groups.append(alts)
        else:
            raise MalformedPlan(f"{g.kind} cannot be part of a separated plan")
    for choice in itertools.product(*groups):
        flat = [c for alt in choice for c in alt]
        if not all(_compatible(c, flat[:j]) for j, c in enumerate(flat)):
            continue
        done = _add_stars(plan, stars, flat)
        if done is not None:
            return tuple(done)
    raise MalformedPlan(f"{plan.plan_id}: no separated choice of node complexes")


def _add_stars(plan, stars, built):
    if not stars:
        return built
    (i, g), rest = stars[0], stars[1:]
    for cx in weight_two_stars(plan, i, g):
        if _compatible(cx, built):
            done = _add_stars(plan, rest, built + [cx])
            if done is not None:
                return done
    return None


def unseparated_complex(plan: FloorPlan, tag: str) -> PolytopeComplex:
    """Single cell: the hull of everything the two germs and their alignments touch."""
    pts = set()
    for i, g in plan.germs():
        for c in g.cells:
            pts.update(lift(i, p) for p in c)
    for a in plan.alignments:
        for t in a.targets:
            pts.update(lift(t.floor_degree, p) for p in t.points)
    return PolytopeComplex([Cell(sorted(pts))], tag=tag)


def separation_verdict(plan: FloorPlan) -> SeparationVerdict:
    el = apply_eliminations(plan)
    if el is not None:
        return el
    tag = unseparated_tag(plan)
    if tag is not None:
        return Unseparated(tag, (unseparated_complex(plan, tag),))
    if plan.placement.delta == 0:
        return Separated(())
    try:
        cxs = node_complexes(plan)
    except MalformedComplex as exc:
        raise MalformedPlan(f"{plan.plan_id}: {exc}") from exc
    return Separated(cxs)


# -- multiplicities ---------------------------------------------------------------

def germ_contexts(plan: FloorPlan) -> list[tuple]:
    """(degree, germ, context) for every germ of a plan."""
    out = []
    for i, g in plan.germs():
        if g.kind == G.PARALLELOGRAM:
            data = parallelogram_data(g.cells[0], i)
            v, k, l = data if data else (None, None, None)
            ctx = GermContext(i, k=k, l=l, variant=v)
        elif g.is_string:
            a = plan.alignment_for(i, g)
            ks = tuple(t.k for t in a.targets if t.kind == "edge")
            ctx = GermContext(i, target_kind=a.target_kind, target_ks=ks)
        else:
            ctx = GermContext(i, consumed=consumed_intersections(plan, i, g))
        out.append((i, g, ctx))
    return out


def germ_factors(plan: FloorPlan) -> list[tuple]:
    return [(complex_mult(g, ctx), real_mult(g, ctx)) for _, g, ctx in germ_contexts(plan)]


def plan_mult(plan: FloorPlan) -> Multiplicity:
    return combine(germ_factors(plan))


def with_complexes(plan: FloorPlan, verdict) -> FloorPlan:
    return replace(plan, complexes=tuple(getattr(verdict, "complexes", ())))
