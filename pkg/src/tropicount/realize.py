"""Exact realization of a floor plan through stretched points.

Points p_j = spacing**j * (1, eta, eta**2). Floor C3 takes the first points,
then one point fixes the step to the next floor, and so on. The floors are
solved as tropical curves (max convention, coefficients c_w of x^w) in the
(Y, Z) projection with every alignment imposed as a linear equation; the
heights of the floors follow from the step points. Everything is checked
with exact rationals on the assembled tropical surface.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .config import RealizeConfig
from .floors import GermKind, FloorCurve
from .floorplan import (FloorPlan, Separated, separation_verdict, DEGREES, D,
                        allocate_points)

G = GermKind


class PreconditionError(ValueError):
    pass


@dataclass
class RealizationReport:
    plan_id: str
    passed: bool
    failures: list = field(default_factory=list)
    points: list = field(default_factory=list)
    heights: dict = field(default_factory=dict)
    coefficients: dict = field(default_factory=dict)
    incidences: int = 0
    alignments: list = field(default_factory=list)

    def summary(self) -> str:
        state = "pass" if self.passed else "FAIL"
        extra = f"; {self.failures[0]}" if self.failures else ""
        return (f"{self.plan_id}: {state} ({self.incidences} point incidences, "
                f"{len(self.alignments)} alignments){extra}")

    def to_json(self) -> dict:
        fr = str
        return {"plan": self.plan_id, "passed": self.passed, "failures": self.failures,
                "points": [[fr(c) for c in p] for p in self.points],
                "heights": {str(k): fr(v) for k, v in self.heights.items()},
                "coefficients": {str(i): {f"{w[0]},{w[1]}": fr(c) for w, c in sorted(cs.items())}
                                 for i, cs in self.coefficients.items()},
                "alignments": self.alignments}


def _val(c, w, Q):
    return c + w[0] * Q[0] + w[1] * Q[1]


def _argmax(items):
    """Keys attaining the maximum of a {key: value} dict."""
    m = max(items.values())
    return {k for k, v in items.items() if v == m}, m


def _ray_direction(edge, d):
    """Outward direction of the unbounded edge dual to a boundary lattice edge."""
    (a, b), (c, e) = edge
    if a == c == 0:
        return (-1, 0)
    if b == e == 0:
        return (0, -1)
    if a + b == d and c + e == d:
        return (1, 1)
    raise ValueError(f"{edge} is not on the boundary")


def _cell_vertex(coef, cell):
    """Point where all monomials of a cell tie."""
    a, b, c = cell[:3]
    # c_a + <a,Q> = c_b + <b,Q> = c_c + <c,Q>
    m = sympy.Matrix([[a[0] - b[0], a[1] - b[1]], [a[0] - c[0], a[1] - c[1]]])
    rhs = sympy.Matrix([coef[b] - coef[a], coef[c] - coef[a]])
    sol = m.LUsolve(rhs)
    return (Fraction(str(sol[0])), Fraction(str(sol[1])))


def _build_system(plan: FloorPlan, pairing: list, Qs: dict):
    syms, eqs = {}, []
    for i in DEGREES:
        for w in sorted(plan.floor(i).vertices):
            syms[(i, w)] = sympy.Symbol(f"c{i}_{w[0]}_{w[1]}")
    for i in DEGREES:
        f = plan.floor(i)
        c = lambda w, i=i: syms[(i, w)]
        eqs.append(c(f.path[0]))  # gauge
        for (u, v), Q in zip(f.marked_edges, Qs[i]):
            eqs.append(_val(c(u), u, Q) - _val(c(v), v, Q))
        for g in f.germs:
            if g.kind == G.PARALLELOGRAM:
                q = g.cells[0]
                for (p1, p2), (p3, p4) in _diagonals(q):
                    eqs.append(c(p1) + c(p2) - c(p3) - c(p4))
    aux = []
    for a, end, t in pairing:
        src = a.source_degree
        p, q = end
        v = (q[0] - p[0], q[1] - p[1])
        lhs = syms[(src, p)] - syms[(src, q)]  # <v, Q> along the end
        if t.kind == "edge":
            ea, eb = t.edge.dual_edge
            if (eb[0] - ea[0], eb[1] - ea[1]) != v:
                ea, eb = eb, ea
            rhs = syms[(t.floor_degree, ea)] - syms[(t.floor_degree, eb)]
        else:
            Y, Z = sympy.symbols(f"Y{len(aux)} Z{len(aux)}")
            aux.append((Y, Z))
            cell = t.vertex.cell
            cc = lambda w: syms[(t.floor_degree, w)]
            for w in cell[1:]:
                eqs.append(cc(cell[0]) + cell[0][0] * Y + cell[0][1] * Z
                           - cc(w) - w[0] * Y - w[1] * Z)
            rhs = v[0] * Y + v[1] * Z
        eqs.append(lhs - rhs)
    unknowns = list(syms.values()) + [s for pair in aux for s in pair]
    return syms, unknowns, eqs


def _diagonals(q):
    """Pairs of opposite vertices of a parallelogram, as ((a, c), (b, d)) with a+c = b+d."""
    for a, b, c, d in itertools.permutations(q):
        if (a[0] + c[0], a[1] + c[1]) == (b[0] + d[0], b[1] + d[1]) and a < c and b < d and a < b:
            return [((a, c), (b, d))]
    raise ValueError(f"{q} is not a parallelogram")


def _pairings(plan: FloorPlan):
    """Every way to match string ends with their targets, as (alignment, end, target)."""
    per = []
    for a in plan.alignments:
        per.append([list(zip([a] * len(ts), a.ends, ts))
                    for ts in itertools.permutations(a.targets)])
    for combo in itertools.product(*per):
        yield [x for group in combo for x in group]


def realize_numeric(plan: FloorPlan, eta=Fraction(1, 64), spacing: int = 8,
                    verdict=None) -> RealizationReport:
    cfg = RealizeConfig(eta=eta, spacing=spacing)
    verdict = verdict or separation_verdict(plan)
    if not isinstance(verdict, Separated):
        raise PreconditionError(f"{plan.plan_id} is {verdict.verdict}, not separated")
    first = None
    for pairing in _pairings(plan):
        rep = _realize(plan, cfg, pairing)
        if rep.passed:
            return rep
        first = first or rep
    return first


def stretched_points(n: int, cfg: RealizeConfig) -> list:
    return [(Fraction(cfg.spacing) ** j, Fraction(cfg.spacing) ** j * cfg.eta,
             Fraction(cfg.spacing) ** j * cfg.eta ** 2) for j in range(1, n + 1)]


def _realize(plan: FloorPlan, cfg: RealizeConfig, pairing: dict) -> RealizationReport:
    counts = allocate_points(plan.placement)
    n = sum(counts) + len(DEGREES)
    pts = stretched_points(n, cfg)
    rep = RealizationReport(plan.plan_id, False, points=pts)
    # assignment: floor points, then the step point, per floor
    floor_pts, step_pts, j = {}, {}, 0
    for i, cnt in zip(DEGREES, counts):
        floor_pts[i] = pts[j:j + cnt]
        step_pts[i] = pts[j + cnt]
        j += cnt + 1
    Qs = {i: [(p[1], p[2]) for p in floor_pts[i]] for i in DEGREES}

    syms, unknowns, eqs = _build_system(plan, pairing, Qs)
    sol = sympy.linsolve(eqs, unknowns)
    if not sol:
        rep.failures.append("alignment equations are inconsistent")
        return rep
    sol = next(iter(sol))
    if any(s.free_symbols for s in sol):
        rep.failures.append("floors are not fixed by the conditions")
        return rep
    value = dict(zip(unknowns, sol))
    coef = {i: {w: Fraction(str(value[syms[(i, w)]])) for w in plan.floor(i).vertices}
            for i in DEGREES}
    coef[0] = {(0, 0): Fraction(0)}
    rep.coefficients = {i: coef[i] for i in DEGREES}

    # heights from the step points
    H = {0: Fraction(0)}
    slices = {a: D - a for a in range(D + 1)}  # slice -> floor degree (0 = the point)
    for a in range(D):
        X, Y, Z = step_pts[slices[a]]
        lo, lo_max = _argmax({w: _val(c, w, (Y, Z)) for w, c in coef[slices[a]].items()})
        hi, hi_max = _argmax({w: _val(c, w, (Y, Z)) for w, c in coef[slices[a + 1]].items()})
        if len(lo) != 1 or len(hi) != 1:
            rep.failures.append(f"step point {a} sits on a floor edge")
            return rep
        H[a + 1] = H[a] + a * X + lo_max - (a + 1) * X - hi_max
    rep.heights = H

    def surface(p):
        X, Y, Z = p
        return {(a, w): H[a] + a * X + _val(c, w, (Y, Z))
                for a in range(D + 1) for w, c in coef[slices[a]].items()}

    inc = 0
    for i in DEGREES:
        a = D - i
        for (u, v), p in zip(plan.floor(i).marked_edges, floor_pts[i]):
            top, _ = _argmax(surface(p))
            if top != {(a, u), (a, v)}:
                rep.failures.append(f"point {p} of C{i}: maximal terms {sorted(top)}")
            else:
                inc += 1
        top, _ = _argmax(surface(step_pts[i]))
        if len(top) != 2 or {t[0] for t in top} != {a, a + 1}:
            rep.failures.append(f"step point after C{i}: maximal terms {sorted(top)}")
        else:
            inc += 1
    rep.incidences = inc

    for i in DEGREES:
        bad = _subdivision_mismatch(plan.floor(i), coef[i])
        if bad:
            rep.failures.append(f"C{i} has a different subdivision near {bad}")

    for a, end, t in pairing:
        ok, witness = _alignment_holds(plan, a, end, t, coef)
        rep.alignments.append(witness)
        if not ok:
            rep.failures.append(f"{a.describe()}: end misses its target")
    rep.passed = not rep.failures
    return rep


def _subdivision_mismatch(floor: FloorCurve, coef):
    for cell in floor.cells:
        Q = _cell_vertex(coef, cell)
        vals = {w: _val(c, w, Q) for w, c in coef.items()}
        top, _ = _argmax(vals)
        if top != set(cell):
            return cell
    return None


def _alignment_holds(plan, a, end, t, coef):
    """The string end (a ray) runs along a positive length of the target edge,
    or through the target vertex."""
    src = plan.floor(a.source_degree)
    i = src.degree
    corner = next(c for c in src.cells if set(end) <= set(c))
    start = _cell_vertex(coef[i], corner)
    d = _ray_direction(end, i)
    axis = 0 if d[0] != 0 else 1
    sgn = d[axis]

    def along(P):
        return sgn * (P[axis] - start[axis])

    if t.kind == "edge":
        tf = plan.floor(t.floor_degree)
        e = t.edge.dual_edge
        cells = [c for c in tf.cells if set(e) <= set(c)]
        ends = [_cell_vertex(coef[tf.degree], c) for c in cells]
        reach = max(along(P) for P in ends)
        on_line = all(_on_line(P, start, d) for P in ends)
        ok = on_line and reach > 0
        witness = {"source": a.describe(), "start": [str(x) for x in start],
                   "target": [[str(x) for x in P] for P in ends]}
    else:
        P = _cell_vertex(coef[t.floor_degree], t.vertex.cell)
        ok = _on_line(P, start, d) and along(P) >= 0
        witness = {"source": a.describe(), "start": [str(x) for x in start],
                   "target": [[str(x) for x in P]]}
    witness["holds"] = ok
    return ok, witness


def _on_line(P, start, d):
    return (P[0] - start[0]) * d[1] == (P[1] - start[1]) * d[0]
