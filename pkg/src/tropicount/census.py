"""Census of floor plans: per-placement tallies, inventories, export."""
from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field

from .floorplan import (Separated, Unseparated, placements,
                        enumerate_candidates, separation_verdict, plan_mult, is_prospect,
                        UNSEPARATED_CLASSES, UnsupportedDelta)
from .lattice import classify_circuit, complexes_intersect
from .multiplicity import is_known, vainsencher_degree

SCHEMA = "tropicount/1"

GOLDEN = {
    "separated": 39,
    "complex": 214,
    "real": 58,
    "complex_by_placement": {"(3,1)": 20, "(2,1)": 24, "(3,2)": 90, "(2,2)": 72, "(3,3)": 8},
    "real_by_placement": {"(3,1)": 16, "(2,1)": 4, "(3,2)": 34, "(2,2)": 4, "(3,3)": 0},
}


class PlanNotFound(KeyError):
    pass


@dataclass
class CensusReport:
    delta: int
    rows: list = field(default_factory=list)
    placements: dict = field(default_factory=dict)
    totals: dict = field(default_factory=dict)
    unseparated: list = field(default_factory=list)
    eliminated: list = field(default_factory=list)
    prospects: list = field(default_factory=list)
    undetermined: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "delta": self.delta, "rows": self.rows,
                "placements": self.placements, "totals": self.totals,
                "unseparated": self.unseparated, "eliminated": self.eliminated,
                "prospects": self.prospects, "undetermined": self.undetermined}

    @classmethod
    def from_json(cls, obj: dict) -> "CensusReport":
        if obj.get("schema") != SCHEMA:
            raise ValueError(f"unknown schema {obj.get('schema')!r}")
        return cls(obj["delta"], obj["rows"], obj["placements"], obj["totals"],
                   obj["unseparated"], obj["eliminated"], obj["prospects"],
                   obj["undetermined"])

    def matches_golden(self) -> bool:
        if self.delta != 2:
            return False
        t = self.totals
        return (t["separated"] == GOLDEN["separated"] and t["complex"] == GOLDEN["complex"]
                and t["real"] == GOLDEN["real"]
                and {k: v["complex"] for k, v in self.placements.items()}
                == GOLDEN["complex_by_placement"]
                and {k: v["real"] for k, v in self.placements.items()}
                == GOLDEN["real_by_placement"])


def _complex_json(cx) -> dict:
    return {"class": str(classify_circuit(cx)),
            "cells": [[list(v) for v in c.vertices] for c in cx.cells]}


@functools.cache
def evaluated(delta: int) -> tuple:
    """(plan, verdict) for every candidate, in canonical order."""
    out = []
    for pl in placements(delta):
        for plan in enumerate_candidates(pl):
            out.append((plan, separation_verdict(plan)))
    return tuple(out)


def find_plan(plan_id: str):
    """(plan, verdict) for an id such as d2-32-07."""
    try:
        delta = int(plan_id.split("-")[0][1:])
        items = evaluated(delta)
    except (ValueError, IndexError, UnsupportedDelta):
        raise PlanNotFound(plan_id) from None
    for plan, verdict in items:
        if plan.plan_id == plan_id:
            return plan, verdict
    raise PlanNotFound(plan_id)


def run_census(delta: int) -> CensusReport:
    items = evaluated(delta)
    rep = CensusReport(delta)
    inventory: dict = {}
    for pl in placements(delta):
        rep.placements[pl.label] = {"candidates": 0, "separated": 0, "unseparated": 0,
                                    "eliminated": 0, "complex": 0, "real": 0}
    for plan, v in items:
        stats = rep.placements[plan.placement.label]
        stats["candidates"] += 1
        if isinstance(v, Separated):
            m = plan_mult(plan)
            stats["separated"] += 1
            stats["complex"] += m.complex
            stats["real"] += m.real_bound
            cxs = v.complexes
            row = {"placement": plan.placement.label, "id": plan.plan_id,
                   "floors": list(plan.tags),
                   "alignment": "; ".join(a.describe() for a in plan.alignments) or "-",
                   "complex": m.complex,
                   "real": m.real if is_known(m.real) else "undet.",
                   "complexes": [_complex_json(c) for c in cxs],
                   "shared": [str(complexes_intersect(a, b))
                              for i, a in enumerate(cxs) for b in cxs[i + 1:]]}
            rep.rows.append(row)
            if not is_known(m.real):
                rep.undetermined.append(plan.plan_id)
        elif isinstance(v, Unseparated):
            stats["unseparated"] += 1
            key = (plan.placement.label, v.tag)
            entry = inventory.setdefault(key, {"placement": key[0], "tag": v.tag, "count": 0,
                                               "cases": [], "plans": []})
            entry["count"] += 1
            entry["plans"].append(plan.plan_id)
            if plan.case_label not in entry["cases"]:
                entry["cases"].append(plan.case_label)
        else:
            stats["eliminated"] += 1
            rep.eliminated.append({"placement": plan.placement.label, "id": plan.plan_id,
                                   "floors": list(plan.tags), "rule": v.rule})
            if is_prospect(plan, v):
                p = {"placement": plan.placement.label, "floors": list(plan.tags),
                     "rule": v.rule}
                if p not in rep.prospects:
                    rep.prospects.append(p)
    rep.unseparated = list(inventory.values())
    rep.totals = {
        "separated": sum(s["separated"] for s in rep.placements.values()),
        "complex": sum(s["complex"] for s in rep.placements.values()),
        "real": sum(s["real"] for s in rep.placements.values()),
        "candidates": sum(s["candidates"] for s in rep.placements.values()),
    }
    if delta == 2:
        rep.totals["vainsencher"] = vainsencher_degree(3)
        rep.totals["missing"] = rep.totals["vainsencher"] - rep.totals["complex"]
    return rep


# -- export -----------------------------------------------------------------------

def to_json_text(report: CensusReport) -> str:
    return json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"


def to_table(report: CensusReport) -> str:
    lines = [f"census delta={report.delta}", ""]
    head = f"{'id':<10} {'floors':<34} {'complex':>7} {'real':>7}  alignment"
    for label, stats in report.placements.items():
        lines.append(f"placement {label}")
        lines.append(head)
        for r in report.rows:
            if r["placement"] != label:
                continue
            lines.append(f"{r['id']:<10} {'+'.join(r['floors']):<34} {r['complex']:>7} "
                         f"{str(r['real']):>7}  {r['alignment']}")
        lines.append(f"subtotal {label}: plans {stats['separated']}, complex {stats['complex']}, "
                     f"real >= {stats['real']}  (unseparated {stats['unseparated']}, "
                     f"eliminated {stats['eliminated']}, candidates {stats['candidates']})")
        lines.append("")
    t = report.totals
    lines.append(f"total: plans {t['separated']}, complex {t['complex']}, real >= {t['real']}")
    if "vainsencher" in t:
        lines.append(f"expected complex count {t['vainsencher']}, missing {t['missing']}")
    if report.undetermined:
        lines.append("real multiplicity undetermined (counted as 0): "
                     + ", ".join(report.undetermined))
    if report.unseparated:
        lines += ["", "unseparated complexes"]
        for u in report.unseparated:
            lines.append(f"  {u['placement']:<6} {u['tag']:<34} x{u['count']}  "
                         + " ".join(u["cases"]))
    if report.prospects:
        lines += ["", "end-alignment prospects"]
        for p in report.prospects:
            lines.append(f"  {p['placement']:<6} {'+'.join(p['floors']):<34} ({p['rule']})")
    return "\n".join(lines) + "\n"


def export(report: CensusReport, fmt: str = "table") -> str:
    if fmt == "json":
        return to_json_text(report)
    if fmt == "table":
        return to_table(report)
    raise ValueError(f"unknown format {fmt!r}")


def inventory_classes(report: CensusReport) -> dict:
    """Unseparated tag -> sorted placements it occurs under."""
    out: dict = {}
    for u in report.unseparated:
        out.setdefault(u["tag"], set()).add(u["placement"])
    return {k: sorted(v) for k, v in out.items()}


__all__ = ["CensusReport", "run_census", "export", "find_plan", "GOLDEN", "SCHEMA",
           "UNSEPARATED_CLASSES", "PlanNotFound", "inventory_classes", "evaluated"]
