"""Command line: census, floors, render, realize."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .census import run_census, export, find_plan, PlanNotFound
from .floors import germ_floors, extra_floors, smooth_floor, NoSuchFloor, floor_point_count
from .floorplan import UnsupportedDelta
from .realize import realize_numeric, PreconditionError
from .render import render_plan


def _census(args) -> int:
    try:
        rep = run_census(args.delta)
    except UnsupportedDelta as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(export(rep, args.format))
    if args.no_golden:
        return 0
    # only the delta=2 census has golden totals
    return 0 if run_census(2).matches_golden() else 1


def _floors(args) -> int:
    try:
        if args.germs == 0:
            floors = (smooth_floor(args.degree),)
        else:
            floors = germ_floors(args.degree, args.germs) + extra_floors(args.degree, args.germs)
    except NoSuchFloor as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    n = floor_point_count(args.degree, args.germs)
    print(f"degree {args.degree}, {args.germs} germ(s), through {n} points")
    for f in floors:
        omitted = " ".join(f"({a},{b})" for a, b in f.omitted) or "-"
        kinds = ", ".join(str(g.kind) for g in f.germs) or "-"
        print(f"  {f.tag:<40} omitted {omitted:<14} {kinds}")
    return 0


def _render(args) -> int:
    try:
        plan, _ = find_plan(args.plan)
    except PlanNotFound:
        print(f"error: no plan {args.plan!r}", file=sys.stderr)
        return 2
    for p in render_plan(plan, args.out):
        print(p)
    return 0


def _realize(args) -> int:
    try:
        plan, verdict = find_plan(args.plan)
        rep = realize_numeric(plan, Fraction(args.eta), args.spacing, verdict=verdict)
    except PlanNotFound:
        print(f"error: no plan {args.plan!r}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    else:
        print(rep.summary())
        for f in rep.failures:
            print(f"  {f}")
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tropicount",
                                 description="Floor plan census of binodal cubic surfaces")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("census", help="run the census and print tallies")
    c.add_argument("--delta", type=int, default=2)
    c.add_argument("--format", choices=("table", "json"), default="table")
    c.add_argument("--no-golden", action="store_true",
                   help="exit 0 even if the delta=2 totals differ from the known ones")
    c.set_defaults(func=_census)

    f = sub.add_parser("floors", help="list floor curves with node germs")
    f.add_argument("--degree", type=int, required=True)
    f.add_argument("--germs", type=int, required=True)
    f.set_defaults(func=_floors)

    r = sub.add_parser("render", help="draw the floors of a plan as SVG")
    r.add_argument("--plan", required=True)
    r.add_argument("--out", required=True)
    r.set_defaults(func=_render)

    z = sub.add_parser("realize", help="realize a plan through exact stretched points")
    z.add_argument("--plan", required=True)
    z.add_argument("--eta", default="1/64")
    z.add_argument("--spacing", type=int, default=8)
    z.add_argument("--json", action="store_true")
    z.set_defaults(func=_realize)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
