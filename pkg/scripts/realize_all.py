"""Realize every separated plan of every delta through exact stretched points."""
import argparse
import time
from fractions import Fraction

from tropicount.census import evaluated
from tropicount.floorplan import Separated
from tropicount.realize import realize_numeric

ap = argparse.ArgumentParser()
ap.add_argument("--eta", default="1/64")
ap.add_argument("--spacing", type=int, default=8)
args = ap.parse_args()

t0 = time.perf_counter()
ok = bad = 0
for delta in (0, 1, 2):
    for plan, v in evaluated(delta):
        if not isinstance(v, Separated):
            continue
        rep = realize_numeric(plan, Fraction(args.eta), args.spacing, verdict=v)
        print(rep.summary())
        ok += rep.passed
        bad += not rep.passed
print(f"{ok} realized, {bad} failed, {time.perf_counter() - t0:.1f}s")
