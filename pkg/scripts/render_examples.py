"""Draw the floors of one plan per catalog shape into a directory."""
import argparse

from tropicount.census import evaluated
from tropicount.render import render_plan

ap = argparse.ArgumentParser()
ap.add_argument("--out", default="figures")
args = ap.parse_args()

seen = set()
for plan, v in evaluated(2):
    key = plan.tags
    if key in seen:
        continue
    seen.add(key)
    for p in render_plan(plan, args.out):
        print(p)
