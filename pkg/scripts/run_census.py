"""Print the census tables for delta = 0, 1, 2 and write the delta=2 JSON."""
import argparse
import sys
from pathlib import Path

from tropicount.census import run_census, export

ap = argparse.ArgumentParser()
ap.add_argument("--json", default="census_d2.json", help="where to write the delta=2 report")
args = ap.parse_args()

for delta in (0, 1, 2):
    rep = run_census(delta)
    sys.stdout.write(export(rep, "table") + "\n")
Path(args.json).write_text(export(run_census(2), "json"))
print(f"wrote {args.json}")
