import xml.etree.ElementTree as ET

from tropicount.census import find_plan
from tropicount.floors import floor_by_tag
from tropicount.lattice import triangle_points
from tropicount.render import render_floor, render_plan

NS = "{http://www.w3.org/2000/svg}"


def test_render_floor_marks_omitted_points():
    f = floor_by_tag("21_4")
    root = ET.fromstring(render_floor(f))
    circles = root.findall(f"{NS}circle")
    assert len(circles) == len(triangle_points(2))
    assert sum(c.get("class") == "omitted" for c in circles) == len(f.omitted)
    assert any(l.get("class") == "edge weight-2" for l in root.findall(f"{NS}line"))
    assert root.find(f"{NS}polyline").get("class") == "path"


def test_render_plan_writes_one_file_per_floor(tmp_path):
    plan, _ = find_plan("d2-32-17")
    out = render_plan(plan, tmp_path / "figs")
    assert [p.name for p in out] == [f"d2-32-17-C{i}.svg" for i in (3, 2, 1)]
    out = render_plan(plan, tmp_path / "x.svg")
    assert out[0].name == "x-C3.svg"
    for p in out:
        ET.parse(p)
