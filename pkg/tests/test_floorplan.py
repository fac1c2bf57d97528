import pytest

from tropicount.census import evaluated, find_plan
from tropicount.floors import GermKind
from tropicount.floorplan import (GermPlacement, placements, allocate_points, total_points,
                                  lift, enumerate_candidates, apply_eliminations,
                                  separation_verdict, is_prospect, unseparated_tag,
                                  consumed_intersections, plan_mult, Separated, Unseparated,
                                  Eliminated, UnsupportedDelta, UNSEPARATED_CLASSES, DEGREES)
from tropicount.lattice import classify_circuit, CircuitClass, complexes_intersect, \
    IntersectionKind

G = GermKind


def test_allocation():
    assert allocate_points(GermPlacement(())) == (9, 5, 2)
    assert allocate_points(GermPlacement((3, 1))) == (8, 5, 1)
    assert allocate_points(GermPlacement((2, 2))) == (9, 3, 2)
    assert allocate_points(GermPlacement((3, 3))) == (7, 5, 2)
    assert all(total_points(p) == 17 for p in placements(2))
    assert all(total_points(p) == 18 for p in placements(1))


def test_placement_validation():
    assert GermPlacement((1, 3)).case == (3, 1)
    assert GermPlacement((2, 3)).label == "(3,2)"
    assert GermPlacement((2, 3)).code == "32"
    for bad in [(1, 1), (4,), (3, 2, 1)]:
        with pytest.raises(ValueError):
            GermPlacement(bad)
    with pytest.raises(UnsupportedDelta):
        placements(3)


def test_lift():
    assert lift(3, (1, 2)) == (0, 1, 2)
    assert lift(1, (0, 1)) == (2, 0, 1)


def test_enumeration_is_deterministic():
    for pl in placements(2):
        a = enumerate_candidates(pl)
        b = enumerate_candidates(pl)
        assert [p.plan_id for p in a] == [p.plan_id for p in b]
        assert [p.describe() for p in a] == [p.describe() for p in b]
        assert len({p.plan_id for p in a}) == len(a)


def test_candidate_counts():
    counts = {pl.label: len(enumerate_candidates(pl)) for pl in placements(2)}
    assert counts == {"(3,1)": 3, "(2,1)": 9, "(3,2)": 27, "(2,2)": 48, "(3,3)": 4}


@pytest.mark.parametrize("pid,rule", [
    ("d2-21-05", "dimension"),
    ("d2-21-09", "right-string-in-conic"),
    ("d2-22-20", "vertical-weight-two"),
    ("d2-22-26", "slope"),
    ("d2-22-28", "string-unalignable"),
    ("d2-22-29", "upward-string-vertical-pull"),
    ("d2-33-02", "slope"),
    ("d2-33-03", "slope"),
])
def test_elimination_examples(pid, rule):
    plan, v = find_plan(pid)
    assert isinstance(v, Eliminated)
    assert v.rule == rule
    assert apply_eliminations(plan) == v


@pytest.mark.parametrize("pid,tag", [
    ("d2-21-01", "prism-with-two-pyramids"),
    ("d2-32-03", "string-on-parallelogram-vertex"),
    ("d2-32-04", "string-on-weight-two-triangle"),
    ("d2-32-13", "shared-tetrahedron"),
    ("d2-32-16", "bipyramid-holds-weight-two-end"),
    ("d2-32-26", "pentatope-on-weight-two-triangle"),
    ("d2-22-01", "trapezoid-bipyramid-inner"),
    ("d2-22-03", "trapezoid-bipyramid-outer"),
    ("d2-33-04", "weight-three-end"),
])
def test_unseparated_examples(pid, tag):
    plan, v = find_plan(pid)
    assert isinstance(v, Unseparated)
    assert v.tag == tag
    assert tag in UNSEPARATED_CLASSES
    assert len(v.complexes) == 1
    assert classify_circuit(v.complexes[0]).tag == tag


def test_separated_example_has_two_node_complexes():
    plan, v = find_plan("d2-32-17")
    assert isinstance(v, Separated)
    classes = sorted(str(classify_circuit(c)) for c in v.complexes)
    assert len(classes) == 2
    assert all(classify_circuit(c) in (CircuitClass.PENTATOPE, CircuitClass.BIPYRAMID,
                                       CircuitClass.WEIGHT_TWO) for c in v.complexes)
    a, b = v.complexes
    assert complexes_intersect(a, b) != IntersectionKind.OVERLAP


def test_separated_complexes_never_overlap(separated2):
    for plan, v in separated2:
        assert len(v.complexes) == 2
        a, b = v.complexes
        assert complexes_intersect(a, b) == complexes_intersect(b, a)
        assert complexes_intersect(a, b) != IntersectionKind.OVERLAP


def test_no_separated_plan_has_conic_right_string():
    for delta in (0, 1, 2):
        for plan, v in evaluated(delta):
            if isinstance(v, Separated):
                assert not any(g.kind == G.RIGHT_STRING or g.corner == (2, 0)
                               for g in plan.floor(2).germs)


def test_verdicts_are_stable():
    for plan, v in evaluated(2):
        assert separation_verdict(plan) == v


def test_unseparated_only_with_two_germs():
    for delta in (0, 1):
        for plan, v in evaluated(delta):
            assert unseparated_tag(plan) is None
            assert not isinstance(v, Unseparated)


def test_consumed_intersections():
    plan, _ = find_plan("d2-32-10")
    g = plan.floor(3).germs[0]
    assert g.kind == G.DIAGONAL_W2
    assert consumed_intersections(plan, 3, g) == 0
    assert plan_mult(plan).complex == 4 * 2
    # the conic's left string eats one intersection of the cubic's weight-two end
    plan, _ = find_plan("d2-32-15")
    assert consumed_intersections(plan, 3, plan.floor(3).germs[0]) == 1
    assert plan_mult(plan).complex == 2 * 2


def test_prospects():
    pros = {"+".join(p.tags) for p, v in evaluated(2) if isinstance(v, Eliminated)
            and is_prospect(p, v)}
    tags = {t.split("+")[1] if t.startswith("smooth_cubic") else t.split("+")[0] for t in pros}
    assert tags == {"22_a", "22_e", "22_f", "22_a'", "22_e'", "22_f'", "33_4", "33_2"}


def test_plan_json():
    plan, _ = find_plan("d2-22-05")
    j = plan.to_json()
    assert j["placement"] == "(2,2)"
    assert j["floors"] == ["smooth_cubic", "22_1b", "smooth_line"]
    assert len(j["alignments"][0]["targets"]) == 2


def test_degrees_order():
    assert DEGREES == (3, 2, 1)
