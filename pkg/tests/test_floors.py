import pytest
from hypothesis import given, strategies as st

from tropicount.floors import (germ_floors, extra_floors, smooth_floor, floor_by_tag,
                               bounded_edges, horizontal_edges, diagonal_edges,
                               special_vertices, floor_point_count, subdivisions, area2, cell_edges,
                               GermKind, Orientation, VertexMode, NoSuchFloor, CATALOG_TAGS)
from tropicount.lattice import triangle_points

G = GermKind
CATALOG = [(3, 1), (2, 1), (1, 1), (2, 2), (3, 2)]


def all_floors():
    out = [smooth_floor(d) for d in (1, 2, 3)]
    for d, g in CATALOG:
        out += list(germ_floors(d, g)) + list(extra_floors(d, g))
    return out


def test_catalog_tags():
    assert [f.tag for f in germ_floors(3, 1)] == ["31_1", "31_2", "31_3"]
    assert [f.tag for f in germ_floors(2, 1)] == ["21_1", "21_2", "21_3", "21_4", "21_5", "21_7"]
    assert [f.tag for f in germ_floors(1, 1)] == ["11_1"]
    assert [f.tag for f in germ_floors(3, 2)] == ["33_1", "33_4", "33_2", "33_3"]
    assert len(germ_floors(2, 2)) == 19


def test_every_catalog_shape_is_generated():
    seen = {f.tag for d, g in CATALOG for f in germ_floors(d, g)}
    assert seen == set(CATALOG_TAGS.values())


@pytest.mark.parametrize("d,g", [(0, 1), (4, 1), (1, 2), (2, 3)])
def test_unknown_catalog(d, g):
    with pytest.raises(NoSuchFloor):
        germ_floors(d, g)


def test_floor_by_tag():
    assert floor_by_tag("21_4").germs[0].kind == G.HORIZONTAL_W2
    assert floor_by_tag("smooth_conic").degree == 2
    with pytest.raises(NoSuchFloor):
        floor_by_tag("99_9")


@pytest.mark.parametrize("f", all_floors(), ids=lambda f: f.tag)
def test_floor_is_a_subdivision(f):
    d = f.degree
    # cells tile the triangle: twice the areas sum to d^2
    assert sum(area2(c) for c in f.cells) == d * d
    # every unomitted lattice point is used, nodes reduce the point count
    pts = set(triangle_points(d))
    assert f.vertices <= pts
    assert len(f.path) == len(pts) - len(f.omitted)
    assert f.n_points == floor_point_count(d, len(f.omitted))
    # interior edges are shared by exactly two cells
    for e, n in f.edges().items():
        assert n in (1, 2)


@pytest.mark.parametrize("f", all_floors(), ids=lambda f: f.tag)
def test_germs_sit_in_cells(f):
    for g in f.germs:
        for c in g.cells:
            assert tuple(sorted(c)) in {tuple(sorted(x)) for x in f.cells}
        if g.is_string and g.corner is not None:
            assert g.corner in {(0, 0), (f.degree, 0), (0, f.degree)}


def test_point_counts():
    assert floor_point_count(3, 0) == 9
    assert floor_point_count(3, 1) == 8
    assert floor_point_count(2, 2) == 3
    assert floor_point_count(1, 1) == 1


def test_smooth_cubic_features():
    s = smooth_floor(3)
    assert len(s.cells) == 9
    assert all(area2(c) == 1 for c in s.cells)
    assert len(bounded_edges(s)) == len(horizontal_edges(s)) + len(diagonal_edges(s))
    assert all(r.orientation == Orientation.HORIZONTAL for r in horizontal_edges(s))
    # the generic cubic has no vertex avoiding horizontal directions
    assert special_vertices(s, VertexMode.NOT_ADJACENT_HORIZONTAL) == []


def test_weight_two_conic_features():
    f = floor_by_tag("21_4")
    g = f.germs[0]
    (a, b), (c, e) = g.edge
    assert (a, c) == (0, 0) and abs(e - b) == 2
    assert f.n_points == 4
    for r in horizontal_edges(f):
        (a, b), (c, e) = r.dual_edge
        assert a == c and abs(e - b) == 1


def test_special_vertices_avoid_direction():
    for f in all_floors():
        for mode, dd in ((VertexMode.NOT_ADJACENT_HORIZONTAL, (0, 1)),
                         (VertexMode.NOT_ADJACENT_DIAGONAL, (1, -1))):
            for sv in special_vertices(f, mode):
                assert sv.floor_degree == f.degree
                cell = next(c for c in f.cells if sorted(c) == list(sv.cell))
                for p, q in cell_edges(cell):
                    v = (q[0] - p[0], q[1] - p[1])
                    # no cell edge parallel to the dual direction
                    assert v[0] * dd[1] != v[1] * dd[0]


@given(st.sampled_from([1, 2]))
def test_subdivisions_are_unimodular_without_marks(d):
    subs = subdivisions(d)
    assert subs
    for s in subs:
        assert sum(area2(c) for c in s) == d * d


def test_json_shapes():
    for f in all_floors():
        j = f.to_json()
        assert j["degree"] == f.degree
        assert len(j["germs"]) == len(f.germs)
