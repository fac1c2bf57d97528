import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.spatial import ConvexHull

from tropicount.lattice import (triangle_points, simplex_points, normalized_volume,
                                lattice_points_in, affine_rank, lattice_length, Cell,
                                PolytopeComplex, classify_circuit, complexes_intersect,
                                shared_face_bruteforce, check_complex, embed_floor,
                                CircuitClass, IntersectionKind, InvalidDegree, InvalidSlice,
                                MalformedComplex, hull_contains)

coords = st.integers(-4, 4)
points3 = st.tuples(coords, coords, coords)


def test_triangle_and_simplex_counts():
    for d in range(1, 6):
        assert len(triangle_points(d)) == (d + 1) * (d + 2) // 2
        assert len(simplex_points(d)) == (d + 1) * (d + 2) * (d + 3) // 6
    assert triangle_points(2) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]


@pytest.mark.parametrize("bad", [0, -1, 2.5])
def test_triangle_points_rejects_bad_degree(bad):
    with pytest.raises(InvalidDegree):
        triangle_points(bad)


@given(st.lists(points3, min_size=4, max_size=8, unique=True))
def test_normalized_volume_matches_scipy(pts):
    if affine_rank(pts) < 3:
        return
    # oracle: Qhull euclidean volume times 3!
    vol = ConvexHull(np.array(pts, dtype=float)).volume * 6
    assert normalized_volume(pts) == round(vol)


@given(st.lists(points3, min_size=4, max_size=7, unique=True))
def test_lattice_points_match_bruteforce(pts):
    if affine_rank(pts) < 3:
        return
    hull = ConvexHull(np.array(pts, dtype=float))
    lo = np.min(pts, axis=0)
    hi = np.max(pts, axis=0)
    brute = set()
    for q in itertools.product(*(range(lo[i], hi[i] + 1) for i in range(3))):
        if np.all(hull.equations[:, :3] @ np.array(q) + hull.equations[:, 3] <= 1e-9):
            brute.add(q)
    assert set(lattice_points_in(pts)) == brute


def test_lattice_length():
    assert lattice_length((0, 0, 3), (0, 2, 1)) == 2
    assert lattice_length((0, 0, 0), (0, 0, 3)) == 3
    assert lattice_length((0, 0, 0), (1, 2, 3)) == 1


# the three node circuits
PENTATOPE = PolytopeComplex([Cell([(0, 0, 3), (0, 1, 1), (0, 2, 0), (1, 0, 0), (1, 0, 1)])])
BIPYRAMID = PolytopeComplex([
    Cell([(1, 0, 1), (1, 0, 2), (1, 1, 1), (1, 1, 0), (0, 3, 0)]),
    Cell([(1, 0, 1), (1, 0, 2), (1, 1, 1), (1, 1, 0), (2, 0, 0)])])
WEIGHT_TWO = PolytopeComplex([
    Cell([(0, 0, 3), (0, 2, 1), (0, 1, 1), (1, 0, 1)]),
    Cell([(0, 0, 3), (0, 2, 1), (1, 0, 1), (1, 0, 2)])])


def test_classify_examples():
    assert classify_circuit(PENTATOPE) == CircuitClass.PENTATOPE
    assert classify_circuit(BIPYRAMID) == CircuitClass.BIPYRAMID
    assert classify_circuit(WEIGHT_TWO) == CircuitClass.WEIGHT_TWO
    unit = PolytopeComplex([Cell([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])])
    assert classify_circuit(unit) == CircuitClass.NONE
    tagged = PolytopeComplex([Cell([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])], tag="x")
    assert classify_circuit(tagged).kind == CircuitClass.UNSEPARATED
    assert classify_circuit(tagged).tag == "x"


def test_pentatope_needs_empty_circuit():
    # five points with an interior lattice point are not a node pentatope
    fat = PolytopeComplex([Cell([(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2), (2, 2, 2)])])
    assert classify_circuit(fat) != CircuitClass.PENTATOPE


def test_malformed_complex_rejected():
    a = Cell([(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)])
    b = Cell([(1, 0, 0), (3, 0, 0), (1, 2, 0), (1, 0, 2)])
    with pytest.raises(MalformedComplex):
        check_complex([a, b])
    with pytest.raises(MalformedComplex):
        PolytopeComplex([a, b])


def test_intersection_kinds():
    assert complexes_intersect(BIPYRAMID, BIPYRAMID) == IntersectionKind.OVERLAP
    far = BIPYRAMID.translate((5, 5, 5))
    assert complexes_intersect(BIPYRAMID, far) == IntersectionKind.DISJOINT
    touch = PolytopeComplex([Cell([(2, 0, 0), (3, 0, 0), (2, 1, 0), (2, 0, 1)])])
    assert complexes_intersect(BIPYRAMID, touch) == IntersectionKind.VERTEX


@given(st.sampled_from([PENTATOPE, BIPYRAMID, WEIGHT_TWO]),
       st.sampled_from([PENTATOPE, BIPYRAMID, WEIGHT_TWO]),
       st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)))
def test_intersection_symmetric_and_matches_bruteforce(a, b, t):
    b = b.translate(t)
    k = complexes_intersect(a, b)
    assert k == complexes_intersect(b, a)
    assert k == shared_face_bruteforce(a, b)


@given(st.sampled_from([PENTATOPE, BIPYRAMID, WEIGHT_TWO]), points3)
def test_translation_keeps_volume_and_class(cx, t):
    moved = cx.translate(t)
    assert classify_circuit(moved) == classify_circuit(cx)
    assert [c.volume for c in moved.cells] == [c.volume for c in cx.cells]


def test_json_round_trip():
    for cx in (PENTATOPE, BIPYRAMID, WEIGHT_TWO):
        back = PolytopeComplex.from_json(cx.to_json())
        assert back == cx
        assert back.dumps() == cx.dumps()


def test_embed_floor():
    cells = embed_floor([((0, 0), (1, 0), (0, 1))], 1, floor_degree=2)
    assert cells[0].vertices == ((1, 0, 0), (1, 0, 1), (1, 1, 0))
    with pytest.raises(InvalidSlice):
        embed_floor([((0, 0), (1, 0), (0, 1))], 4)
    with pytest.raises(InvalidSlice):
        embed_floor([((0, 0), (1, 0), (0, 1))], 0, floor_degree=2)
    with pytest.raises(InvalidSlice):
        embed_floor([((0, 0), (3, 0), (0, 1))], 1)


def test_hull_contains():
    tet = [(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)]
    assert hull_contains(tet, (1, 0, 0))
    assert not hull_contains(tet, (1, 0, 0), strict=True)
    assert not hull_contains(tet, (2, 2, 0))
