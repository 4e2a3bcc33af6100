from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyvert.errors import LowDimensional, NonRational
from polyvert.kernel import (ConvexPolyhedron, Empty, OrientedHyperplane, Simplex, arrangement,
                             dual_description, interior_point, placing_triangulation,
                             simplex_volume, triangulate_polytope)
from polyvert.kernel import linalg as la
from polyvert.kernel.ddm import HomCone

from conftest import box, pt

small = st.integers(-4, 4)


def test_to_fraction_rejects_floats():
    assert la.to_fraction("3/6") == F(1, 2)
    for bad in (0.5, "0.5", "1e3", True):
        with pytest.raises((TypeError, ValueError, NonRational)):
            la.to_fraction(bad)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_is_multiplicative(a, b):
    ab = [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert la.det(ab) == la.det(a) * la.det(b)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_nullity(rows):
    ns = la.nullspace(rows, 4)
    assert la.rank(rows) + len(ns) == 4
    for v in ns:
        assert all(la.dot(r, v) == 0 for r in rows)


def test_canonical_direction():
    v, lam = la.canonical_direction(pt(0, -2, 4))
    assert v == (0, 1, -2) and lam == -2


def test_square_vertices():
    sq = ConvexPolyhedron.from_halfspaces(2, [((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)])
    assert list(sq.vertices) == [pt(0, 0), pt(0, 1), pt(1, 0), pt(1, 1)]
    assert not sq.rays and sq.is_bounded


def test_quadrant_halfspaces():
    q = ConvexPolyhedron.from_generators([pt(0, 0)], [pt(1, 0), pt(0, 1)])
    assert sorted(q.facets) == sorted([(pt(-1, 0), 0), (pt(0, -1), 0)])


def test_infeasible_is_empty():
    p = ConvexPolyhedron.from_halfspaces(1, [((1,), 0), ((-1,), -1)])
    assert isinstance(dual_description(p), Empty)


def test_lineality_is_reported():
    strip = ConvexPolyhedron.from_halfspaces(2, [((0, 1), 1), ((0, -1), 0)])
    assert len(strip.lineality) == 1 and not strip.is_pointed
    # generator points represent the minimal faces modulo the lineality space
    assert list(strip.vertices) == [pt(0, 0), pt(0, 1)]


def test_ddm_matches_box_count():
    c = HomCone.from_constraints(4, [(1, 0, 0, -1), (-1, 0, 0, 0), (0, 1, 0, -1), (0, -1, 0, 0),
                                     (0, 0, 1, -1), (0, 0, -1, 0), (0, 0, 0, -1)])
    assert len(c.rays) == 8 and not c.lines


def test_arrangement_axis_lines():
    hs = [OrientedHyperplane.make((1, 0), 0), OrientedHyperplane.make((0, 1), 0)]
    cx = arrangement(hs, 2)
    assert len(cx.cells) == 4 and list(cx.vertices) == [pt(0, 0)]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_generic_lines_cell_count(n):
    # lines y = k x + k^2 are in general position
    hs = [OrientedHyperplane.make((k, -1), -k * k) for k in range(1, n + 1)]
    cx = arrangement(hs, 2)
    assert len(cx.cells) == 1 + n + comb(n, 2)
    assert len(cx.vertices) == comb(n, 2)


def test_empty_arrangement():
    cx = arrangement([], 3)
    assert len(cx.cells) == 1 and not cx.vertices


def test_cells_cover_space():
    hs = [OrientedHyperplane.make((1, 0, 0), 0), OrientedHyperplane.make((1, 1, 1), 1),
          OrientedHyperplane.make((0, 1, -1), 0)]
    cx = arrangement(hs, 3)
    # three generic planes through a common point: 8 octant-like cells
    assert len(cx.cells) == 8
    for c in cx.cells:
        assert cx.locate(c.witness) == c.signs


def test_square_triangulation():
    ts = triangulate_polytope(box([0, 0], [1, 1]))
    assert len(ts) == 2
    assert all(pt(0, 0) in t.vertices for t in ts)


def test_cube_triangulation():
    ts = triangulate_polytope(box([0, 0, 0], [1, 1, 1]))
    assert len(ts) == 6
    assert sum(simplex_volume(t) for t in ts) == 1


def test_simplex_triangulates_to_itself():
    s = ConvexPolyhedron.from_generators([pt(0, 0, 0), pt(1, 0, 0), pt(0, 2, 0), pt(0, 0, 3)])
    ts = triangulate_polytope(s)
    assert len(ts) == 1 and set(ts[0].vertices) == set(s.vertices)


def test_low_dimensional_triangulation_rejected():
    seg = ConvexPolyhedron.from_generators([pt(0, 0), pt(1, 1)])
    with pytest.raises(LowDimensional):
        triangulate_polytope(seg)


def test_placing_triangulation_split():
    assert placing_triangulation([pt(1, 0), pt(1, 1), pt(0, 1)]) == [(0, 1), (1, 2)]


def test_interior_points():
    assert interior_point(box([0], [1])) == pt(F(1, 2))
    q = ConvexPolyhedron.from_halfspaces(2, [((-1, 0), 0), ((0, -1), 0)])
    assert interior_point(q) == pt(1, 1)
    seg = ConvexPolyhedron.from_generators([pt(0, 0), pt(1, 1)])
    assert interior_point(seg) == pt(F(1, 2), F(1, 2))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(small, small, small), min_size=4, max_size=9, unique=True))
def test_hull_volume_matches_triangulation(points):
    p = ConvexPolyhedron.from_generators([pt(*x) for x in points])
    if p.dim < 3:
        return
    vol = sum(simplex_volume(t) for t in triangulate_polytope(p))
    assert vol == p.volume() > 0
    for v in p.vertices:
        assert p.contains(v)


def test_face_counts_of_cube():
    dims = [f.dim for f in box([0, 0, 0], [1, 1, 1]).faces()]
    assert [dims.count(k) for k in range(4)] == [8, 12, 6, 1]


def test_simplex_degeneracy():
    assert Simplex([pt(0, 0), pt(1, 1), pt(2, 2)]).is_degenerate()
    assert not Simplex([pt(0, 0), pt(1, 0), pt(0, 1)]).is_degenerate()
