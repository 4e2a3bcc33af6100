from fractions import Fraction as F

import pytest

from polyvert.cones import (Cone, brianchon_gram, cones_function, dual_cone, is_line_cone,
                            star_reduction, support_is_line_cone, tangent_cone, triangulate_cone)
from polyvert.errors import DegenerateCone, DirectionNotGeneric
from polyvert.kernel import ConvexPolyhedron
from polyvert.polyfun import ae_equal, ae_equal_pieces, from_weighted_union

from conftest import box, pt

Q = Cone((0, 0), [(1, 0), (0, 1)])


def _same(a, b):
    return ae_equal(cones_function([(1, a)], a.ambient_dim), cones_function([(1, b)], b.ambient_dim))


def test_tangent_cone_at_corner(square):
    tc = tangent_cone(square, pt(0, 0))
    (c, k), = tc.terms
    assert c == 1 and _same(k, Q)


def test_tangent_cone_at_interior_point(square):
    (c, k), = tangent_cone(square, pt(F(1, 2), F(1, 2))).terms
    assert c == 1 and len(k.canonical().lineality) == 2


def test_tangent_cone_at_reflex_corner(lshape):
    tc = tangent_cone(lshape, pt(1, 1))
    assert [c for c, _ in tc.terms] == [1, 1, 1]
    whole = Cone((1, 1), [], [(1, 0), (0, 1)])
    open_quadrant = Cone((1, 1), [(1, 0), (0, 1)])
    assert ae_equal(tc.to_function(), cones_function([(1, whole), (-1, open_quadrant)], 2))


def test_line_cones():
    assert is_line_cone(Cone((0, 0), [(1, 0), (-1, 0), (0, 1)]))
    assert not is_line_cone(Q)
    assert is_line_cone(Cone((0, 0), [], [(1, 0), (0, 1)]))


def test_triangulate_cone():
    assert [k.generators for k in triangulate_cone(Q)] == [Q.generators]
    parts = triangulate_cone(Cone((0, 0), [(1, 0), (1, 1), (0, 1)]))
    assert [k.generators for k in parts] == [(pt(1, 0), pt(1, 1)), (pt(1, 1), pt(0, 1))]
    half = Cone((0, 0), [(1, 0), (-1, 0), (0, 1)])
    assert triangulate_cone(half) == [half]


def _check_reduction(c, v):
    red = star_reduction(c, v)
    pieces = [(e, k.polyhedron()) for e, k in red.pieces()]
    assert ae_equal_pieces(cones_function([(1, c)], c.ambient_dim), pieces)
    assert all(sum(a * b for a, b in zip(v, w)) > 0 for w in red.reflected.generators)
    assert all(is_line_cone(d) for _, d in red.corrections)
    return red


def test_star_reduction_trivial():
    red = _check_reduction(Q, pt(1, 1))
    assert red.sign == 1 and red.reflected == Q and red.corrections == ()


def test_star_reduction_one_flip():
    red = _check_reduction(Cone((0, 0), [(1, 0), (-1, 1)]), pt(1, 0))
    assert red.sign == -1
    assert red.reflected.generators == (pt(1, 0), pt(1, -1))
    assert len(red.corrections) == 1


def test_star_reduction_two_flips():
    red = _check_reduction(Cone((0, 0), [(-1, 0), (0, -1)]), pt(1, 1))
    assert red.sign == 1 and red.reflected.generators == Q.generators
    assert len(red.corrections) == 2


def test_star_reduction_errors():
    with pytest.raises(DirectionNotGeneric):
        star_reduction(Q, pt(1, 0))
    with pytest.raises(DegenerateCone):
        star_reduction(Cone((0, 0), [(1, 0)]), pt(1, 1))


def test_brianchon_gram_interval():
    bg = brianchon_gram(box([0], [1]))
    assert sorted(s for s, _ in bg) == [-1, 1, 1]
    assert ae_equal_pieces(from_weighted_union([(1, box([0], [1]))]),
                           [(s, k.polyhedron()) for s, k in bg])


def test_brianchon_gram_triangle():
    t = ConvexPolyhedron.from_generators([pt(0, 0), pt(1, 0), pt(0, 1)])
    bg = brianchon_gram(t)
    signs = sorted(s for s, _ in bg)
    assert signs == [-1, -1, -1, 1, 1, 1, 1]
    assert ae_equal_pieces(from_weighted_union([(1, t)]), [(s, k.polyhedron()) for s, k in bg])


def test_brianchon_gram_point_and_unbounded():
    assert brianchon_gram(ConvexPolyhedron.from_generators([pt(1, 1)])) == []
    strip = ConvexPolyhedron.from_halfspaces(2, [((0, 1), 1), ((0, -1), 0)])
    bg = brianchon_gram(strip)
    assert ae_equal_pieces(from_weighted_union([(1, strip)]), [(s, k.polyhedron()) for s, k in bg])


def test_dual_cones():
    assert _same(dual_cone(Q), Q)
    half = dual_cone(Cone((0, 0), [(0, 1)], [(1, 0)]))
    assert half.canonical().generators == (pt(0, 1),) and not half.canonical().lineality
    full = dual_cone(Cone((0, 0), [], [(1, 0), (0, 1)]))
    assert not full.generators and not full.lineality


def test_geometric_status(square, fig3):
    assert not support_is_line_cone(square, pt(0, 0))
    assert not support_is_line_cone(fig3, pt(0, 0))
    half = cones_function([(1, Cone((0, 0), [(0, 1)], [(1, 0)]))], 2)
    assert support_is_line_cone(half, pt(0, 0))
