from fractions import Fraction as F

import pytest

from polyvert.decomposition import (SignedDecomposition, check_section_theorem, decompose_cones,
                                    decompose_simplices, geometric_vertices, minimality_check,
                                    vertex_report)
from polyvert.errors import CertificateError, Unbounded
from polyvert.io import gallery_scenes
from polyvert.kernel import OrientedHyperplane, Simplex

from conftest import pt

CORNERS = [pt(0, 0), pt(0, 1), pt(1, 0), pt(1, 1)]
SCENES = {s.name: s for s in gallery_scenes()}


def test_square_vertices(square):
    r = vertex_report(square)
    assert sorted(r.algebraic) == CORNERS and sorted(geometric_vertices(square)) == CORNERS


def test_triple_cone_apex_not_algebraic(fig3):
    r = vertex_report(fig3)
    assert r.algebraic == () and r.geometric == (pt(0, 0),)


def test_lshape_vertices(lshape):
    r = vertex_report(lshape)
    assert len(r.algebraic) == 6 and pt(1, 1) in r.algebraic
    # the arrangement vertex (1, 0) lies inside an edge
    assert pt(1, 0) in r.candidates and pt(1, 0) not in r.geometric


def test_tangent_edges_point_is_geometric_only():
    r = vertex_report(SCENES["fig1"].function)
    assert pt(0, 0, 0) in r.geometric and pt(0, 0, 0) not in r.algebraic


def test_parallel_report_is_identical(lshape):
    a = vertex_report(lshape, workers=1)
    b = vertex_report(lshape, workers=2)
    assert (a.candidates, a.algebraic, a.geometric) == (b.candidates, b.algebraic, b.geometric)


def test_square_simplices(square):
    d = decompose_simplices(square)
    assert d.certificate and [c for c, _ in d.terms] == [1, 1]
    assert d.used_vertices() == CORNERS
    assert minimality_check(square, d)


def test_interval_pair_simplices():
    f = SCENES["interval_pair"].function
    d = decompose_simplices(f)
    assert d.certificate
    assert [(c, s.vertices) for c, s in d.terms] == [(1, (pt(0), pt(1))), (-1, (pt(2), pt(3)))]


def test_schonhardt_simplices():
    f = SCENES["schonhardt"].function
    d = decompose_simplices(f)
    assert d.certificate and d.integer
    assert set(d.used_vertices()) == set(vertex_report(f).algebraic)
    assert len(d.used_vertices()) == 6
    assert minimality_check(f, d)


def test_unbounded_rejected():
    with pytest.raises(Unbounded):
        decompose_simplices(SCENES["quadrant"].function)


def test_bad_decomposition_rejected(square):
    d = SignedDecomposition("simplices", 2, [(F(1), Simplex([pt(0, 0), pt(1, 0), pt(1, 1)]))])
    with pytest.raises(CertificateError):
        minimality_check(square, d)


def test_cones_quadrant_and_halfplane():
    d = decompose_cones(SCENES["quadrant"].function)
    assert len(d.terms) == 1 and d.residual_line_cones == [] and d.certificate
    d = decompose_cones(SCENES["halfplane"].function)
    assert d.terms == [] and len(d.residual_line_cones) == 1
    assert d.certificate and d.residual_transform_zero


def test_cones_square(square):
    d = decompose_cones(square)
    assert len(d.terms) == 4 and d.certificate and d.residual_transform_zero
    assert all(k.canonical().lineality for _, k in d.residual_line_cones)
    assert minimality_check(square, d)


def test_section_checks(square, fig3):
    chk = check_section_theorem(square)
    assert not chk.transform_zero and not chk.all_sections_zero and not chk.violation
    chk = check_section_theorem(fig3)
    assert chk.transform_zero and chk.all_sections_zero and chk.biconditional
    lines = [OrientedHyperplane.make(n, 0) for n in [(0, 1), (1, -1), (1, 0)]]
    chk = check_section_theorem(fig3, lines)
    assert len(chk.sections) == 3 and chk.all_sections_zero


def test_section_check_on_non_facet_planes(square):
    chk = check_section_theorem(square, [OrientedHyperplane.make((1, 1), 5)])
    # f is nonzero but the tested plane misses it: inconclusive, not a violation
    assert not chk.biconditional and not chk.covers_facets and not chk.violation


@pytest.mark.parametrize("name", sorted(SCENES))
def test_gallery_invariants(name):
    f = SCENES[name].function
    r = vertex_report(f)
    assert set(r.algebraic) <= set(r.geometric)
    if f.is_bounded:
        d = decompose_simplices(f)
        assert d.certificate
        assert set(d.used_vertices()) == set(r.algebraic)
        if f.integer_flag:
            assert d.integer
    c = decompose_cones(f)
    assert c.certificate and c.residual_transform_zero
    if f.integer_flag:
        assert c.integer
    assert not check_section_theorem(f).violation


@pytest.mark.parametrize("name", ["cube", "triangle", "random1", "random2", "random3"])
def test_convex_polytopes(name):
    f = SCENES[name].function
    (poly, _), = f.cells
    r = vertex_report(f)
    assert sorted(r.algebraic) == sorted(r.geometric) == sorted(poly.vertices)
