"""Vertex detection and the two canonical decompositions."""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .cones import (brianchon_gram, cones_function, star_reduction, support_is_line_cone,
                    tangent_cone, triangulate_cone)
from .errors import CertificateError, PolyvertError, Unbounded
from .kernel import linalg as la
from .kernel.triangulate import Simplex
from .polyfun import ae_equal_pieces, facets, signed_section
from .transform import TransformSum, is_zero, transform


@dataclass
class VertexReport:
    candidates: tuple
    algebraic: tuple
    geometric: tuple
    transforms: dict = field(repr=False)


def _vertex_status(args):
    f, v, seed = args
    s = transform(tangent_cone(f, v))
    algebraic = not is_zero(s, seed=seed)
    geometric = algebraic or not support_is_line_cone(f, v)
    return algebraic, geometric, s


def _workers(workers):
    if workers is None:
        workers = int(os.environ.get("POLYVERT_WORKERS", "1") or 1)
    return max(1, workers)


def _map(fn, items, workers):
    items = list(items)
    if _workers(workers) == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=_workers(workers)) as ex:
        return list(ex.map(fn, items))


def vertex_report(f, workers=None, seed=0):
    """Classify every arrangement vertex of ``f``.

    A candidate is algebraic iff the transform of its tangent cone is not
    zero; it is geometric iff the support of the tangent cone is not a union
    of parallel lines.  Every algebraic vertex is geometric.
    """
    cands = tuple(f.candidate_vertices())
    results = _map(_vertex_status, [(f, v, seed) for v in cands], workers)
    alg = tuple(v for v, r in zip(cands, results) if r[0])
    geo = tuple(v for v, r in zip(cands, results) if r[1])
    transforms = {v: r[2] for v, r in zip(cands, results)}
    return VertexReport(cands, alg, geo, transforms)


def algebraic_vertices(f, workers=None, seed=0):
    return vertex_report(f, workers, seed)


def geometric_vertices(f):
    return [v for v in f.candidate_vertices() if not support_is_line_cone(f, v)]


def is_algebraic_vertex(f, v):
    return not is_zero(transform(tangent_cone(f, la.vec(v))))


def is_geometric_vertex(f, v):
    return not support_is_line_cone(f, la.vec(v))


# -- signed simplices ----------------------------------------------------------------


@dataclass
class SignedDecomposition:
    """Integer-or-rational combination of simplices or cones reproducing ``f``.

    ``terms`` holds ``(coeff, Simplex)`` for kind ``"simplices"`` and
    ``(coeff, Cone)`` for kind ``"cones"``; in the latter case the cone
    terms are the tangent cones at the algebraic vertices and
    ``residual_line_cones`` the remaining line-cones.
    """

    kind: str
    ambient_dim: int
    terms: list
    residual_line_cones: list = field(default_factory=list)
    certificate: bool = False
    residual_transform_zero: bool = None

    def pieces(self):
        if self.kind == "simplices":
            return [(c, s.polyhedron()) for c, s in self.terms]
        return [(c, k.polyhedron()) for c, k in list(self.terms) + list(self.residual_line_cones)]

    @property
    def integer(self):
        cs = [c for c, _ in self.terms] + [c for c, _ in self.residual_line_cones]
        return all(Fraction(c).denominator == 1 for c in cs)

    def used_vertices(self):
        """Simplex vertices, or apices of the pointed cone terms."""
        if self.kind == "simplices":
            return sorted({v for _, s in self.terms for v in s.vertices})
        return sorted({k.apex for _, k in self.terms if not k.canonical().lineality})


def _merge_simplices(terms):
    acc = {}
    for c, s in terms:
        key = tuple(sorted(s.vertices))
        acc[key] = acc.get(key, Fraction(0)) + c
    return [(c, Simplex(k)) for k, c in sorted(acc.items()) if c]


def _simplex_terms(f, seed):
    d = f.ambient_dim
    if f.is_zero:
        return []
    if d == 1:
        return [(w, Simplex(poly.vertices)) for poly, w in f.cells]
    alg = vertex_report(f, workers=1, seed=seed).algebraic
    if not alg:
        raise PolyvertError("nonzero function with bounded support has no algebraic vertex")
    apex = alg[0]
    out = []
    for res in facets(f, base_point=apex):
        if res.hyperplane.value(apex) == 0:
            # the pyramid over this facet is flat
            continue
        for beta, base in _simplex_terms(res.section, seed):
            lifted = [res.chart.lift(u) for u in base.vertices]
            out.append((beta, Simplex([apex] + lifted)))
    return out


def decompose_simplices(f, verify=True, seed=0):
    """Signed simplices with vertices among the algebraic vertices of ``f``.

    Induction on the dimension: with the lexicographically smallest algebraic
    vertex ``p`` as apex, ``f`` is the sum over its facets ``f_h`` (oriented
    towards ``p``) of the pyramids over ``f_h``; each facet is decomposed in
    its own chart and coned to ``p``.
    """
    if not f.is_bounded:
        raise Unbounded("signed simplex decomposition needs bounded support")
    terms = _merge_simplices(_simplex_terms(f, seed))
    dec = SignedDecomposition("simplices", f.ambient_dim, terms)
    if verify:
        dec.certificate = verify_decomposition(f, dec)
    return dec


# -- tangent cones plus line-cones -----------------------------------------------------


def _generic_direction(vectors, d):
    k = 1
    while True:
        u = tuple(Fraction(k ** i) for i in range(d))
        if all(la.dot(u, w) != 0 for w in vectors):
            return u
        k += 1


def _pointed_part_as_line_cones(v, pieces, d):
    """Line-cones equal a.e. to ``sum c [C]`` for pointed cones at a
    non-algebraic vertex ``v``, via reflection of the simplicial pieces."""
    simplicial = []
    for c, cone in pieces:
        for k in triangulate_cone(cone.canonical()):
            if k.is_simplicial:
                simplicial.append((c, k))
    u = _generic_direction([w for _, k in simplicial for w in k.generators], d)
    lines, leftover = [], []
    for c, k in simplicial:
        red = star_reduction(k, u)
        leftover.append((c * red.sign, red.reflected))
        lines.extend((c * e, D) for e, D in red.corrections)
    if not cones_function(leftover, d).is_zero:
        raise PolyvertError(f"reflected cones at {v} do not cancel")
    return lines


def decompose_cones(f, verify=True, seed=0):
    """``f = sum over algebraic v of tcone(f, v) + sum of line-cones``.

    Every weighted arrangement cell is expanded by Brianchon-Gram; face cones
    of positive dimension are line-cones.  At algebraic vertices the vertex
    cones are completed to the full tangent cone (the difference is
    line-cones); at the remaining vertices the vertex cones are rewritten as
    line-cones by reflecting them into a common half-space.
    """
    d = f.ambient_dim
    alg = set(vertex_report(f, workers=1, seed=seed).algebraic)
    residual = []
    vertex_cones = {}
    for poly, w in f.cells:
        for sign, cone in brianchon_gram(poly):
            if cone.lineality:
                residual.append((w * sign, cone))
            else:
                vertex_cones.setdefault(cone.apex, []).append((w * sign, cone))
    terms = []
    for v in sorted(alg):
        tc = tangent_cone(f, v)
        terms.extend(tc.terms)
        for c, cone in tc.terms:
            if cone.lineality:
                residual.append((-c, cone))
    for v in sorted(vertex_cones):
        if v not in alg:
            residual.extend(_pointed_part_as_line_cones(v, vertex_cones[v], d))
    dec = SignedDecomposition("cones", d, terms, residual)
    if verify:
        dec.certificate = verify_decomposition(f, dec)
        dec.residual_transform_zero = residual_transform_zero(dec, seed)
    return dec


def residual_transform_zero(dec, seed=0):
    """Transform of the residual, recomputed from its cells, is zero."""
    if not dec.residual_line_cones:
        return True
    g = cones_function(dec.residual_line_cones, dec.ambient_dim)
    return is_zero(transform(g, method="cones"), seed=seed)


def verify_decomposition(f, dec):
    """Exact a.e. check of ``f == sum of the decomposition``."""
    if dec.ambient_dim != f.ambient_dim:
        return False
    return ae_equal_pieces(f, dec.pieces())


def minimality_check(f, dec):
    """Whether the decomposition uses every algebraic vertex of ``f``.

    The certificate is recomputed first; a decomposition that does not
    reproduce ``f`` is rejected with :class:`CertificateError`.
    """
    if not verify_decomposition(f, dec):
        raise CertificateError("decomposition does not reproduce the function")
    used = set(dec.used_vertices())
    return set(vertex_report(f, workers=1).algebraic) <= used


# -- signed sections -------------------------------------------------------------------


@dataclass
class SectionCheck:
    transform_zero: bool
    sections: list
    covers_facets: bool

    @property
    def all_sections_zero(self):
        return all(z for _, z in self.sections)

    @property
    def biconditional(self):
        return self.transform_zero == self.all_sections_zero

    @property
    def violation(self):
        """A counterexample to the section theorem on the tested set."""
        if self.transform_zero and not self.all_sections_zero:
            return True
        return self.covers_facets and not self.biconditional


def section_transform(f, h):
    res = signed_section(f, h)
    g = res.section
    if g.is_zero:
        return TransformSum(g.ambient_dim)
    return transform(g)


def check_section_theorem(f, hyperplanes=None, seed=0):
    """Compare ``transform(f) == 0`` with the vanishing of the transforms of
    the signed sections by ``hyperplanes`` (default: the facet hyperplanes)."""
    hyps = list(f.hyperplanes) if hyperplanes is None else list(hyperplanes)
    fz = is_zero(transform(f), seed=seed)
    sections = [(h, is_zero(section_transform(f, h), seed=seed)) for h in hyps]
    keys = {h.key for h in hyps}
    covers = all(h.key in keys for h in f.hyperplanes)
    return SectionCheck(fz, sections, covers)
