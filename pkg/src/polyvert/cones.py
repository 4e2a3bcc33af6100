"""Cones, tangent cones of polyhedral functions and line-cone manipulations."""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateCone, DirectionNotGeneric
from .kernel import linalg as la
from .kernel.polyhedron import ConvexPolyhedron, OrientedHyperplane
from .kernel.triangulate import placing_triangulation
from .polyfun import PolyhedralFunction, from_weighted_union


@dataclass(frozen=True)
class Cone:
    """``apex + pos(generators) + span(lineality)``.

    Generators are kept as supplied; :meth:`canonical` gives the irredundant
    description (extreme rays plus a lineality basis).
    """

    apex: tuple
    generators: tuple = ()
    lineality: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "apex", la.vec(self.apex))
        object.__setattr__(self, "generators", tuple(la.vec(g) for g in self.generators))
        object.__setattr__(self, "lineality", tuple(la.vec(l) for l in self.lineality))

    @classmethod
    def from_halfspaces(cls, apex, normals):
        """Cone ``{x : <n, x - apex> <= 0 for n in normals}``."""
        apex = la.vec(apex)
        poly = ConvexPolyhedron.from_halfspaces(
            len(apex), [(n, la.dot(n, apex)) for n in map(la.vec, normals)])
        return cls(apex, poly.rays, poly.lineality)

    @property
    def ambient_dim(self):
        return len(self.apex)

    def polyhedron(self):
        return ConvexPolyhedron.from_generators([self.apex], self.generators, self.lineality)

    def canonical(self):
        p = self.polyhedron()
        return Cone(self.apex, p.rays, p.lineality)

    @property
    def dim(self):
        return la.rank(list(self.generators) + list(self.lineality))

    @property
    def is_full_dimensional(self):
        return self.dim == self.ambient_dim

    @property
    def is_simplicial(self):
        return (not self.lineality and len(self.generators) == self.ambient_dim
                and self.is_full_dimensional)

    def shifted(self, v):
        return Cone(la.add(self.apex, v), self.generators, self.lineality)

    def at_origin(self):
        return Cone(la.zero(self.ambient_dim), self.generators, self.lineality)


@dataclass(frozen=True)
class PolyconicalFunction:
    """``sum coeff [cone]`` over cones sharing one apex."""

    apex: tuple
    terms: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "apex", la.vec(self.apex))
        terms = tuple((la.to_fraction(c), k) for c, k in self.terms)
        for _, k in terms:
            if k.apex != self.apex:
                raise ValueError("all cones of a polyconical function share its apex")
        object.__setattr__(self, "terms", terms)

    @property
    def ambient_dim(self):
        return len(self.apex)

    def to_function(self):
        return from_weighted_union([(c, k.polyhedron()) for c, k in self.terms],
                                   ambient_dim=self.ambient_dim)

    def __add__(self, other):
        if other.apex != self.apex:
            raise ValueError("apices differ")
        return PolyconicalFunction(self.apex, self.terms + other.terms)

    def scaled(self, c):
        c = la.to_fraction(c)
        return PolyconicalFunction(self.apex, tuple((c * a, k) for a, k in self.terms))


def tangent_cone(f, v):
    """``tcone(f, v) = sum_i w_i tcone(P_i, v)`` over cells whose closure holds ``v``."""
    v = la.vec(v)
    terms = []
    for cell in f.complex.cells_around(v):
        w = f.weights.get(cell.signs)
        if not w:
            continue
        normals = [n for n, b in cell.polyhedron.halfspaces if la.dot(n, v) == b]
        terms.append((w, Cone.from_halfspaces(v, normals)))
    return PolyconicalFunction(v, tuple(terms))


def tangent_cone_function(f, v):
    """Tangent cone of ``f`` at ``v`` as a :class:`PolyhedralFunction`.

    Uses only the hyperplanes through ``v``; the weight of a local cell is
    the weight of the cell of ``f`` entered when leaving ``v`` into it.
    """
    v = la.vec(v)
    hyps = f.complex.hyperplanes
    base = [h.value(v) for h in hyps]
    local = [OrientedHyperplane(h.normal, la.dot(h.normal, v)) for h, b in zip(hyps, base) if b == 0]

    def weight(x):
        d = la.sub(x, v)
        s = []
        for h, b in zip(hyps, base):
            t = b if b != 0 else la.dot(h.normal, d)
            s.append(1 if t > 0 else -1)
        return f.weights.get(tuple(s), Fraction(0))

    return PolyhedralFunction.from_cells(f.ambient_dim, local, weight)


def is_line_cone(c):
    """True iff the convex cone ``c`` is invariant under some line direction."""
    return bool(c.canonical().lineality)


def stabilizer_rank(g):
    """Rank of the normals of the facet hyperplanes of ``g`` (a polyhedral function)."""
    normals = [h.normal for h in g.hyperplanes]
    return la.rank(normals) if normals else 0


def support_is_line_cone(f, v):
    """Whether the support of ``tcone(f, v)`` is a union of parallel lines.

    The support indicator is invariant under translation by ``u`` iff ``u`` lies
    in every facet hyperplane of it, so the support is a line-cone iff those
    hyperplane normals do not span the whole space.
    """
    tc = tangent_cone_function(f, v)
    supp = PolyhedralFunction.from_cells(
        f.ambient_dim, tc.hyperplanes, lambda x: 1 if tc.generic_value(x) != 0 else 0)
    return stabilizer_rank(supp) < f.ambient_dim


def triangulate_cone(cone):
    """Split a cone into simplicial cones sharing its apex.

    Line-cones are returned unchanged (their lineality is the tag).  Pointed
    cones get the placing triangulation of their generators in the order
    given, so every piece has linearly independent generators.
    """
    if cone.canonical().lineality:
        return [cone]
    gens = cone.generators
    pieces = placing_triangulation(gens)
    return [Cone(cone.apex, tuple(gens[i] for i in p)) for p in pieces]


@dataclass(frozen=True)
class StarReduction:
    """``[C] = sign [reflected] + sum eps_i [D_i]`` for a simplicial cone ``C``."""

    sign: int
    reflected: Cone
    corrections: tuple

    def pieces(self):
        return ((self.sign, self.reflected),) + self.corrections


def star_reduction(c, direction):
    """Reflect every generator with ``<direction, w> < 0``, in index order.

    Each flip uses ``[pos(w, W)] = [pos(w, -w, W)] - [pos(-w, W)]``: the
    first cone on the right is a line-cone (lineality ``w``).
    """
    direction = la.vec(direction)
    if not c.is_simplicial:
        raise DegenerateCone("star reduction needs a simplicial cone")
    vals = [la.dot(direction, w) for w in c.generators]
    bad = [w for w, s in zip(c.generators, vals) if s == 0]
    if bad:
        raise DirectionNotGeneric(f"direction is orthogonal to generator {bad[0]}")
    gens = list(c.generators)
    sign = 1
    corrections = []
    for j, s in enumerate(vals):
        if s > 0:
            continue
        others = gens[:j] + gens[j + 1:]
        corrections.append((sign, Cone(c.apex, tuple(others), (gens[j],))))
        gens[j] = la.neg(gens[j])
        sign = -sign
    return StarReduction(sign, Cone(c.apex, tuple(gens)), tuple(corrections))


def brianchon_gram(p):
    """Signed tangent cones of the faces of ``p`` that are bounded modulo lineality.

    Returns ``[(sign, Cone)]`` with ``sign = (-1)^(dim F - dim lineality)``;
    cones sit at a relative-interior witness of their face.  For a polytope
    this is the classical relation over all nonempty faces; a polyhedron of
    lower dimension than its ambient space is measure zero and gives ``[]``.
    """
    if p.is_empty or p.dim < p.ambient_dim:
        return []
    lin = len(p.lineality)
    facet_normals = [n for n, _ in p.facets]
    out = []
    for face in p.faces():
        if face.rays:
            continue
        normals = [facet_normals[i] for i in sorted(face.facets)]
        cone = Cone.from_halfspaces(face.witness, normals)
        out.append((Fraction((-1) ** (face.dim - lin)), cone))
    return out


def dual_cone(c):
    """``{y : <x, y> >= 0 for all x in c - apex}`` as a cone at the origin."""
    d = c.ambient_dim
    hs = [(la.neg(g), Fraction(0)) for g in c.generators]
    for l in c.lineality:
        hs.append((l, Fraction(0)))
        hs.append((la.neg(l), Fraction(0)))
    poly = ConvexPolyhedron.from_halfspaces(d, hs)
    return Cone(la.zero(d), poly.rays, poly.lineality)


def cones_function(terms, ambient_dim):
    """Polyhedral function of a weighted list of cones with arbitrary apices."""
    return from_weighted_union([(c, k.polyhedron()) for c, k in terms], ambient_dim=ambient_dim)
