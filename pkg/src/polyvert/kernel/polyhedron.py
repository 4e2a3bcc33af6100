"""Oriented hyperplanes and convex polyhedra with dual descriptions."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ..errors import DimensionMismatch, EmptyPolyhedron
from . import linalg as la
from .ddm import HomCone


@dataclass(frozen=True)
class OrientedHyperplane:
    """The plane ``{x : <normal, x> = offset}`` with a chosen positive side.

    ``normal`` is stored scaled so its first nonzero entry is 1; the positive
    side is ``{orientation * (<normal, x> - offset) > 0}``.  Two instances
    describe the same unoriented plane iff their ``key`` agree.
    """

    normal: tuple
    offset: Fraction
    orientation: int = 1

    @classmethod
    def make(cls, normal, offset=0):
        """Plane ``<normal, x> = offset`` whose positive side is ``<normal, x> > offset``."""
        normal = la.vec(normal)
        offset = la.to_fraction(offset)
        if la.is_zero(normal):
            raise ValueError("hyperplane normal must be nonzero")
        lead = next(a for a in normal if a != 0)
        return cls(la.scale(1 / lead, normal), offset / lead, 1 if lead > 0 else -1)

    @property
    def dim(self):
        return len(self.normal)

    @property
    def key(self):
        return (self.normal, self.offset)

    @property
    def signed_normal(self):
        """Normal pointing into the positive side."""
        return la.scale(self.orientation, self.normal)

    def value(self, x):
        return la.dot(self.normal, x) - self.offset

    def side(self, x):
        v = self.value(x)
        return 0 if v == 0 else self.orientation * (1 if v > 0 else -1)

    def flipped(self):
        return OrientedHyperplane(self.normal, self.offset, -self.orientation)

    def unoriented(self):
        return OrientedHyperplane(self.normal, self.offset, 1)

    def oriented_towards(self, p):
        """Same plane, oriented so that ``p`` is on the positive side (``p`` off the plane)."""
        v = self.value(p)
        if v == 0:
            raise ValueError("point lies on the hyperplane")
        return OrientedHyperplane(self.normal, self.offset, 1 if v > 0 else -1)

    def chart(self):
        """Rational affine chart ``u -> origin + sum u_j t_j`` of the plane.

        The pivot is the first nonzero normal coordinate ``k`` (where the
        normal equals 1); tangents are ``e_j - n_j e_k`` for ``j != k``.
        """
        d = self.dim
        k = next(i for i, a in enumerate(self.normal) if a != 0)
        origin = tuple(self.offset if i == k else Fraction(0) for i in range(d))
        tangents = []
        for j in range(d):
            if j == k:
                continue
            t = [Fraction(0)] * d
            t[j] = Fraction(1)
            t[k] = -self.normal[j]
            tangents.append(tuple(t))
        return HyperplaneChart(origin, tuple(tangents), k)


@dataclass(frozen=True)
class HyperplaneChart:
    origin: tuple
    tangents: tuple
    pivot: int

    def lift(self, u):
        x = self.origin
        for c, t in zip(u, self.tangents):
            x = la.add(x, la.scale(c, t))
        return x

    def project(self, x):
        # tangent j has a unit entry in coordinate j (skipping the pivot)
        return tuple(a for i, a in enumerate(x) if i != self.pivot)

    def pull_back(self, normal, offset):
        """Restrict ``<normal, x> <= offset`` to chart coordinates.

        Returns ``(normal', offset')``; ``normal'`` is zero when the constraint
        is parallel to the plane.
        """
        n2 = tuple(la.dot(normal, t) for t in self.tangents)
        return n2, offset - la.dot(normal, self.origin)


class Empty:
    """Marker returned by :func:`dual_description` for an infeasible system."""

    def __init__(self, ambient_dim):
        self.ambient_dim = ambient_dim

    is_empty = True

    def __repr__(self):
        return f"Empty(ambient_dim={self.ambient_dim})"

    def __bool__(self):
        return False


def _hom_row(normal, offset):
    return la.primitive(tuple(normal) + (-offset,)) if not (la.is_zero(normal) and offset == 0) \
        else tuple(0 for _ in range(len(normal) + 1))


class ConvexPolyhedron:
    """Intersection of halfspaces ``<n, x> <= b`` with its generator description.

    Build with :meth:`from_halfspaces` or :meth:`from_generators`; the missing
    description is computed lazily by double description.  Instances are
    treated as immutable values.
    """

    def __init__(self, ambient_dim, halfspaces=None, vertices=None, rays=(),
                 lineality=(), _hom=None):
        self.ambient_dim = ambient_dim
        self._halfspaces = None if halfspaces is None else tuple(
            (la.vec(n), la.to_fraction(b)) for n, b in halfspaces)
        self._vrep = None
        self._hom = _hom
        if vertices is not None:
            self._given_v = (tuple(la.vec(v) for v in vertices), tuple(la.vec(r) for r in rays),
                             tuple(la.vec(l) for l in lineality))
        else:
            self._given_v = None
        if self._halfspaces is None and self._given_v is None:
            raise ValueError("a polyhedron needs halfspaces or vertices")
        for n, _ in self._halfspaces or ():
            if len(n) != ambient_dim:
                raise DimensionMismatch(f"halfspace normal of length {len(n)} in dimension {ambient_dim}")
        for group in self._given_v or ():
            for v in group:
                if len(v) != ambient_dim:
                    raise DimensionMismatch(f"generator of length {len(v)} in dimension {ambient_dim}")

    @classmethod
    def from_halfspaces(cls, ambient_dim, halfspaces):
        return cls(ambient_dim, halfspaces=halfspaces)

    @classmethod
    def from_generators(cls, vertices, rays=(), lineality=(), ambient_dim=None):
        if ambient_dim is None:
            ambient_dim = len(next(iter(vertices)))
        return cls(ambient_dim, vertices=vertices, rays=rays, lineality=lineality)

    @classmethod
    def box(cls, lows, highs):
        d = len(lows)
        hs = []
        for i in range(d):
            e = tuple(Fraction(int(i == j)) for j in range(d))
            hs.append((e, la.to_fraction(highs[i])))
            hs.append((la.neg(e), -la.to_fraction(lows[i])))
        return cls.from_halfspaces(d, hs)

    # -- double description -------------------------------------------------

    def _hom_from_halfspaces(self):
        d = self.ambient_dim
        rows = [_hom_row(n, b) for n, b in self._halfspaces]
        rows.append(tuple(0 for _ in range(d)) + (-1,))
        return HomCone.from_constraints(d + 1, rows)

    def _vrep_from_hom(self, hom):
        d = self.ambient_dim
        pts, rays = [], []
        for r in hom.rays:
            t = r[d]
            if t > 0:
                pts.append(tuple(Fraction(a, t) for a in r[:d]))
            else:
                rays.append(tuple(Fraction(a) for a in r[:d]))
        lines = [tuple(Fraction(a) for a in l[:d]) for l in hom.lines]
        if not pts:
            return None
        return tuple(sorted(pts)), tuple(sorted(rays)), tuple(lines)

    def _halfspaces_from_generators(self, pts, rays, lines):
        d = self.ambient_dim
        gens = []
        for p in pts:
            gens.append(la.primitive(tuple(p) + (Fraction(1),)))
        for r in rays:
            gens.append(la.primitive(tuple(r) + (Fraction(0),)))
        for l in lines:
            g = la.primitive(tuple(l) + (Fraction(0),))
            gens.append(g)
            gens.append(tuple(-a for a in g))
        polar = HomCone.from_constraints(d + 1, gens)
        hs = []
        for c in polar.rays:
            a = tuple(Fraction(x) for x in c[:d])
            if la.is_zero(a):
                continue
            hs.append((a, Fraction(-c[d])))
        eqs = []
        for c in polar.lines:
            a = tuple(Fraction(x) for x in c[:d])
            if la.is_zero(a):
                continue
            eqs.append((a, Fraction(-c[d])))
        return tuple(hs), tuple(eqs)

    @cached_property
    def _complete(self):
        if self._given_v is not None:
            pts, rays, lines = self._given_v
            if not pts:
                return None
            facets, eqs = self._halfspaces_from_generators(pts, rays, lines)
            halfspaces = facets + tuple(x for n, b in eqs for x in ((n, b), (la.neg(n), -b)))
            hom = HomCone.from_constraints(
                self.ambient_dim + 1,
                [_hom_row(n, b) for n, b in halfspaces]
                + [tuple(0 for _ in range(self.ambient_dim)) + (-1,)])
            vrep = self._vrep_from_hom(hom)
            return halfspaces, vrep, (facets, eqs)
        hom = self._hom if self._hom is not None else self._hom_from_halfspaces()
        vrep = self._vrep_from_hom(hom)
        if vrep is None:
            return None
        return self._halfspaces, vrep, None

    @property
    def is_empty(self):
        return self._complete is None

    def __bool__(self):
        return not self.is_empty

    def _require(self):
        c = self._complete
        if c is None:
            raise EmptyPolyhedron("polyhedron is empty")
        return c

    @property
    def halfspaces(self):
        return self._require()[0]

    @property
    def vertices(self):
        """Minimal-face points (the vertices when the polyhedron is pointed)."""
        return self._require()[1][0]

    @property
    def rays(self):
        return self._require()[1][1]

    @property
    def lineality(self):
        return self._require()[1][2]

    @property
    def is_bounded(self):
        return not self.rays and not self.lineality

    @property
    def is_pointed(self):
        return not self.lineality

    @cached_property
    def dim(self):
        if self.is_empty:
            return -1
        p0 = self.vertices[0]
        vecs = [la.sub(p, p0) for p in self.vertices[1:]] + list(self.rays) + list(self.lineality)
        return la.rank(vecs) if vecs else 0

    @cached_property
    def _irredundant(self):
        c = self._require()
        if c[2] is not None:
            return c[2]
        facets, eqs = self._halfspaces_from_generators(self.vertices, self.rays, self.lineality)
        return facets, eqs

    @property
    def facets(self):
        """Irredundant inequalities ``(n, b)`` (``<n, x> <= b``)."""
        return self._irredundant[0]

    @property
    def equalities(self):
        """Implicit equalities ``(n, b)`` of the affine hull."""
        return self._irredundant[1]

    # -- queries ---------------------------------------------------------------

    def contains(self, x):
        return all(la.dot(n, x) <= b for n, b in self.halfspaces)

    def tight_at(self, x):
        """Irredundant constraints (facets, then both signs of equalities) active at ``x``."""
        out = [(n, b) for n, b in self.facets if la.dot(n, x) == b]
        for n, b in self.equalities:
            out.append((n, b))
            out.append((la.neg(n), -b))
        return out

    def interior_point(self):
        return interior_point(self)

    def volume(self):
        from .triangulate import triangulate_polytope, simplex_volume
        if self.dim < self.ambient_dim:
            return Fraction(0)
        return sum((simplex_volume(s) for s in triangulate_polytope(self)), Fraction(0))

    def faces(self):
        """Nonempty faces as :class:`Face` records (the polyhedron itself included)."""
        pts, rays = self.vertices, self.rays
        inc = []
        for n, b in self.facets:
            ip = frozenset(i for i, p in enumerate(pts) if la.dot(n, p) == b)
            ir = frozenset(i for i, r in enumerate(rays) if la.dot(n, r) == 0)
            inc.append((ip, ir))
        top = (frozenset(range(len(pts))), frozenset(range(len(rays))))
        seen = {top}
        order = [top]
        queue = [top]
        while queue:
            fp, fr = queue.pop()
            for ip, ir in inc:
                gp, gr = fp & ip, fr & ir
                if not gp or (gp, gr) in seen:
                    continue
                seen.add((gp, gr))
                order.append((gp, gr))
                queue.append((gp, gr))
        faces = []
        for gp, gr in order:
            tight = frozenset(i for i, (ip, ir) in enumerate(inc) if gp <= ip and gr <= ir)
            fpts = [pts[i] for i in sorted(gp)]
            frays = [rays[i] for i in sorted(gr)]
            p0 = fpts[0]
            vecs = [la.sub(p, p0) for p in fpts[1:]] + frays + list(self.lineality)
            fdim = la.rank(vecs) if vecs else 0
            faces.append(Face(gp, gr, tight, fdim, _relint(fpts, frays)))
        faces.sort(key=lambda f: (f.dim, sorted(f.points), sorted(f.rays)))
        return faces

    def tangent_cone_halfspaces(self, x):
        """Constraints of ``tcone(P, x)``: the irredundant constraints active at ``x``."""
        if not self.contains(x):
            return None
        return self.tight_at(x)

    def __repr__(self):
        if self.is_empty:
            return f"ConvexPolyhedron(empty, ambient_dim={self.ambient_dim})"
        return (f"ConvexPolyhedron(dim={self.dim}, vertices={len(self.vertices)}, "
                f"rays={len(self.rays)}, lineality={len(self.lineality)})")


@dataclass(frozen=True)
class Face:
    points: frozenset
    rays: frozenset
    facets: frozenset
    dim: int
    witness: tuple


def _relint(points, rays):
    n = len(points)
    c = tuple(sum(coord) / n for coord in zip(*points))
    for r in rays:
        c = la.add(c, r)
    return c


def dual_description(poly):
    """Complete both descriptions of ``poly``; returns :class:`Empty` when infeasible."""
    if poly.is_empty:
        return Empty(poly.ambient_dim)
    # touching the properties forces the lazy computation
    poly.halfspaces, poly.vertices, poly.facets
    return poly


def interior_point(poly):
    """A point of the relative interior with exact coordinates.

    Centroid of the minimal-face points plus the sum of the rays: strict for
    every constraint that is not an implicit equality.
    """
    if poly.is_empty:
        raise EmptyPolyhedron("empty polyhedron has no interior point")
    return _relint(poly.vertices, poly.rays)
