"""Deterministic triangulations of polytopes and vector configurations."""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..errors import LowDimensional
from . import linalg as la


@dataclass(frozen=True)
class Simplex:
    """Convex hull of ``len(vertices)`` affinely independent points."""

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(la.vec(v) for v in self.vertices))

    @property
    def ambient_dim(self):
        return len(self.vertices[0])

    @property
    def dim(self):
        return len(self.vertices) - 1

    def edge_matrix(self):
        v0 = self.vertices[0]
        return [la.sub(v, v0) for v in self.vertices[1:]]

    def signed_volume_det(self):
        return la.det(self.edge_matrix())

    def is_degenerate(self):
        return la.rank(self.edge_matrix()) < self.dim

    def polyhedron(self):
        from .polyhedron import ConvexPolyhedron
        return ConvexPolyhedron.from_generators(self.vertices)

    def __lt__(self, other):
        return self.vertices < other.vertices


def simplex_volume(s):
    if s.dim != s.ambient_dim:
        return Fraction(0)
    return abs(s.signed_volume_det()) / factorial(s.dim)


def triangulate_polytope(poly):
    """Pulling triangulation from the lexicographically smallest vertex.

    Recursively cones the smallest vertex of each face over the triangulated
    facets of that face not containing it.  Every simplex uses vertices of
    ``poly`` only.
    """
    if not poly.is_bounded:
        raise ValueError("triangulate_polytope needs a bounded polyhedron")
    if poly.dim < poly.ambient_dim:
        raise LowDimensional(f"polytope of dimension {poly.dim} in R^{poly.ambient_dim}")
    pts = poly.vertices  # sorted lexicographically
    faces = poly.faces()
    by_dim = {}
    for f in faces:
        by_dim.setdefault(f.dim, []).append(f.points)
    memo = {}

    def tri(points, k):
        key = points
        if key in memo:
            return memo[key]
        if k == 0:
            out = [(min(points),)]
        else:
            v0 = min(points)
            out = []
            for g in by_dim.get(k - 1, ()):
                if g < points and v0 not in g:
                    out.extend((v0,) + s for s in tri(g, k - 1))
        memo[key] = out
        return out

    top = frozenset(range(len(pts)))
    return [Simplex(tuple(pts[i] for i in s)) for s in tri(top, poly.dim)]


def placing_triangulation(vectors):
    """Placing triangulation of a vector configuration, in the given order.

    Returns index tuples spanning simplicial cones whose union is the cone
    generated by ``vectors`` (assumed pointed).  Each new vector is joined to
    the boundary facets it sees; vectors inside the current cone are skipped.
    """
    vectors = [la.vec(v) for v in vectors]
    if not vectors:
        return []
    simplices = []
    basis = []
    used = []
    for i, v in enumerate(vectors):
        if la.is_zero(v):
            continue
        if la.rank(basis + [v]) > len(basis):
            basis.append(v)
            simplices = [s + (i,) for s in simplices] if simplices else [(i,)]
            used.append(i)
            continue
        coords = _coordinates(basis)
        r = len(basis)
        if r == 1:
            # a second vector on the same line: pointedness means same direction
            continue
        facet_count = {}
        for s in simplices:
            for j in range(r):
                f = tuple(sorted(s[:j] + s[j + 1:]))
                facet_count.setdefault(f, []).append((s, s[j]))
        new = []
        for f, owners in facet_count.items():
            if len(owners) != 1:
                continue
            _, opp = owners[0]
            mf = [coords(vectors[t]) for t in f]
            s_opp = _sign(la.det(mf + [coords(vectors[opp])]))
            s_v = _sign(la.det(mf + [coords(v)]))
            if s_v != 0 and s_v == -s_opp:
                new.append(f + (i,))
        simplices.extend(new)
        if new:
            used.append(i)
    return [tuple(sorted(s)) for s in simplices]


def _sign(x):
    return (x > 0) - (x < 0)


def _coordinates(basis):
    """Map vectors in span(basis) to coordinates w.r.t. ``basis``."""
    n = len(basis[0])
    cols = [tuple(b[k] for b in basis) for k in range(n)]

    def coords(v):
        sol = la.solve(cols, v) if len(cols) == len(basis) else _lsq(cols, v, len(basis))
        return sol

    return coords


def _lsq(rows, v, r):
    # consistent overdetermined system: pick independent rows
    idx = la.independent_subset(rows)[:r]
    return la.solve([rows[i] for i in idx], [v[i] for i in idx])
