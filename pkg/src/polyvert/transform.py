"""Symbolic Fourier-Laplace transforms as exponential-rational sums.

A simplicial cone ``v + pos(w_1, ..., w_d)`` integrates to

    (-1)^d |det(w_1, ..., w_d)| e^<v,z> / prod_j <w_j, z>

for ``Re z`` in minus the interior of the dual cone, which is the sign
convention used throughout (it matches the integral).  Cones with a line
direction are mapped to zero.
"""

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import exp

import numpy as np

from .cones import Cone, PolyconicalFunction, tangent_cone, triangulate_cone
from .errors import DegenerateCone, PoleAt, Unbounded
from .kernel import linalg as la
from .kernel.triangulate import Simplex, triangulate_polytope
from .polyfun import PolyhedralFunction

#: group size up to which :func:`is_zero` expands over the common denominator
EXPAND_LIMIT = 8


@dataclass(frozen=True)
class TransformTerm:
    """``coeff * exp<vertex, z> / prod_j <forms_j, z>``."""

    coeff: Fraction
    vertex: tuple
    forms: tuple

    def shifted(self, v):
        return TransformTerm(self.coeff, la.add(self.vertex, v), self.forms)

    def scaled(self, c):
        return TransformTerm(self.coeff * c, self.vertex, self.forms)


@dataclass(frozen=True)
class TransformSum:
    ambient_dim: int
    terms: tuple = ()

    def __add__(self, other):
        return TransformSum(self.ambient_dim, self.terms + other.terms)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        c = la.to_fraction(c)
        return TransformSum(self.ambient_dim, tuple(t.scaled(c) for t in self.terms if c))

    def shifted(self, v):
        return TransformSum(self.ambient_dim, tuple(t.shifted(v) for t in self.terms))

    def __len__(self):
        return len(self.terms)


def simplicial_cone_transform(cone):
    if not cone.is_simplicial:
        raise DegenerateCone("cone is not simplicial")
    d = cone.ambient_dim
    coeff = (-1) ** d * abs(la.det(cone.generators))
    return TransformTerm(Fraction(coeff), cone.apex, cone.generators)


def _cone_terms(coeff, cone):
    d = cone.ambient_dim
    if d == 0:
        return [TransformTerm(coeff, (), ())]
    canon = cone.canonical()
    if canon.lineality or canon.dim < d:
        return []
    return [simplicial_cone_transform(k).scaled(coeff) for k in triangulate_cone(canon)]


def _simplex_terms(coeff, simplex):
    """Vertex cones of a simplex (its other faces give line-cones)."""
    verts = simplex.vertices
    d = len(verts) - 1
    out = []
    for i, v in enumerate(verts):
        forms = tuple(la.sub(w, v) for j, w in enumerate(verts) if j != i)
        out.append(TransformTerm(Fraction((-1) ** d) * abs(la.det(forms)) * coeff, v, forms))
    return out


def transform(obj, method="auto"):
    """Fourier-Laplace transform of a cone, polyconical function, weighted cone
    list ``[(coeff, Cone)]`` or polyhedral function.

    Bounded polyhedral functions are triangulated cell by cell (``method
    "simplices"``); otherwise the transform is the sum of the transforms of the
    tangent cones at the arrangement vertices (``method "cones"``).
    """
    if isinstance(obj, Cone):
        return TransformSum(obj.ambient_dim, tuple(_cone_terms(Fraction(1), obj)))
    if isinstance(obj, PolyconicalFunction):
        return transform_cones(obj.terms, obj.ambient_dim)
    if isinstance(obj, PolyhedralFunction):
        if method == "auto":
            method = "simplices" if obj.is_bounded else "cones"
        if method == "simplices":
            return _transform_bounded(obj)
        if method == "cones":
            return _transform_by_vertices(obj)
        raise ValueError(f"unknown method {method!r}")
    terms = list(obj)
    if not terms:
        raise ValueError("cannot infer the dimension of an empty cone list")
    return transform_cones(terms, terms[0][1].ambient_dim)


def transform_cones(terms, ambient_dim):
    out = []
    for c, k in terms:
        out.extend(_cone_terms(la.to_fraction(c), k))
    return TransformSum(ambient_dim, tuple(out))


def _transform_bounded(f):
    d = f.ambient_dim
    if not f.is_bounded:
        raise Unbounded("simplex route needs bounded support")
    if d == 0:
        return TransformSum(0, tuple(TransformTerm(w, (), ()) for w in f.weights.values()))
    out = []
    for poly, w in f.cells:
        for s in triangulate_polytope(poly):
            out.extend(_simplex_terms(w, s))
    return TransformSum(d, tuple(out))


def _transform_by_vertices(f):
    d = f.ambient_dim
    if d == 0:
        return _transform_bounded(f)
    out = TransformSum(d)
    for v in f.candidate_vertices():
        out = out + transform(tangent_cone(f, v))
    return out


def simplices_transform(terms, ambient_dim):
    """Transform of ``sum c [T]`` for ``[(c, Simplex)]``."""
    out = []
    for c, s in terms:
        if not s.is_degenerate():
            out.extend(_simplex_terms(la.to_fraction(c), s))
    return TransformSum(ambient_dim, tuple(out))


def group_by_vertex(s):
    """Terms keyed by exact vertex, in lexicographic vertex order."""
    groups = {}
    for t in s.terms:
        groups.setdefault(t.vertex, []).append(t)
    return OrderedDict(sorted(groups.items()))


# -- exact zero test -------------------------------------------------------------

def _normalized_group(terms):
    """Rewrite each term over primitive forms; returns ``(forms, [(coeff, idx)])``."""
    index = {}
    rows = []
    for t in terms:
        c = t.coeff
        idx = []
        for w in t.forms:
            p, lam = la.canonical_direction(w)
            c /= lam
            idx.append(index.setdefault(p, len(index)))
        rows.append((c, frozenset(idx)))
    forms = [None] * len(index)
    for p, i in index.items():
        forms[i] = p
    return forms, rows


def _poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def numerator_polynomial(terms, ambient_dim):
    """Numerator of ``sum_t coeff_t / prod <w, z>`` over the common denominator.

    Returns ``{exponent tuple: coefficient}`` with zero coefficients removed.
    """
    forms, rows = _normalized_group(terms)
    d = ambient_dim
    units = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    linear = [{units[i]: a for i, a in enumerate(f) if a} for f in forms]
    total = {}
    one = {tuple(0 for _ in range(d)): 1}
    for c, idx in rows:
        poly = {k: v * c for k, v in one.items()}
        for i, lin in enumerate(linear):
            if i not in idx:
                poly = _poly_mul(poly, lin)
        for e, v in poly.items():
            total[e] = total.get(e, 0) + v
    return {e: Fraction(v) for e, v in total.items() if v}


def _group_zero_expand(terms, d):
    return not numerator_polynomial(terms, d)


def _group_zero_grid(terms, d, seed=0):
    # the numerator is homogeneous of degree |forms| - d; setting z_d = 1 and
    # evaluating on a grid with degree + 1 values per coordinate is exact
    forms, rows = _normalized_group(terms)
    if d == 0:
        return sum(c for c, _ in rows) == 0
    deg = len(forms) - d
    values = [seed + 1 + k for k in range(deg + 1)]
    for head in product(values, repeat=d - 1):
        z = head + (1,)
        fz = [sum(a * b for a, b in zip(f, z)) for f in forms]
        total = Fraction(0)
        for c, idx in rows:
            p = c
            for i, v in enumerate(fz):
                if i not in idx:
                    p *= v
            total += p
        if total != 0:
            return False
    return True


def is_zero(s, method="auto", seed=0):
    """Decide whether the transform sum is the zero function.

    Distinct exponentials are independent, so the sum vanishes iff every
    per-vertex rational part does.  Each part is tested either by expanding
    the numerator over the common denominator (``"expand"``, the default up to
    ``EXPAND_LIMIT`` terms) or by exact evaluation of that numerator on a grid
    fine enough for its degree (``"grid"``).
    """
    for _, terms in group_by_vertex(s).items():
        m = method
        if m == "auto":
            m = "expand" if len(terms) <= EXPAND_LIMIT else "grid"
        if m == "expand":
            zero = _group_zero_expand(terms, s.ambient_dim)
        elif m == "grid":
            zero = _group_zero_grid(terms, s.ambient_dim, seed)
        else:
            raise ValueError(f"unknown method {method!r}")
        if not zero:
            return False
    return True


# -- evaluation ------------------------------------------------------------------

class ExactValue(dict):
    """Exact value as ``{exponent <v, z>: rational coefficient}``."""

    def to_float(self):
        return float(sum(float(c) * exp(float(e)) for e, c in self.items()))


def evaluate_transform(s, z):
    """Evaluate at ``z``: exactly for rational ``z``, in floating point otherwise."""
    exact = all(not isinstance(x, float) for x in z)
    if exact:
        z = la.vec(z)
        out = ExactValue()
        for t in s.terms:
            den = Fraction(1)
            for w in t.forms:
                v = la.dot(w, z)
                if v == 0:
                    raise PoleAt(w)
                den *= v
            e = la.dot(t.vertex, z)
            out[e] = out.get(e, Fraction(0)) + t.coeff / den
        return ExactValue({e: c for e, c in sorted(out.items()) if c})
    z = [float(x) for x in z]
    total = 0.0
    for t in s.terms:
        den = 1.0
        for w in t.forms:
            v = sum(float(a) * b for a, b in zip(w, z))
            if v == 0.0:
                raise PoleAt(w)
            den *= v
        total += float(t.coeff) / den * exp(sum(float(a) * b for a, b in zip(t.vertex, z)))
    return total


def format_number(x):
    return f"{x:.11e}"


# -- quadrature oracle -----------------------------------------------------------

def _collapsed_rule(d, n):
    """Gauss-Legendre rule on the unit simplex via collapsed coordinates."""
    g, w = np.polynomial.legendre.leggauss(n)
    g = (g + 1) / 2
    w = w / 2
    grids = np.meshgrid(*([g] * d), indexing="ij")
    wgrids = np.meshgrid(*([w] * d), indexing="ij")
    u = np.stack([x.ravel() for x in grids], axis=1)
    weights = np.prod(np.stack([x.ravel() for x in wgrids], axis=1), axis=1)
    lam = np.empty_like(u)
    rest = np.ones(len(u))
    for i in range(d):
        lam[:, i] = rest * u[:, i]
        rest = rest * (1 - u[:, i])
    # Jacobian prod_i (1-u_i)^(d-1-i)
    for i in range(d - 1):
        weights = weights * (1 - u[:, i]) ** (d - 1 - i)
    return lam, weights


def quadrature_oracle(f, z, order=24):
    """Numerical ``integral of f(x) exp<z, x> dx`` for bounded ``f``.

    Each cell is triangulated exactly and every simplex is integrated with a
    tensor Gauss-Legendre rule in collapsed coordinates; no closed form of the
    transform is used.
    """
    d = f.ambient_dim
    if not f.is_bounded:
        raise Unbounded("quadrature needs bounded support")
    z = np.asarray([float(x) for x in z])
    if d == 0:
        return float(sum(f.weights.values()))
    lam, wts = _collapsed_rule(d, order)
    total = 0.0
    for poly, w in f.cells:
        for s in triangulate_polytope(poly):
            v0 = np.array([float(a) for a in s.vertices[0]])
            edges = np.array([[float(a) for a in e] for e in s.edge_matrix()])
            vol = abs(float(la.det(s.edge_matrix())))
            x = v0 + lam @ edges
            total += float(w) * vol * float(np.sum(wts * np.exp(x @ z)))
    return total


__all__ = [
    "ExactValue", "TransformSum", "TransformTerm", "evaluate_transform", "format_number",
    "group_by_vertex", "is_zero", "numerator_polynomial", "quadrature_oracle",
    "simplicial_cone_transform", "simplices_transform", "transform", "transform_cones",
    "Simplex",
]
