"""The algebra of polyhedral indicator functions.

A :class:`PolyhedralFunction` is stored as its basic decomposition: rational
weights on the full-dimensional cells of the arrangement of its generating
hyperplanes.  Construction always normalizes, dropping every hyperplane
across which the function does not jump, so the generating hyperplanes are
exactly the facet hyperplanes of the function.  Values on lower-dimensional
faces are never asserted; two functions are equal when they agree on every
cell of their common refinement.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch
from .kernel import linalg as la
from .kernel.arrangement import Cell, CellComplex, arrangement, canonical_hyperplanes, cell_polyhedron
from .kernel.polyhedron import HyperplaneChart, OrientedHyperplane


class PolyhedralFunction:
    """Finite rational combination of indicator functions of convex polyhedra."""

    def __init__(self, complex_, weights):
        self.complex = complex_
        self.weights = {s: Fraction(w) for s, w in weights.items() if w != 0}

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, ambient_dim):
        return cls(arrangement([], ambient_dim), {})

    @classmethod
    def from_cells(cls, ambient_dim, hyperplanes, weight_at):
        """Build from an oracle giving the weight at an interior cell witness."""
        hyps = sorted(canonical_hyperplanes(hyperplanes), key=lambda h: h.key)
        cx = arrangement(hyps, ambient_dim)
        weights = {}
        for c in cx.cells:
            w = Fraction(weight_at(c.witness))
            if w:
                weights[c.signs] = w
        return cls(cx, weights)._normalized()

    @classmethod
    def from_polyhedron(cls, poly, coeff=1):
        return from_weighted_union([(coeff, poly)])

    def _normalized(self):
        cx = self.complex
        n = len(cx.hyperplanes)
        keep = []
        for i in range(n):
            jump = False
            for c in cx.cells:
                if c.signs[i] != 1:
                    continue
                other = c.signs[:i] + (-1,) + c.signs[i + 1:]
                if other in cx.index and self.weights.get(c.signs, 0) != self.weights.get(other, 0):
                    jump = True
                    break
            if jump:
                keep.append(i)
        if len(keep) == n:
            return self
        hyps = [cx.hyperplanes[i] for i in keep]
        groups = {}
        for c in cx.cells:
            key = tuple(c.signs[i] for i in keep)
            groups.setdefault(key, self.weights.get(c.signs, Fraction(0)))
        d = cx.ambient_dim
        if not hyps:
            new_cx = arrangement([], d)
        else:
            cells = [Cell(s, cell_polyhedron(hyps, s, d)) for s in sorted(groups)]
            new_cx = CellComplex(d, hyps, cells)
        return PolyhedralFunction(new_cx, {s: w for s, w in groups.items() if w})

    # -- basic properties ------------------------------------------------------

    @property
    def ambient_dim(self):
        return self.complex.ambient_dim

    @property
    def hyperplanes(self):
        return self.complex.hyperplanes

    @property
    def cells(self):
        """``(ConvexPolyhedron, weight)`` pairs with nonzero weight."""
        return [(self.complex.index[s].polyhedron, w) for s, w in sorted(self.weights.items())]

    @property
    def integer_flag(self):
        return all(w.denominator == 1 for w in self.weights.values())

    @property
    def is_zero(self):
        return not self.weights

    @property
    def is_bounded(self):
        return all(p.is_bounded for p, _ in self.cells)

    def generic_value(self, x):
        """Value at a point lying on none of the generating hyperplanes."""
        s = self.complex.locate(x)
        if 0 in s:
            raise ValueError("point lies on a generating hyperplane")
        return self.weights.get(s, Fraction(0))

    def candidate_vertices(self):
        """Arrangement 0-faces: the only points that can be vertices of any kind."""
        return self.complex.vertices

    def __add__(self, other):
        return combine(self, other, "add")

    def __sub__(self, other):
        return combine(self, other, "subtract")

    def __mul__(self, other):
        if isinstance(other, PolyhedralFunction):
            return combine(self, other, "multiply")
        return combine(self, None, "scale", other)

    __rmul__ = __mul__

    def __neg__(self):
        return combine(self, None, "scale", -1)

    def __repr__(self):
        return (f"PolyhedralFunction(dim={self.ambient_dim}, hyperplanes={len(self.hyperplanes)}, "
                f"cells={len(self.weights)})")


def _check_dims(*fs):
    dims = {f.ambient_dim for f in fs}
    if len(dims) > 1:
        raise DimensionMismatch(f"functions live in different dimensions {sorted(dims)}")


def _piece_hyperplanes(poly):
    return [OrientedHyperplane.make(n, b) for n, b in poly.facets]


def from_weighted_union(pieces, ambient_dim=None):
    """Basic decomposition of ``sum coeff_i [P_i]``.

    Lower-dimensional and empty pieces are measure zero and contribute nothing.
    """
    pieces = [(la.to_fraction(c), p) for c, p in pieces]
    dims = {p.ambient_dim for _, p in pieces}
    if ambient_dim is not None:
        dims.add(ambient_dim)
    if len(dims) > 1:
        raise DimensionMismatch(f"pieces live in different dimensions {sorted(dims)}")
    if not dims:
        raise ValueError("ambient_dim is required for an empty union")
    d = dims.pop()
    live = [(c, p) for c, p in pieces if c != 0 and not p.is_empty and p.dim == d]
    hyps = [h for _, p in live for h in _piece_hyperplanes(p)]

    def weight(x):
        return sum((c for c, p in live if p.contains(x)), Fraction(0))

    return PolyhedralFunction.from_cells(d, hyps, weight)


_OPS = ("add", "subtract", "multiply", "scale")


def combine(f, g, op, c=None):
    """Pointwise ``f + g``, ``f - g``, ``f * g`` or ``c * f`` (``op='scale'``)."""
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    if op == "scale":
        c = la.to_fraction(c)
        if c == 0:
            return PolyhedralFunction.zero(f.ambient_dim)
        return PolyhedralFunction(f.complex, {s: c * w for s, w in f.weights.items()})
    _check_dims(f, g)
    fn = {"add": lambda a, b: a + b,
          "subtract": lambda a, b: a - b,
          "multiply": lambda a, b: a * b}[op]
    return PolyhedralFunction.from_cells(
        f.ambient_dim, list(f.hyperplanes) + list(g.hyperplanes),
        lambda x: fn(f.generic_value(x), g.generic_value(x)))


def ae_equal(f, g):
    """Exact almost-everywhere equality on the common refinement."""
    _check_dims(f, g)
    cx = arrangement(list(f.hyperplanes) + list(g.hyperplanes), f.ambient_dim)
    return all(f.generic_value(c.witness) == g.generic_value(c.witness) for c in cx.cells)


def ae_equal_pieces(f, pieces):
    """``ae_equal(f, sum c_i [P_i])`` without materializing the right-hand side."""
    live = [(la.to_fraction(c), p) for c, p in pieces
            if c != 0 and not p.is_empty and p.dim == f.ambient_dim]
    for _, p in live:
        if p.ambient_dim != f.ambient_dim:
            raise DimensionMismatch("piece dimension differs from the function's")
    hyps = list(f.hyperplanes) + [h for _, p in live for h in _piece_hyperplanes(p)]
    cx = arrangement(hyps, f.ambient_dim)
    for cell in cx.cells:
        w = cell.witness
        rhs = sum((c for c, p in live if p.contains(w)), Fraction(0))
        if rhs != f.generic_value(w):
            return False
    return True


@dataclass(frozen=True)
class Evaluation:
    """Result of :func:`evaluate`.

    ``location`` is ``"cell-interior"`` (then ``value`` is the weight) or
    ``"measure-zero-face"`` (then ``value`` is None and ``adjacent`` lists the
    weights of the cells whose closure contains the point).
    """

    value: Fraction
    location: str
    adjacent: tuple = ()


def evaluate(f, x):
    x = la.vec(x)
    cx = f.complex
    s = cx.locate(x)
    if 0 not in s:
        return Evaluation(f.weights.get(s, Fraction(0)), "cell-interior")
    adj = tuple(f.weights.get(c.signs, Fraction(0)) for c in cx.cells_around(x))
    return Evaluation(None, "measure-zero-face", adj)


@dataclass(frozen=True)
class SignedSectionResult:
    """Jump of ``f`` across an oriented hyperplane, as a function on the plane.

    ``section`` lives in the chart coordinates of ``chart`` (dimension d-1).
    """

    hyperplane: OrientedHyperplane
    chart: HyperplaneChart
    section: PolyhedralFunction

    @property
    def is_zero(self):
        return self.section.is_zero

    def lift(self, u):
        return self.chart.lift(u)


def signed_section(f, h):
    """Signed section ``f_h = f_h^+ - f_h^-`` of ``f`` by the oriented plane ``h``."""
    if h.dim != f.ambient_dim:
        raise DimensionMismatch("hyperplane and function dimensions differ")
    chart = h.chart()
    d = f.ambient_dim
    cx = f.complex
    pos = next((i for i, g in enumerate(cx.hyperplanes) if g.key == h.key), None)
    if pos is None:
        return SignedSectionResult(h, chart, PolyhedralFunction.zero(d - 1))
    induced = []
    for i, g in enumerate(cx.hyperplanes):
        if i == pos:
            continue
        n2, b2 = chart.pull_back(g.normal, g.offset)
        if not la.is_zero(n2):
            induced.append((n2, b2))
    up = h.orientation

    def jump(u):
        s = list(cx.locate(chart.lift(u)))
        s[pos] = up
        plus = f.weights.get(tuple(s), Fraction(0))
        s[pos] = -up
        minus = f.weights.get(tuple(s), Fraction(0))
        return plus - minus

    section = PolyhedralFunction.from_cells(d - 1, induced, jump)
    return SignedSectionResult(h, chart, section)


def facets(f, base_point=None):
    """Nonzero signed sections over the generating hyperplanes.

    With ``base_point`` each plane not through it is oriented so the point
    lies on its positive side; otherwise the canonical orientation is used.
    """
    out = []
    for h in f.hyperplanes:
        if base_point is not None and h.value(base_point) != 0:
            h = h.oriented_towards(base_point)
        res = signed_section(f, h)
        if not res.is_zero:
            out.append(res)
    return out


@dataclass(frozen=True)
class Support:
    regions: tuple
    bounded: bool


def support(f):
    """Closures of the nonzero-weight cells and whether all of them are bounded."""
    regions = tuple(p for p, _ in f.cells)
    return Support(regions, all(p.is_bounded for p in regions))
