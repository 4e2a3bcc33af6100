"""Full-dimensional cells of a hyperplane arrangement."""

from dataclasses import dataclass
from functools import cached_property

from . import linalg as la
from .ddm import HomCone
from .polyhedron import ConvexPolyhedron, OrientedHyperplane


def _cell_halfspaces(hyperplanes, signs):
    hs = []
    for h, s in zip(hyperplanes, signs):
        if s > 0:
            hs.append((la.neg(h.normal), -h.offset))
        else:
            hs.append((h.normal, h.offset))
    return hs


@dataclass(frozen=True, eq=False)
class Cell:
    """Closure of the open region with sign vector ``signs``."""

    signs: tuple
    polyhedron: ConvexPolyhedron

    @cached_property
    def witness(self):
        return self.polyhedron.interior_point()


class CellComplex:
    """Hyperplanes, their full-dimensional cells and the arrangement vertices.

    Sign ``+1`` at position ``i`` means ``<n_i, x> > b_i`` for the canonical
    (unoriented) normal of hyperplane ``i``.
    """

    def __init__(self, ambient_dim, hyperplanes, cells):
        self.ambient_dim = ambient_dim
        self.hyperplanes = tuple(hyperplanes)
        self.cells = tuple(cells)
        self.index = {c.signs: c for c in self.cells}

    def locate(self, x):
        """Sign vector of ``x`` (zeros where ``x`` lies on a hyperplane)."""
        out = []
        for h in self.hyperplanes:
            v = h.value(x)
            out.append(0 if v == 0 else (1 if v > 0 else -1))
        return tuple(out)

    def cells_around(self, x):
        """Cells whose closure contains ``x``."""
        s = self.locate(x)
        return [c for c in self.cells
                if all(a == 0 or a == b for a, b in zip(s, c.signs))]

    @cached_property
    def vertices(self):
        """0-faces of the arrangement in lexicographic order."""
        d = self.ambient_dim
        if d == 0 or la.rank([h.normal for h in self.hyperplanes]) < d:
            return ()
        pts = set()
        for c in self.cells:
            pts.update(c.polyhedron.vertices)
        return tuple(sorted(pts))

    def __len__(self):
        return len(self.cells)

    def __repr__(self):
        return (f"CellComplex(dim={self.ambient_dim}, hyperplanes={len(self.hyperplanes)}, "
                f"cells={len(self.cells)})")


def canonical_hyperplanes(hyperplanes):
    """Unoriented, deduplicated copies in first-seen order."""
    seen = {}
    for h in hyperplanes:
        if not isinstance(h, OrientedHyperplane):
            n, b = h
            h = OrientedHyperplane.make(n, b)
        seen.setdefault(h.key, h.unoriented())
    return list(seen.values())


def arrangement(hyperplanes, ambient_dim):
    """Enumerate the full-dimensional cells cut out by ``hyperplanes``.

    Cells are built by inserting one hyperplane at a time; a cell is split
    when its generators lie strictly on both sides and each half gets one
    incremental double-description step.
    """
    hyps = canonical_hyperplanes(hyperplanes)
    d = ambient_dim
    if d == 0:
        if hyps:
            raise ValueError("no hyperplanes exist in dimension 0")
        return CellComplex(0, (), [Cell((), ConvexPolyhedron(0, halfspaces=()))])
    start = HomCone.full(d + 1).add(tuple(0 for _ in range(d)) + (-1,))
    work = [((), start)]
    for h in hyps:
        row = la.primitive(tuple(h.normal) + (-h.offset,))
        opp = tuple(-a for a in row)
        nxt = []
        for signs, hom in work:
            rv, lv = hom.values(row)
            split = any(lv) or (any(v > 0 for v in rv) and any(v < 0 for v in rv))
            if split:
                nxt.append((signs + (-1,), hom.add(row)))
                nxt.append((signs + (1,), hom.add(opp)))
            elif any(v > 0 for v in rv):
                nxt.append((signs + (1,), hom))
            else:
                nxt.append((signs + (-1,), hom))
        work = nxt
    cells = []
    for signs, hom in sorted(work, key=lambda t: t[0]):
        poly = ConvexPolyhedron(d, halfspaces=_cell_halfspaces(hyps, signs), _hom=hom)
        cells.append(Cell(signs, poly))
    return CellComplex(d, hyps, cells)


def cell_polyhedron(hyperplanes, signs, ambient_dim):
    return ConvexPolyhedron(ambient_dim, halfspaces=_cell_halfspaces(hyperplanes, signs))
