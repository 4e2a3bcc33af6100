"""Exact rational polyhedral primitives."""

from .arrangement import Cell, CellComplex, arrangement
from .linalg import to_fraction, vec
from .polyhedron import (ConvexPolyhedron, Empty, Face, HyperplaneChart,
                         OrientedHyperplane, dual_description, interior_point)
from .triangulate import Simplex, placing_triangulation, simplex_volume, triangulate_polytope

__all__ = [
    "Cell", "CellComplex", "ConvexPolyhedron", "Empty", "Face", "HyperplaneChart",
    "OrientedHyperplane", "Simplex", "arrangement", "dual_description",
    "interior_point", "placing_triangulation", "simplex_volume", "to_fraction",
    "triangulate_polytope", "vec",
]
