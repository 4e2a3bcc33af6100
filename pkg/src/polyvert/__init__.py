"""Algebraic vertices and signed decompositions of polyhedral indicator functions."""

from .cones import (Cone, PolyconicalFunction, brianchon_gram, dual_cone, is_line_cone,
                    star_reduction, tangent_cone, triangulate_cone)
from .decomposition import (SignedDecomposition, VertexReport, algebraic_vertices,
                            check_section_theorem, decompose_cones, decompose_simplices,
                            geometric_vertices, minimality_check, vertex_report)
from .errors import (CertificateError, DegenerateCone, DimensionMismatch, DirectionNotGeneric,
                     EmptyPolyhedron, LowDimensional, NonRational, PoleAt, PolyvertError,
                     SchemaError, Unbounded)
from .io import Scene, parse_scene
from .kernel import ConvexPolyhedron, OrientedHyperplane, Simplex
from .polyfun import (PolyhedralFunction, ae_equal, combine, evaluate, facets,
                      from_weighted_union, signed_section, support)
from .transform import (TransformSum, TransformTerm, evaluate_transform, is_zero,
                        quadrature_oracle, transform)

__version__ = "0.1.0"

__all__ = [
    "CertificateError", "Cone", "ConvexPolyhedron", "DegenerateCone", "DimensionMismatch",
    "DirectionNotGeneric", "EmptyPolyhedron", "LowDimensional", "NonRational",
    "OrientedHyperplane", "PoleAt", "PolyconicalFunction", "PolyhedralFunction", "PolyvertError",
    "Scene", "SchemaError", "SignedDecomposition", "Simplex", "TransformSum", "TransformTerm",
    "Unbounded", "VertexReport", "ae_equal", "algebraic_vertices", "brianchon_gram",
    "check_section_theorem", "combine", "decompose_cones", "decompose_simplices", "dual_cone",
    "evaluate", "evaluate_transform", "facets", "from_weighted_union", "geometric_vertices",
    "is_line_cone", "is_zero", "minimality_check", "parse_scene", "quadrature_oracle",
    "signed_section", "star_reduction", "support", "tangent_cone", "transform",
    "triangulate_cone", "vertex_report",
]
