"""JSON scenes and report serialization.

Rationals travel as canonical ``"p/q"`` strings; bare ``"p"`` strings and JSON
integers are accepted on input, floats and decimals never are.
"""

import hashlib
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from . import gallery
from .cones import Cone
from .decomposition import SignedDecomposition
from .errors import DimensionMismatch, NonRational, SchemaError
from .kernel import linalg as la
from .kernel.polyhedron import ConvexPolyhedron
from .kernel.triangulate import Simplex
from .polyfun import from_weighted_union
from .transform import TransformSum, TransformTerm

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")
_FLOATY = re.compile(r"^\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*$")


def rational(value, where="value"):
    """Parse one exact rational; ``where`` names the field in diagnostics."""
    if isinstance(value, bool):
        raise SchemaError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise NonRational(f"{where}: float {value!r} is not allowed; write it as \"p/q\"")
    if isinstance(value, str):
        if _RATIONAL.match(value):
            num, _, den = value.replace(" ", "").partition("/")
            if den and int(den) == 0:
                raise SchemaError(f"{where}: zero denominator in {value!r}")
            return Fraction(int(num), int(den) if den else 1)
        if _FLOATY.match(value):
            raise NonRational(f"{where}: decimal {value!r} is not allowed; write it as \"p/q\"")
        raise SchemaError(f"{where}: cannot read {value!r} as a rational")
    raise SchemaError(f"{where}: expected a rational string, got {type(value).__name__}")


def rstr(x):
    return la.fraction_str(Fraction(x))


def point_json(p):
    return [rstr(c) for c in p]


def _vector(value, d, where):
    if not isinstance(value, list):
        raise SchemaError(f"{where}: expected an array")
    if d is not None and len(value) != d:
        raise DimensionMismatch(f"{where}: expected {d} entries, got {len(value)}")
    return tuple(rational(c, f"{where}[{i}]") for i, c in enumerate(value))


def _vectors(value, d, where):
    if not isinstance(value, list):
        raise SchemaError(f"{where}: expected an array of arrays")
    return [_vector(v, d, f"{where}[{i}]") for i, v in enumerate(value)]


def _require(obj, key, where):
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    if key not in obj:
        raise SchemaError(f"{where}: missing field {key!r}")
    return obj[key]


# -- scenes --------------------------------------------------------------------------


def _polyhedron(obj, d, where):
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    if "halfspaces" in obj:
        if set(obj) - {"halfspaces"}:
            raise SchemaError(f"{where}: 'halfspaces' cannot be mixed with generators")
        rows = _vectors(obj["halfspaces"], d + 1, f"{where}.halfspaces")
        canon = {"halfspaces": [point_json(r) for r in rows]}
        return canon, ConvexPolyhedron.from_halfspaces(d, [(r[:d], r[d]) for r in rows])
    if "vertices" in obj:
        unknown = set(obj) - {"vertices", "rays", "lineality"}
        if unknown:
            raise SchemaError(f"{where}: unknown fields {sorted(unknown)}")
        verts = _vectors(obj["vertices"], d, f"{where}.vertices")
        if not verts:
            raise SchemaError(f"{where}.vertices: at least one vertex is required")
        rays = _vectors(obj.get("rays", []), d, f"{where}.rays")
        lines = _vectors(obj.get("lineality", []), d, f"{where}.lineality")
        canon = {"vertices": [point_json(v) for v in verts]}
        if rays:
            canon["rays"] = [point_json(r) for r in rays]
        if lines:
            canon["lineality"] = [point_json(r) for r in lines]
        return canon, ConvexPolyhedron.from_generators(verts, rays, lines, ambient_dim=d)
    raise SchemaError(f"{where}: needs 'halfspaces' or 'vertices'")


@dataclass
class Scene:
    """A weighted union of convex polyhedra with its provenance."""

    name: str
    ambient_dim: int
    terms: list
    source: str = "file"
    description: str = ""
    _json_terms: list = field(default_factory=list, repr=False)

    @cached_property
    def function(self):
        return from_weighted_union(self.terms, ambient_dim=self.ambient_dim)

    def to_json(self):
        out = {"name": self.name, "dimension": self.ambient_dim}
        if self.description:
            out["description"] = self.description
        out["terms"] = self._json_terms
        return out

    def digest(self):
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def scene_from_json(data, name=None, source="file"):
    d = _require(data, "dimension", "scene")
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise SchemaError("scene.dimension: expected a positive integer")
    raw = _require(data, "terms", "scene")
    if not isinstance(raw, list):
        raise SchemaError("scene.terms: expected an array")
    terms, canon = [], []
    for i, t in enumerate(raw):
        where = f"terms[{i}]"
        c = rational(_require(t, "coefficient", where), f"{where}.coefficient")
        pj, poly = _polyhedron(_require(t, "polyhedron", where), d, f"{where}.polyhedron")
        terms.append((c, poly))
        canon.append({"coefficient": rstr(c), "polyhedron": pj})
    name = data.get("name", name or "scene")
    return Scene(str(name), d, terms, source, str(data.get("description", "")), canon)


def parse_scene(ref, seed=0):
    """Load ``"gallery:<name>"`` or a JSON file path."""
    ref = str(ref)
    if ref.startswith("gallery:"):
        key = ref.split(":", 1)[1]
        cat = gallery.catalogue(seed)
        if key not in cat:
            raise SchemaError(f"unknown gallery scene {key!r}; known: {', '.join(cat)}")
        return scene_from_json(cat[key], source="gallery")
    path = Path(ref)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SchemaError(f"{ref}: {e.strerror or e}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{ref}: line {e.lineno} column {e.colno}: {e.msg}") from None
    return scene_from_json(data, name=path.stem)


def gallery_scenes(seed=0):
    return [scene_from_json(s, source="gallery") for s in gallery.catalogue(seed).values()]


# -- cones, transforms, decompositions -----------------------------------------------


def cone_json(cone):
    return {"apex": point_json(cone.apex),
            "generators": [point_json(g) for g in cone.generators],
            "lineality": [point_json(l) for l in cone.lineality]}


def cone_from_json(obj, d=None, where="cone"):
    apex = _vector(_require(obj, "apex", where), d, f"{where}.apex")
    d = len(apex)
    gens = _vectors(obj.get("generators", []), d, f"{where}.generators")
    lines = _vectors(obj.get("lineality", []), d, f"{where}.lineality")
    return Cone(apex, tuple(gens), tuple(lines))


def transform_json(s):
    return {"dimension": s.ambient_dim,
            "terms": [{"coeff": rstr(t.coeff), "vertex": point_json(t.vertex),
                       "forms": [point_json(w) for w in t.forms]} for t in s.terms]}


def transform_from_json(obj):
    d = _require(obj, "dimension", "transform")
    terms = []
    for i, t in enumerate(_require(obj, "terms", "transform")):
        where = f"transform.terms[{i}]"
        terms.append(TransformTerm(rational(_require(t, "coeff", where), f"{where}.coeff"),
                                   _vector(_require(t, "vertex", where), d, f"{where}.vertex"),
                                   tuple(_vectors(_require(t, "forms", where), d, f"{where}.forms"))))
    return TransformSum(d, tuple(terms))


def decomposition_json(dec):
    out = {"kind": dec.kind, "dimension": dec.ambient_dim}
    if dec.kind == "simplices":
        out["terms"] = [{"coefficient": rstr(c), "simplex": [point_json(v) for v in s.vertices]}
                        for c, s in dec.terms]
    else:
        out["terms"] = [{"coefficient": rstr(c), "cone": cone_json(k)} for c, k in dec.terms]
        out["residual_line_cones"] = [{"coefficient": rstr(c), "cone": cone_json(k)}
                                      for c, k in dec.residual_line_cones]
        out["residual_transform_zero"] = dec.residual_transform_zero
    out["integer"] = dec.integer
    out["certificate"] = dec.certificate
    return out


def decomposition_from_json(obj, d=None):
    kind = _require(obj, "kind", "decomposition")
    if kind not in ("simplices", "cones"):
        raise SchemaError(f"decomposition.kind: expected 'simplices' or 'cones', got {kind!r}")
    dim = obj.get("dimension", d)
    if d is not None and dim != d:
        raise DimensionMismatch(f"decomposition has dimension {dim}, scene has {d}")

    def read(items, label):
        if not isinstance(items, list):
            raise SchemaError(f"decomposition.{label}: expected an array")
        out = []
        for i, t in enumerate(items):
            where = f"decomposition.{label}[{i}]"
            c = rational(_require(t, "coefficient", where), f"{where}.coefficient")
            if kind == "simplices":
                verts = _vectors(_require(t, "simplex", where), dim, f"{where}.simplex")
                if len(verts) != dim + 1:
                    raise SchemaError(f"{where}.simplex: expected {dim + 1} vertices")
                out.append((c, Simplex(verts)))
            else:
                out.append((c, cone_from_json(_require(t, "cone", where), dim, f"{where}.cone")))
        return out

    terms = read(_require(obj, "terms", "decomposition"), "terms")
    residual = read(obj.get("residual_line_cones", []), "residual_line_cones") if kind == "cones" else []
    return SignedDecomposition(kind, dim, terms, residual)


def vertex_report_json(report):
    alg, geo = set(report.algebraic), set(report.geometric)
    return {"candidates": len(report.candidates),
            "algebraic": [point_json(v) for v in report.algebraic],
            "geometric": [point_json(v) for v in report.geometric],
            "vertices": [{"point": point_json(v), "algebraic": v in alg, "geometric": v in geo,
                          "transform_terms": len(report.transforms[v])}
                         for v in report.candidates]}


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
