"""``polyvert`` command-line front end."""

import argparse
import json
import sys
import time
from pathlib import Path

from . import decomposition as dm
from . import gallery as gal
from .errors import DimensionMismatch, PolyvertError, SchemaError
from .io import (decomposition_from_json, decomposition_json, dumps, gallery_scenes, parse_scene,
                 point_json, rational, rstr, transform_json, vertex_report_json)
from .transform import evaluate_transform, format_number, is_zero, quadrature_oracle, transform

EXIT_CODES = [
    (0, "success; every certificate and check passed"),
    (1, "a certificate or consistency check failed"),
    (2, "command-line usage error"),
    (3, "scene or decomposition JSON does not match the schema (or cannot be read)"),
    (4, "non-rational number (float or decimal) in the input"),
    (5, "dimension mismatch between inputs"),
    (6, "operation needs bounded support"),
    (7, "degenerate geometry (empty, low-dimensional or non-generic input)"),
    (8, "evaluation point is a pole of the transform"),
    (10, "other internal error"),
]

ORACLE_RTOL = 1e-6


def _epilog():
    lines = ["exit codes:"] + [f"  {c:>2}  {m}" for c, m in EXIT_CODES]
    lines.append("")
    lines.append("environment: POLYVERT_WORKERS bounds the worker pool for per-vertex tests.")
    return "\n".join(lines)


def build_parser():
    p = argparse.ArgumentParser(
        prog="polyvert",
        description="Algebraic vertices and signed decompositions of weighted unions of polyhedra.",
        epilog=_epilog(), formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for random gallery scenes and the zero-test grid (default 0)")
    p.add_argument("--timing", action="store_true", help="add wall-clock timing to reports")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("vertices", help="classify arrangement vertices")
    s.add_argument("scene", help="path to a scene JSON file or gallery:<name>")

    s = sub.add_parser("decompose", help="signed simplices or tangent cones plus line-cones")
    s.add_argument("scene")
    s.add_argument("--mode", choices=["simplices", "cones"], default="simplices")
    s.add_argument("-o", "--output", help="also write the decomposition JSON here")

    s = sub.add_parser("transform", help="exponential-rational transform of the scene")
    s.add_argument("scene")
    s.add_argument("--eval", dest="eval_at",
                   help='evaluation point: a JSON file, or inline like "z=[-1,-2]"')
    s.add_argument("--check-oracle", action="store_true",
                   help="compare the evaluation with numerical quadrature")

    s = sub.add_parser("check-sections", help="section test on the facet hyperplanes")
    s.add_argument("scene")

    s = sub.add_parser("verify", help="re-check a stored decomposition against a scene")
    s.add_argument("scene")
    s.add_argument("decomposition")

    s = sub.add_parser("gallery", help="list or dump the built-in scenes")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--dump", metavar="DIR")
    return p


def _report(command, scene, seed, outputs, ok):
    rep = {"command": command}
    if scene is not None:
        rep["scene"] = scene.name
        rep["source"] = scene.source
        rep["inputs_digest"] = scene.digest()
    rep["seed"] = seed
    rep["exact"] = True
    rep["ok"] = ok
    rep["outputs"] = outputs
    return rep


def _read_point(arg, d):
    text = arg.strip()
    if text.startswith("z="):
        text = text[2:]
    elif not text.startswith("[") and not text.startswith("{"):
        try:
            text = Path(arg).read_text(encoding="utf-8")
        except OSError as e:
            raise SchemaError(f"{arg}: {e.strerror or e}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"evaluation point: line {e.lineno} column {e.colno}: {e.msg}") from None
    if isinstance(data, dict):
        if "z" not in data:
            raise SchemaError("evaluation point: missing field 'z'")
        data = data["z"]
    if not isinstance(data, list):
        raise SchemaError("evaluation point: expected an array")
    if len(data) != d:
        raise DimensionMismatch(f"evaluation point has {len(data)} entries, scene dimension is {d}")
    return tuple(rational(c, f"z[{i}]") for i, c in enumerate(data))


def cmd_vertices(args, scene):
    rep = dm.vertex_report(scene.function, seed=args.seed)
    out = vertex_report_json(rep)
    ok = set(rep.algebraic) <= set(rep.geometric)
    return out, ok


def cmd_decompose(args, scene):
    f = scene.function
    if args.mode == "simplices":
        dec = dm.decompose_simplices(f, seed=args.seed)
        ok = dec.certificate
    else:
        dec = dm.decompose_cones(f, seed=args.seed)
        ok = dec.certificate and dec.residual_transform_zero
    out = decomposition_json(dec)
    if args.output:
        Path(args.output).write_text(dumps(out), encoding="utf-8")
    return out, ok


def cmd_transform(args, scene):
    f = scene.function
    s = transform(f)
    out = {"transform": transform_json(s), "zero": is_zero(s, seed=args.seed)}
    ok = True
    if args.eval_at:
        z = _read_point(args.eval_at, f.ambient_dim)
        exact = evaluate_transform(s, z)
        value = exact.to_float()
        out["eval"] = {"z": point_json(z),
                       "exact": [{"exponent": rstr(e), "coefficient": rstr(c)} for e, c in exact.items()],
                       "value": format_number(value)}
        if args.check_oracle:
            q = quadrature_oracle(f, z)
            rel = abs(value - q) / max(abs(q), 1e-300)
            ok = rel <= ORACLE_RTOL
            out["eval"]["oracle"] = {"value": format_number(q), "relative_error": format_number(rel),
                                     "tolerance": format_number(ORACLE_RTOL), "agree": ok}
    elif args.check_oracle:
        raise SchemaError("--check-oracle needs --eval")
    return out, ok


def cmd_check_sections(args, scene):
    chk = dm.check_section_theorem(scene.function, seed=args.seed)
    out = {"transform_zero": chk.transform_zero,
           "sections": [{"hyperplane": {"normal": point_json(h.normal), "offset": rstr(h.offset),
                                        "orientation": h.orientation},
                         "transform_zero": z} for h, z in chk.sections],
           "biconditional": chk.biconditional,
           "covers_facets": chk.covers_facets,
           "violation": chk.violation}
    return out, not chk.violation


def cmd_verify(args, scene):
    path = Path(args.decomposition)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise SchemaError(f"{path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None
    dec = decomposition_from_json(data, scene.ambient_dim)
    f = scene.function
    cert = dm.verify_decomposition(f, dec)
    out = {"kind": dec.kind, "terms": len(dec.terms), "certificate": cert}
    ok = cert
    if cert:
        out["uses_all_algebraic_vertices"] = dm.minimality_check(f, dec)
        ok = out["uses_all_algebraic_vertices"]
        if dec.kind == "cones":
            out["residual_transform_zero"] = dm.residual_transform_zero(dec, args.seed)
            ok = ok and out["residual_transform_zero"]
    return out, ok


def cmd_gallery(args):
    cat = gal.catalogue(args.seed)
    if args.dump:
        d = Path(args.dump)
        d.mkdir(parents=True, exist_ok=True)
        for s in gallery_scenes(args.seed):
            (d / f"{s.name}.json").write_text(dumps(s.to_json()), encoding="utf-8")
        return {"dumped": sorted(cat), "directory": str(d)}, True
    return {"scenes": [{"name": k, "dimension": v["dimension"], "description": v["description"]}
                       for k, v in cat.items()]}, True


COMMANDS = {"vertices": cmd_vertices, "decompose": cmd_decompose, "transform": cmd_transform,
            "check-sections": cmd_check_sections, "verify": cmd_verify}


def _error_body(e, code):
    return {"error": {"type": type(e).__name__, "message": str(e), "exit_code": code}}


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    start = time.perf_counter()
    try:
        if args.command == "gallery":
            scene = None
            out, ok = cmd_gallery(args)
        else:
            scene = parse_scene(args.scene, seed=args.seed)
            out, ok = COMMANDS[args.command](args, scene)
    except PolyvertError as e:
        stderr.write(dumps(_error_body(e, e.exit_code)))
        return e.exit_code
    except Exception as e:  # noqa: BLE001 - reported as a JSON error body
        stderr.write(dumps(_error_body(e, 10)))
        return 10
    rep = _report(args.command, scene, args.seed, out, ok)
    if args.timing:
        rep["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    stdout.write(dumps(rep))
    return 0 if ok else 1


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
