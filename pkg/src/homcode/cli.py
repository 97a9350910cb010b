"""``homcode`` command line: JSON in, JSON out.

Exit status 0 on success, 1 when the theory rejects the input (with
``{"rejected": ..., "witness": ...}``), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import features, hsc, lattices, pauli, surface
from .errors import DomainError, HomcodeError, Inadmissible, InputError, ParseError


def _jsonable(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj, key=repr)
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "item"):
        return obj.item()
    if hasattr(obj, "tolist"):
        return obj.tolist()
    return str(obj)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=_jsonable) + "\n"


def _read_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON on input: {exc}") from None


def _read_map(text: str) -> surface.CombinatorialMap:
    return lattices.record_to_map(_read_json(text))


def _read_code(text: str) -> hsc.HscCode:
    return hsc.code_from_record(_read_json(text))


def cmd_gen(args, text):
    return lattices.map_to_record(lattices.generate(args.spec)), "generated map"


def cmd_transform(args, text):
    m = _read_map(text)
    if args.kind == "dual":
        out = surface.dual(m)
        rec = lattices.map_to_record(out)
    else:
        out, prov = surface.medial(m)
        rec = lattices.map_to_record(out)
        rec["meta"]["provenance"] = [list(prov[f]) for f in range(out.num_faces)]
    return rec, f"{args.kind}: V={out.num_vertices} E={out.num_edges} F={out.num_faces}"


def cmd_color(args, text):
    m = _read_map(text)
    palette = args.palette or (2 if m.is_regular(4) else 3)
    coloring = surface.face_coloring(m, palette)
    names = [surface.COLOR_NAMES[c] for c in coloring.colors]
    return {"palette": palette, "colors": names}, f"{palette}-coloring found"


def cmd_homology(args, text):
    m = _read_map(text)
    chi, genus = surface.euler_genus(m)
    cycles, cuts, b1 = surface.cycle_cut_spaces(m)
    out = {
        "chi": chi,
        "genus": genus,
        "V": m.num_vertices,
        "E": m.num_edges,
        "F": m.num_faces,
        "cycle_dim": cycles.dimension,
        "cut_dim": cuts.dimension,
        "facial_rank": cycles.dimension - b1,
        "b1": b1,
    }
    if genus == 0:
        out["cycle_space_equals_dual_cut_space"] = surface.cycle_space_is_dual_cut_space(m)
    return out, f"genus {genus}, b1 {b1}"


def cmd_build(args, text):
    m = _read_map(text)
    kind, _, cls = args.family.partition(":")
    if kind == "ktc":
        code = hsc.build_ktc(m)
    elif kind == "tcc":
        try:
            index = int(cls or 1)
        except ValueError:
            raise ParseError(f"bad TCC class {cls!r}") from None
        if index not in (1, 2, 3):
            raise ParseError("TCC class must be 1, 2 or 3")
        code = hsc.build_tcc(m, index)
    else:
        raise ParseError(f"unknown code family {args.family!r}; use ktc or tcc:CLASS")
    return code.to_record(), f"built {code.family} on {code.n} qubits"


def cmd_check(args, text):
    code = _read_code(text)
    checked = hsc.check_admissibility(code.map, code.faces, coloring=code.coloring, family=code.family)
    params = checked.params()
    return {"admissible": True, "params": params.to_dict()}, "admissible"


def cmd_params(args, text):
    code = _read_code(text)
    params = code.params()
    out = {"n": params.n, "k": params.k}
    if args.full:
        out.update(params.to_dict())
    if args.distance_cap is not None:
        d = pauli.min_distance(code.generators(), args.distance_cap, code.n)
        if isinstance(d, pauli.AboveCap):
            out["d"] = "above cap"
            out["distance_cap"] = d.cap
        else:
            out["d"] = d
    return out, f"n={params.n} k={params.k}"


def _parse_hole(text: str):
    face, _, slot = text.partition(":")
    try:
        return int(face), (None if slot == "" else [int(slot)])
    except ValueError:
        raise ParseError(f"hole must be FACE or FACE:SLOT, got {text!r}") from None


def cmd_punch(args, text):
    code = _read_code(text)
    p = code
    for h in args.hole:
        face, slots = _parse_hole(h)
        p = features.puncture(p, face, slots)
    if p is code:
        raise ParseError("give at least one --hole")
    count = features.hole_logical_count(p)
    rec = p.code.to_record()
    rec["removed"] = [list(r) for r in p.removed]
    rec["hole_count"] = count.to_dict()
    return rec, f"removed {len(p.removed)} generators, dk={count.rank_delta}"


def cmd_boundary(args, text):
    spec = args.boundaries
    boundaries = int(spec) if spec.isdigit() else spec
    patch = features.build_boundary_patch(args.family.upper(), boundaries, args.size)
    report = features.boundary_logical_count(patch)
    report["boundary_colors"] = patch.boundary_colors
    if args.with_code:
        report["code"] = patch.code.to_record()
    return report, f"k={report['rank_k']}"


def cmd_density(args, text):
    record = _read_json(text)
    code = hsc.code_from_record(record) if isinstance(record, dict) and "faces" in record else None
    m = code.map if code is not None else lattices.record_to_map(record)
    try:
        policy = args.m if args.m == "max" else int(args.m)
    except ValueError:
        raise ParseError(f"--m must be 'max' or an integer, got {args.m!r}") from None
    report = features.density_analysis(m, policy, code).to_dict()
    return report, report["verdict"]


def cmd_favg(args, text):
    value = features.favg_analysis(args.family, args.genus, args.vertices)
    asymptote = 4 if args.family == 4 else 6
    return {"family": args.family, "genus": args.genus, "V": args.vertices, "F_avg": str(value), "asymptote": asymptote}, f"F_avg={value}"


def cmd_classify(args, text):
    m = _read_map(text)
    result = hsc.classify(m)
    out = result.to_dict()
    if result.family == "Inadmissible":
        out["rejected"] = result.reason
        return out, f"inadmissible: {result.reason}", 1
    return out, result.family


def cmd_export_dot(args, text):
    record = _read_json(text)
    if "faces" in record:
        code = hsc.code_from_record(record)
        gens = [fg.generators for fg in code.faces]
        return lattices.export_dot(code.map, code.coloring, gens), "dot"
    return lattices.export_dot(lattices.record_to_map(record)), "dot"


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Parser that reports usage errors as JSON instead of exiting."""

    def error(self, message):
        raise _ArgError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="homcode", description="Homological stabilizer codes on embedded graphs.")
    parser.add_argument("--input", "-i", help="read JSON from this file instead of standard input")
    parser.add_argument("--output", "-o", help="write the result here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a lattice map from family:key=val,...")
    p.add_argument("spec")
    p.set_defaults(func=cmd_gen, needs_input=False)

    p = sub.add_parser("transform", help="dual or medial map")
    p.add_argument("kind", choices=["dual", "medial"])
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("color", help="proper face coloring")
    p.add_argument("--palette", type=int, choices=[2, 3], default=None)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("homology", help="genus, cycle/cut dimensions, Betti number")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("check", help="check a code JSON against the admissibility rules")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("build", help="build ktc or tcc:CLASS on a map")
    p.add_argument("family")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("params", help="code parameters, optionally with distance")
    p.add_argument("--distance-cap", type=int, default=None)
    p.add_argument("--full", action="store_true", help="also report generator counts")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("punch", help="remove face generators (--hole FACE[:SLOT], repeatable)")
    p.add_argument("--hole", action="append", default=[])
    p.set_defaults(func=cmd_punch)

    p = sub.add_parser("boundary", help="planar patch with colored boundaries")
    p.add_argument("--family", default="KTC", choices=["KTC", "TCC", "ktc", "tcc"])
    p.add_argument("--boundaries", default="4", help="count or comma-separated colors")
    p.add_argument("--size", type=int, default=3)
    p.add_argument("--with-code", action="store_true")
    p.set_defaults(func=cmd_boundary, needs_input=False)

    p = sub.add_parser("density", help="logical-density analysis of a map")
    p.add_argument("--m", default="max", help="generators per face: 'max' or an integer")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("favg", help="average face size from Euler's formula")
    p.add_argument("--family", type=int, choices=[3, 4], required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--vertices", "-V", type=int, required=True)
    p.set_defaults(func=cmd_favg, needs_input=False)

    p = sub.add_parser("classify", help="which code family a map supports")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("export-dot", help="Graphviz text for a map or code")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgError as exc:
        stdout.write(dumps({"error": str(exc)}))
        stderr.write(f"homcode: {exc}\n")
        return 2
    code = 0
    try:
        text = ""
        if getattr(args, "needs_input", True):
            if args.input:
                with open(args.input) as fh:
                    text = fh.read()
            else:
                text = stdin.read()
        result = args.func(args, text)
        if len(result) == 3:
            payload, summary, code = result
        else:
            payload, summary = result
        body = payload if isinstance(payload, str) else dumps(payload)
    except Inadmissible as exc:
        body = dumps({"rejected": exc.rule, "message": str(exc), "witness": exc.witness})
        summary, code = f"rejected by rule {exc.rule}: {exc}", 1
    except DomainError as exc:
        body = dumps({"rejected": type(exc).__name__, "message": str(exc), "witness": exc.witness})
        summary, code = f"rejected: {exc}", 1
    except (InputError, OSError) as exc:
        body = dumps({"error": str(exc), "kind": type(exc).__name__})
        summary, code = f"error: {exc}", 2
    except HomcodeError as exc:  # pragma: no cover - every error is one of the above
        body = dumps({"error": str(exc)})
        summary, code = f"error: {exc}", 2
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(body)
    else:
        stdout.write(body)
    stderr.write(f"homcode {args.command}: {summary}\n")
    return code


def entry() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # the reader closed the pipe early (e.g. `| head`); stay quiet
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        code = 0
    sys.exit(code)
