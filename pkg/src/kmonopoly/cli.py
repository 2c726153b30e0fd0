"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
input errors. ``--format structured`` prints one JSON record per run with a
fixed field order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bounds import applicable_bounds, exact_formula, size_lower_bound_experimental
from .edgelist import emit_edge_list, parse_edge_list
from .families import FamilySpec, generate
from .graph import VertexSet
from .partition import check_two_part_properties, find_monopoly_partition
from .predicates import PROBLEMS, SIGNED_PROBLEMS, SignedAssignment, first_violation, set_predicate
from .reduction import build_reduction, verify_reduction_identity
from .solver import solve
from .transforms import (
    CertificateError,
    monopoly_to_signed_total,
    powerful_to_signed,
    signed_to_powerful,
    signed_total_to_monopoly,
)

DIRECTIONS = ("monopoly-to-signed", "signed-to-monopoly", "powerful-to-signed",
              "signed-to-powerful")


class UsageError(ValueError):
    pass


def _parse_set(text: str, n: int) -> VertexSet:
    try:
        items = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--set must be comma-separated integers, got {text!r}") from None
    return VertexSet.of(n, items)


def _load_graph(args):
    if getattr(args, "gen", None):
        spec = FamilySpec.parse(args.gen)
        return generate(spec), spec, str(spec)
    if getattr(args, "infile", None):
        return parse_edge_list(Path(args.infile).read_text()), None, args.infile
    raise UsageError("give a graph with --in FILE or --gen SPEC")


def _need_k(args) -> int:
    if args.k is None:
        raise UsageError(f"--k is required for {args.command}")
    return args.k


def _solve_kw(args) -> dict:
    return {"workers": args.workers or os.cpu_count() or 1,
            "max_n_override": args.max_n_override}


def cmd_solve(args, g, spec) -> tuple[int, dict]:
    k = None if args.problem == "total-dom" else _need_k(args)
    kw = _solve_kw(args)
    if args.problem == "monopoly":
        kw["spec"] = spec
    report = solve(g, args.problem, k, **kw).as_dict()
    if args.problem in SIGNED_PROBLEMS and report["witness"] is not None:
        report["weight"] = report["optimum"]
    return 0, report


def cmd_verify(args, g, spec) -> tuple[int, dict]:
    k = None if args.problem == "total-dom" else _need_k(args)
    if args.set is None:
        raise UsageError("verify needs --set")
    s = _parse_set(args.set, g.n)
    valid = set_predicate(args.problem, k)(g, s)
    violator = None if valid else first_violation(args.problem, g, s, k)
    return (0 if valid else 1), {"problem": args.problem, "k": k, "set": s.sorted(),
                                 "valid": valid, "violator": violator}


def cmd_bounds(args, g, spec) -> tuple[int, dict]:
    k = _need_k(args)
    records = [b.as_dict() for b in applicable_bounds(g, k, spec)]
    out = {"k": k, "bounds": records}
    if k < 0:
        out["experimental_size_bound"] = size_lower_bound_experimental(g, k)
    return 0, out


def cmd_transform(args, g, spec) -> tuple[int, dict]:
    if args.set is None:
        raise UsageError("transform needs --set (the set, or B_1 of the assignment)")
    k = _need_k(args)
    s = _parse_set(args.set, g.n)
    out = {"direction": args.direction, "k": k, "strict": args.strict}
    try:
        if args.direction == "monopoly-to-signed":
            f = monopoly_to_signed_total(g, s, k, strict=args.strict)
            out.update(b1=f.b1.sorted(), b_minus1=f.b_minus1.sorted(), weight=f.weight,
                       level=2 * k)
        elif args.direction == "signed-to-monopoly":
            m = signed_total_to_monopoly(g, SignedAssignment.from_positive(s), k,
                                         strict=args.strict)
            out.update(set=m.sorted(), monopoly_k=k // 2)
        elif args.direction == "powerful-to-signed":
            f = powerful_to_signed(g, s, k, strict=args.strict)
            out.update(b1=f.b1.sorted(), b_minus1=f.b_minus1.sorted(), weight=f.weight,
                       level=k + 1)
        else:
            a = signed_to_powerful(g, SignedAssignment.from_positive(s), k, strict=args.strict)
            out.update(set=a.sorted())
    except CertificateError as exc:
        out.update(error=str(exc), violator=exc.vertex, case=exc.case)
        return 1, out
    return 0, out


def cmd_reduce(args, g, spec) -> tuple[int, dict]:
    red = build_reduction(g)
    out = {"h_n": red.h.n, "h_m": red.h.m, "added_vertices": red.added_vertices,
           "added_edges": red.added_edges}
    if args.out:
        Path(args.out).write_text(emit_edge_list(red.h))
        out["h_file"] = args.out
    else:
        out["h_edges"] = [list(e) for e in red.h.edges]
    if args.origin_map:
        Path(args.origin_map).write_text("\n".join(red.origin_lines()) + "\n")
        out["origin_map_file"] = args.origin_map
    code = 0
    if args.verify:
        kw = _solve_kw(args)
        chk = verify_reduction_identity(g, workers=kw["workers"],
                                        max_n_override=kw["max_n_override"])
        out.update(lhs=chk.lhs, rhs=chk.rhs, equal=chk.equal, status=chk.status)
        code = 0 if chk.equal else 1
    return code, out


def cmd_partition(args, g, spec) -> tuple[int, dict]:
    k = _need_k(args)
    res = find_monopoly_partition(g, k, args.r, check_bound=not args.no_bound_check)
    out = res.as_dict()
    if res.status == "found" and res.r == 2 and k == 0:
        rep = check_two_part_properties(g, *res.parts)
        out["two_part_properties"] = {
            "balanced_degrees": rep.balanced_degrees, "even_degrees": rep.even_degrees,
            "m_x": rep.m_x, "m_y": rep.m_y, "cut": rep.cut,
            "equal_sizes": rep.equal_sizes, "cut_identity": rep.cut_identity}
    return 0, out


def cmd_gen(args, g, spec) -> tuple[int, dict]:
    return 0, {"spec": str(spec), "n": g.n, "m": g.m, "edge_list": emit_edge_list(g)}


def cmd_formula(args, g, spec) -> tuple[int, dict]:
    if spec is None:
        raise UsageError("formula needs --gen SPEC")
    k = _need_k(args)
    return 0, {"spec": str(spec), "k": k, "value": exact_formula(spec, k)}


COMMANDS = {
    "solve": cmd_solve, "verify": cmd_verify, "bounds": cmd_bounds,
    "transform": cmd_transform, "reduce": cmd_reduce, "partition": cmd_partition,
    "gen": cmd_gen, "formula": cmd_formula,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--in", dest="infile", metavar="FILE", help="edge-list file")
    src.add_argument("--gen", metavar="SPEC", help="generator spec, e.g. cycle:8")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--k", type=int)
    common.add_argument("--workers", type=int, default=None,
                        help="parallel workers for large searches (default: all cores)")
    common.add_argument("--max-n-override", action="store_true",
                        help="allow exact search on more than 64 vertices")

    parser = argparse.ArgumentParser(prog="kmonopoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="exact minimum for a problem")
    p.add_argument("--problem", choices=PROBLEMS, default="monopoly")

    p = sub.add_parser("verify", parents=[common], help="check a candidate set")
    p.add_argument("--problem", choices=PROBLEMS, default="monopoly")
    p.add_argument("--set", help="comma-separated vertices (B_1 for signed problems)")

    sub.add_parser("bounds", parents=[common], help="closed-form bounds for M_k")

    p = sub.add_parser("transform", parents=[common], help="convert certificates")
    p.add_argument("--direction", choices=DIRECTIONS, required=True)
    p.add_argument("--set", help="the set, or B_1 of the signed assignment")
    p.add_argument("--strict", action=argparse.BooleanOptionalAction, default=True)

    p = sub.add_parser("reduce", parents=[common], help="build the 0-monopoly gadget graph")
    p.add_argument("--out", metavar="FILE", help="write H as an edge list")
    p.add_argument("--origin-map", metavar="FILE", help="write the vertex origin sidecar")
    p.add_argument("--verify", action="store_true", help="check the cardinality identity")

    p = sub.add_parser("partition", parents=[common], help="partition V into k-monopolies")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--no-bound-check", action="store_true")

    p = sub.add_parser("gen", parents=[common], help="print a generated graph")
    p.add_argument("spec", nargs="?", help="generator spec (alternative to --gen)")

    sub.add_parser("formula", parents=[common], help="closed-form value for a family")
    return parser


def run(args: argparse.Namespace) -> tuple[int, dict]:
    if args.command == "gen" and args.spec and not args.gen:
        args.gen = args.spec
    g, spec, source = _load_graph(args)
    code, body = COMMANDS[args.command](args, g, spec)
    report = {"command": args.command, "graph": {"source": source, "n": g.n, "m": g.m}}
    report.update(body)
    return code, report


def _text(report: dict) -> str:
    if report["command"] == "gen":
        return report["edge_list"].rstrip("\n")
    lines = []
    for key, value in report.items():
        if key == "command":
            continue
        if key == "bounds":
            for b in value:
                tag = "" if b["proven"] else ", unproven"
                lines.append(f"bound {b['name']} ({b['side']}{tag}): {b['value']}")
        elif key == "notes":
            lines += [f"note: {x}" for x in value]
        elif isinstance(value, dict):
            lines.append(f"{key}: " + ", ".join(f"{a}={b}" for a, b in value.items()))
        elif isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{key}: " + " | ".join(",".join(map(str, p)) for p in value))
        elif isinstance(value, list):
            lines.append(f"{key}: " + ",".join(map(str, value)))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, report = run(args)
    except (ValueError, OSError) as exc:  # usage, parse, graph and range errors
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "structured":
        print(json.dumps(report))
    else:
        print(_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
