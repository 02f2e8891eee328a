"""Command-line front end.

Exit codes: 0 pass / positive verdict, 1 mathematical negative (identity
mismatch, NotFPure, NotDetected, tight-closure test failing), 2 usage or
parse error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from . import __version__
from .combinatorics import binomial_dim, partitions_of, ssyt_count
from .fsing import (
    Caps,
    HomogeneousIdeal,
    ResourceLimitExceeded,
    fedder_fpure,
    splitting_probe,
    tight_closure_probe,
)
from .gamma import BlockSpec, hilbert_determinantal, verify_main_identity
from .lattice import build_sigma, count_by_shape, count_multichains, iter_multichains, parse_minors
from .poly import PolyParseError, parse_poly, parse_polys
from .straighten import straighten

SCHEMA_VERSION = 1

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _table_schema(row_props: dict[str, Any]) -> dict[str, Any]:
    return {
        "type": "object",
        "required": ["schema", "command", "rows"],
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "command": {"type": "string"},
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": list(row_props),
                    "properties": row_props,
                    "additionalProperties": False,
                },
            },
        },
    }


_INT = {"type": "integer"}
_STR = {"type": "string"}
_BOOL = {"type": "boolean"}

# JSON output of every command is a table under "rows" plus command-specific
# summary fields.
SCHEMAS: dict[str, dict[str, Any]] = {
    "hilbert": _table_schema({"d": _INT, "gamma": _INT, "theta": _INT, "equal": _BOOL}),
    "straighten": _table_schema({"coefficient": _STR, "monomial": {"type": "array", "items": _STR}}),
    "sigma": _table_schema({"kind": _STR, "key": _STR, "count": _INT}),
    "fsing": _table_schema({"field": _STR, "value": {"type": ["string", "integer", "boolean", "null"]}}),
    "cauchy": _table_schema({"shape": _STR, "dim_m": _INT, "dim_n": _INT, "product": _INT}),
    "detvariety": _table_schema({"d": _INT, "hilbert": _INT}),
}


def _fmt_shape(shape: Sequence[int]) -> str:
    return "(" + ",".join(map(str, shape)) + ")"


def _emit(command: str, rows: list[dict[str, Any]], fmt: str, summary: dict[str, Any], text: str, out) -> None:
    if fmt == "json":
        doc = {"schema": SCHEMA_VERSION, "command": command, **summary, "rows": rows}
        out.write(json.dumps(doc, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow(
                    {
                        k: (str(v).lower() if isinstance(v, bool) else " ".join(v) if isinstance(v, list) else v)
                        for k, v in row.items()
                    }
                )
        out.write(buf.getvalue())
    else:
        out.write(text.rstrip("\n") + "\n")


def _caps(args: argparse.Namespace) -> Caps:
    if args.cap_degree < 1 or args.cap_dim < 1:
        raise UsageError("caps must be positive")
    return Caps(max_degree=args.cap_degree, max_dim=args.cap_dim)


def _check_degree(d: int, args: argparse.Namespace) -> None:
    if d < 0:
        raise UsageError("degrees must be nonnegative")
    if d > args.cap_degree:
        raise ResourceLimitExceeded(f"degree {d} > cap {args.cap_degree}")


def cmd_hilbert(args: argparse.Namespace, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    _check_degree(args.dmax, args)
    spec = BlockSpec.parse(args.m, args.a, args.tags)
    report = verify_main_identity(spec, args.n, args.dmax)
    rows = [{"d": r.d, "gamma": r.gamma, "theta": r.theta, "equal": r.equal} for r in report.rows]
    text = "d gamma theta equal\n" + "\n".join(
        f"{r['d']} {r['gamma']} {r['theta']} equal={str(r['equal']).lower()}" for r in rows
    )
    text += f"\n{'PASS' if report.passed else 'FAIL'} {spec} n={args.n}"
    summary = {
        "spec": {"m": spec.m, "n": args.n, "a": list(spec.a), "tags": list(spec.tags)},
        "passed": report.passed,
    }
    _emit("hilbert", rows, args.format, summary, text, out)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_straighten(args: argparse.Namespace, out) -> int:
    factors = parse_minors(args.factors)
    for a in factors:
        if not a.fits(args.m, args.n):
            raise UsageError(f"{a} is not a minor of a {args.m}x{args.n} matrix")
    _check_degree(sum(a.size for a in factors), args)
    result = straighten(factors, args.m, args.n)
    rows = [
        {"coefficient": str(c), "monomial": [str(a) for a in mono]}
        for c, mono in result.terms
    ]
    summary = {"m": args.m, "n": args.n, "input": [str(a) for a in factors]}
    _emit("straighten", rows, args.format, summary, str(result), out)
    return EXIT_OK


def cmd_sigma(args: argparse.Namespace, out) -> int:
    _check_degree(args.d, args)
    sigma = build_sigma(args.m, args.n)
    rows: list[dict[str, Any]] = [{"kind": "sigma_size", "key": "", "count": len(sigma)}]
    for d in range(args.d + 1):
        rows.append({"kind": "degree", "key": str(d), "count": count_multichains(sigma, d)})
    shapes = count_by_shape(args.m, args.n, args.d)
    for shape, count in shapes.items():
        rows.append({"kind": "shape", "key": _fmt_shape(shape), "count": count})
    total = count_multichains(sigma, args.d)
    lines = [f"sigma_size {len(sigma)}"]
    lines += [f"degree {r['key']} count {r['count']}" for r in rows if r["kind"] == "degree"]
    lines += [f"shape {r['key']} count {r['count']}" for r in rows if r["kind"] == "shape"]
    lines.append(f"total {total}")
    summary: dict[str, Any] = {"m": args.m, "n": args.n, "d": args.d, "total": total}
    if args.list:
        if total > args.cap_dim:
            raise ResourceLimitExceeded(f"{total} monomials > cap {args.cap_dim}")
        listing = [str(v) for v in iter_multichains(sigma, args.d)]
        summary["monomials"] = listing
        lines += listing
    _emit("sigma", rows, args.format, summary, "\n".join(lines), out)
    return EXIT_OK


def _read_ideal(args: argparse.Namespace) -> HomogeneousIdeal:
    if args.ideal_file:
        with open(args.ideal_file) as fh:
            text = fh.read()
    elif args.ideal is not None:
        text = args.ideal
    else:
        text = ""
    weights = None
    if args.weights:
        weights = tuple(int(x) for x in args.weights.split(","))
    gens = parse_polys(text, args.vars, args.p)
    nvars = args.vars if args.vars is not None else max((g.nvars for g in gens), default=0)
    return HomogeneousIdeal(nvars, args.p, tuple(gens), weights)


def cmd_fsing(args: argparse.Namespace, out) -> int:
    caps = _caps(args)
    ideal = _read_ideal(args)
    fields: list[tuple[str, Any]] = [("probe", args.probe), ("p", args.p), ("ideal", str(ideal))]
    if args.probe == "fpure":
        res = fedder_fpure(ideal, caps)
    elif args.probe == "split":
        c = parse_poly(args.c, ideal.nvars, args.p)
        res = splitting_probe(ideal, c, args.r, caps)
    else:
        x = parse_poly(args.x, ideal.nvars, args.p)
        c = parse_poly(args.c, ideal.nvars, args.p)
        steps = tight_closure_probe(ideal, x, c, args.rmax, caps)
        fields += [(f"member_q{s.q}", s.member) for s in steps]
        passed = all(s.member for s in steps)
        fields.append(("verdict", "AllMember" if passed else "NotMember"))
        return _emit_fields(fields, args, out, EXIT_OK if passed else EXIT_NEGATIVE)
    fields += [
        ("verdict", res.verdict.value),
        ("q", res.q),
        ("degree_bound", res.degree_bound),
        ("witness", str(res.witness) if res.witness is not None else None),
        ("truncation_degree", res.truncation_degree),
    ]
    if res.note:
        fields.append(("note", res.note))
    return _emit_fields(fields, args, out, EXIT_OK if res.positive else EXIT_NEGATIVE)


def _text_value(v: Any) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def _emit_fields(fields: list[tuple[str, Any]], args: argparse.Namespace, out, code: int) -> int:
    rows = [{"field": k, "value": v} for k, v in fields]
    text = "\n".join(f"{k}: {_text_value(v)}" for k, v in fields)
    _emit("fsing", rows, args.format, {}, text, out)
    return code


def cmd_cauchy(args: argparse.Namespace, out) -> int:
    if args.m < 1 or args.n < 1:
        raise UsageError("--m and --n must be positive")
    _check_degree(args.d, args)
    rows = []
    for lam in partitions_of(args.d, min(args.m, args.n)):
        a, b = ssyt_count(lam, args.m), ssyt_count(lam, args.n)
        rows.append({"shape": _fmt_shape(lam), "dim_m": a, "dim_n": b, "product": a * b})
    total = sum(r["product"] for r in rows)
    expected = binomial_dim(args.m, args.n, args.d)
    lines = [f"shape {r['shape']} {r['dim_m']} x {r['dim_n']} = {r['product']}" for r in rows]
    lines.append(f"total {total} binomial {expected} equal={str(total == expected).lower()}")
    summary = {"m": args.m, "n": args.n, "d": args.d, "total": total, "binomial": expected}
    _emit("cauchy", rows, args.format, summary, "\n".join(lines), out)
    return EXIT_OK if total == expected else EXIT_NEGATIVE


def cmd_detvariety(args: argparse.Namespace, out) -> int:
    if args.m < 1 or args.n < 1:
        raise UsageError("--m and --n must be positive")
    _check_degree(args.dmax, args)
    rows = [
        {"d": d, "hilbert": hilbert_determinantal(args.m, args.n, args.t, d)}
        for d in range(args.dmax + 1)
    ]
    text = "d hilbert\n" + "\n".join(f"{r['d']} {r['hilbert']}" for r in rows)
    _emit("detvariety", rows, args.format, {"m": args.m, "n": args.n, "t": args.t}, text, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--cap-degree", type=int, default=64, help="largest degree computed")
    common.add_argument("--cap-dim", type=int, default=4000, help="largest slice dimension")

    parser = argparse.ArgumentParser(
        prog="aslkit", description="Invariants of block groups on generic matrices."
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="compare both Hilbert functions")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True, help="block boundaries, e.g. 0,1,3")
    p.add_argument("--tags", required=True, help="block tags from G,S,T, e.g. T,S")
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("straighten", parents=[common], help="straighten a product of minors")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--factors", required=True, help='e.g. "[2|1],[1|2]"')
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("sigma", parents=[common], help="count standard monomials")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--list", action="store_true", help="also list the degree-d monomials")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("fsing", help="Frobenius splitting probes")
    probes = p.add_subparsers(dest="probe", required=True)
    for name, helptext in (
        ("fpure", "F-purity by the colon criterion"),
        ("split", "splitting of c*F^r"),
        ("tc", "tight closure evidence: c*x^q in I^[q]"),
    ):
        q = probes.add_parser(name, parents=[common], help=helptext)
        q.add_argument("--p", type=int, required=True)
        q.add_argument("--vars", type=int, default=None)
        q.add_argument("--ideal", default=None, help="generators separated by , or ;")
        q.add_argument("--ideal-file", default=None)
        q.add_argument("--weights", default=None, help="variable degrees, e.g. 2,3")
        if name == "split":
            q.add_argument("--c", required=True)
            q.add_argument("--r", type=int, default=1)
        if name == "tc":
            q.add_argument("--x", required=True)
            q.add_argument("--c", default="1")
            q.add_argument("--rmax", type=int, default=2)
        q.set_defaults(func=cmd_fsing)

    p = sub.add_parser("cauchy", parents=[common], help="Cauchy decomposition dimensions")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("detvariety", parents=[common], help="Hilbert function of rank <= t matrices")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(func=cmd_detvariety)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except ResourceLimitExceeded as exc:
        print(f"aslkit: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, PolyParseError, ValueError, OSError) as exc:
        print(f"aslkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())
