"""Command-line front end.

Four subcommands: ``epr-run`` executes the full scenario and prints the
contrast between the two semantics, ``valuate`` answers one proposition
for one state, ``lattice`` exposes the subspace operations for ad-hoc
queries, and ``paper-check`` prints the fixture audit. Output is
deterministic: identical invocations produce byte-identical bytes.

Exit codes: 0 success, 1 domain error (e.g. an impossible verification),
2 usage error (bad flags or unparseable input).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import ParseError, QgapError
from .fixtures import audit, render_audit_table
from .lattice import Subspace
from .linalg import StateVector
from .propositions import parse_atom, parse_proposition, compile_proposition, valuate
from .scalars import parse_scalar
from .scenario import Axis, render_report, report_to_dict, run_epr, singlet, standard_context

_SEMANTICS = ("super", "classical", "both")


def _parse_state(text: str) -> StateVector:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("empty state vector")
    return StateVector(tuple(parse_scalar(p) for p in parts))


def _parse_span(text: str) -> Subspace:
    vectors = [
        _parse_state(chunk) for chunk in text.split(";") if chunk.strip()
    ]
    if not vectors:
        raise ParseError("a span needs at least one vector")
    return Subspace.from_vectors(vectors[0].dim, vectors)


def _parse_query(text: str):
    return tuple(parse_atom(part) for part in text.split(",") if part.strip())


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgap",
        description="Exact quantum-logic valuations with truth-value gaps for the spin singlet.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("epr-run", help="run the two-particle scenario and report both semantics")
    run.add_argument("--axis", choices=[a.value for a in Axis], default="z")
    run.add_argument("--query", default="", help="comma-separated atoms, e.g. B.z.down,B.x.up")
    run.add_argument("--semantics", choices=_SEMANTICS, default="both")
    run.add_argument("--output", choices=("table", "json"), default="table")

    val = sub.add_parser("valuate", help="valuate one proposition in a state (default: the singlet)")
    val.add_argument("--prop", required=True, help='e.g. "A.z.up & B.z.down ^ A.z.down & B.z.up"')
    val.add_argument("--state", default=None, help="comma-separated rational entries, e.g. 0,1,0,0")
    val.add_argument("--output", choices=("table", "json"), default="table")

    lat = sub.add_parser("lattice", help="subspace lattice queries on explicit spans")
    lat.add_argument("--op", choices=("meet", "join", "sum", "complement", "leq", "contains"), required=True)
    lat.add_argument("--a", required=True, help="span: vectors separated by ';', entries by ','")
    lat.add_argument("--b", default=None, help="second span (meet/join/sum/leq)")
    lat.add_argument("--vector", default=None, help="vector for the contains query")
    lat.add_argument("--output", choices=("table", "json"), default="table")

    chk = sub.add_parser("paper-check", help="audit the transcribed source displays")
    chk.add_argument("--output", choices=("table", "json"), default="table")

    return parser


def _cmd_epr_run(args: argparse.Namespace) -> int:
    report = run_epr(Axis(args.axis), _parse_query(args.query))
    if args.output == "json":
        _emit_json(report_to_dict(report, args.semantics))
    else:
        print(render_report(report, args.semantics), end="")
    return 0


def _cmd_valuate(args: argparse.Namespace) -> int:
    prop = parse_proposition(args.prop)
    state = _parse_state(args.state) if args.state else singlet(Axis.Z)
    value = valuate(state, compile_proposition(prop, standard_context()))
    if args.output == "json":
        _emit_json(
            {
                "proposition": str(prop),
                "state": [str(e) for e in state.entries],
                "valuation": value.value,
            }
        )
    else:
        print(value.value)
    return 0


def _cmd_lattice(args: argparse.Namespace) -> int:
    a = _parse_span(args.a)
    op = args.op
    if op in ("meet", "join", "sum", "leq") and args.b is None:
        raise ParseError(f"--op {op} needs --b")
    if op == "contains" and args.vector is None:
        raise ParseError("--op contains needs --vector")

    if op == "complement":
        result: object = a.orthocomplement()
    elif op == "contains":
        result = a.contains(_parse_state(args.vector))
    else:
        b = _parse_span(args.b)
        result = {
            "meet": a.meet,
            "join": a.join,
            "sum": a.sum,
            "leq": a.leq,
        }[op](b)

    if isinstance(result, bool):
        text = "true" if result else "false"
        payload: object = result
    else:
        text = str(result)
        payload = [[str(e) for e in v.entries] for v in result.basis]
    if args.output == "json":
        _emit_json({"op": op, "result": payload})
    else:
        print(text)
    return 0


def _cmd_paper_check(args: argparse.Namespace) -> int:
    results = audit()
    if args.output == "json":
        _emit_json({"fixtures": [r.to_dict() for r in results]})
    else:
        print(render_audit_table(results), end="")
    return 0


_DISPATCH = {
    "epr-run": _cmd_epr_run,
    "valuate": _cmd_valuate,
    "lattice": _cmd_lattice,
    "paper-check": _cmd_paper_check,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ParseError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except QgapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
