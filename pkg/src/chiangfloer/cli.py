"""
Command-line front end.

Every command builds a report ``{command, inputs, results, checks}`` and
prints it as text or, with ``--json``, as JSON.  Exit status is 0 when all
checks pass, 1 when any check fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__, checks, pearl, su2
from .checks import Check, check
from .gf2 import GF2Error
from .reps import RepError, classify, load_rep, m0_class, m0_of_rep

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _rep_arg(args, attr: str = "rep"):
    text = getattr(args, attr, None)
    if text is None and attr == "rep":
        text = getattr(args, "sum", None)
    if text is None:
        raise InputError("a representation is required (--rep FILE|JSON|SUM or --sum SUM)")
    try:
        return load_rep(text)
    except (RepError, GF2Error, ValueError, OSError) as exc:
        raise InputError(f"cannot load representation {text!r}: {exc}") from exc


def _pair(args):
    E0 = _rep_arg(args)
    E1 = load_rep(args.pair) if getattr(args, "pair", None) else E0
    return E0, E1


def _ranks(value):
    return value if value == pearl.OBSTRUCTED else list(value)


# commands

def cmd_verify(args) -> tuple[dict, dict, list[Check]]:
    groups = []
    for item in args.only or []:
        groups += [g for g in item.split(",") if g]
    try:
        results = checks.run(groups or None, seed=args.seed, tolerance=args.tolerance)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from exc
    flat = [c for group in results.values() for c in group]
    summary = {g: {"checks": len(cs), "failed": sum(not c.passed for c in cs)} for g, cs in results.items()}
    return {"only": groups or list(checks.GROUPS), "seed": args.seed}, summary, flat


def cmd_report(args):
    rep = _rep_arg(args)
    mult = classify(rep)
    profile = checks.rep_profile(rep)
    cf = checks.closed_forms(mult)
    results = {
        "dim": rep.dim,
        "classification": mult.as_dict(),
        "decomposition": str(mult),
        "m0": profile["m0"],
        "morse": {"end": list(profile["morse_end"]), "central": list(profile["morse_central"]),
                  "monodromy": list(profile["morse_monodromy"])},
        "floer": {"full": _ranks(profile["floer_full"]), "central": list(profile["floer_central"]),
                  "monodromy": list(profile["floer_monodromy"])},
    }
    obstructed = profile["floer_full"] == pearl.OBSTRUCTED
    found = [
        check("m0 class", cf["m0"], profile["m0"]),
        check("obstructed iff k2+k3+k4>0", cf["obstructed"], obstructed),
        check("central HF = 2m^2", cf["floer_central"], profile["floer_central"]),
        check("monodromy HF by M_V trichotomy", cf["floer_monodromy"], profile["floer_monodromy"]),
        check("monodromy HM = max k_i + trichotomy", cf["morse_monodromy"], profile["morse_monodromy"]),
    ]
    return {"rep": rep.name or "custom", "dim": rep.dim}, results, found


def cmd_classify(args):
    rep = _rep_arg(args)
    mult = classify(rep)
    return ({"rep": rep.name, "dim": rep.dim},
            {"multiplicities": mult.as_dict(), "decomposition": str(mult)}, [])


def cmd_m0(args):
    rep = _rep_arg(args)
    return ({"rep": rep.name, "dim": rep.dim},
            {"class": m0_class(rep), "matrix": m0_of_rep(rep).to_strings()}, [])


def cmd_floer(args):
    E0, E1 = _pair(args)
    if args.subcomplex == "monodromy" and not E0.same_matrices(E1):
        raise InputError("the monodromy subcomplex needs E0 == E1")
    cx = pearl.build_differentials(E0, E1)
    hf = pearl.floer_ranks(cx, args.subcomplex)
    blocks = pearl._block_bases(cx, args.subcomplex)
    dims = [cx.block] * 8 if blocks is None else [len(b) for b in blocks]
    results = {
        "obstructed": hf == pearl.OBSTRUCTED,
        "hf": None if hf == pearl.OBSTRUCTED else list(hf),
        "blocks": dict(zip(pearl.EVEN + pearl.ODD, dims)),
    }
    if args.emit_matrices:
        if args.paper_basis:
            D0, D1 = pearl.emit_paper_basis_matrices(cx)
        else:
            D0, D1 = pearl.restrict(cx, args.subcomplex) if hf != pearl.OBSTRUCTED else (cx.D0, cx.D1)
        results["D0"], results["D1"] = D0.to_strings(), D1.to_strings()
    inputs = {"rep": E0.name, "pair": E1.name, "subcomplex": args.subcomplex}
    return inputs, results, []


def cmd_morse(args):
    E0, E1 = _pair(args)
    if args.coefficients == "monodromy" and not E0.same_matrices(E1):
        raise InputError("monodromy coefficients need E0 == E1")
    h = pearl.morse_ranks(E0, E1, coefficients=args.coefficients)
    return {"rep": E0.name, "pair": E1.name, "coefficients": args.coefficients}, {"h": list(h)}, []


def cmd_matrices(args):
    rep = _rep_arg(args) if (args.rep or args.sum) else load_rep("D")
    cx = pearl.build_differentials(rep)
    D0, D1 = pearl.emit_paper_basis_matrices(cx)
    found = []
    if args.check:
        if not rep.same_matrices(load_rep("D")):
            raise InputError("--check compares against the printed matrices, which are for D only")
        found = checks.matrices_checks()
    return {"rep": rep.name}, {"D0": D0.to_strings(), "D1": D1.to_strings()}, found


def cmd_transport(args):
    table = su2.full_transport_table(args.convention, args.tolerance)
    results = {name: str(g) for name, g in table.items()}
    found = []
    if args.check:
        ref = su2.reference_table()
        found = [check(f"transport {name}", str(want), results.get(name, "missing"))
                 for name, want in ref.items()]
    return {"convention": args.convention, "tolerance": args.tolerance}, results, found


COMMANDS = {
    "verify": cmd_verify,
    "report": cmd_report,
    "classify": cmd_classify,
    "m0": cmd_m0,
    "floer": cmd_floer,
    "morse": cmd_morse,
    "matrices": cmd_matrices,
    "transport-table": cmd_transport,
}


# parsing and output

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="print the report as JSON")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                   help="seed for randomised checks (default 0)")
    p.add_argument("--tolerance", type=float, default=argparse.SUPPRESS,
                   help="quaternion tolerance for the transport oracle (default 1e-6)")
    return p


def _add_rep(p: argparse.ArgumentParser, required: bool = True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--rep", help="JSON file, inline JSON, or a symbolic sum such as V1*2+D")
    g.add_argument("--sum", help="symbolic sum such as V2+U4")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="chiangfloer", parents=[common],
                                     description="Floer cohomology of the Chiang Lagrangian with F2 local systems.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run the embedded acceptance suite")
    p.add_argument("--only", action="append", metavar="GROUP",
                   help=f"restrict to groups ({', '.join(checks.GROUPS)}); repeat or comma-separate")

    p = sub.add_parser("report", parents=[common], help="all invariants of one representation")
    _add_rep(p)

    p = sub.add_parser("classify", parents=[common], help="Krull-Schmidt multiplicities")
    _add_rep(p)

    p = sub.add_parser("m0", parents=[common], help="the obstruction section at the minimum")
    _add_rep(p)

    p = sub.add_parser("floer", parents=[common], help="Floer cohomology ranks")
    _add_rep(p)
    p.add_argument("--pair", help="second local system E1 (defaults to E0)")
    p.add_argument("--subcomplex", choices=pearl.SELECTORS, default="full")
    p.add_argument("--emit-matrices", action="store_true", help="include D0 and D1")
    p.add_argument("--paper-basis", action="store_true",
                   help="emit the full matrices with row-major matrix units per block")

    p = sub.add_parser("morse", parents=[common], help="Morse cohomology ranks h0..h3")
    _add_rep(p)
    p.add_argument("--pair", help="second local system E1 (defaults to E0)")
    p.add_argument("--coefficients", choices=("end", "central", "monodromy"), default="end")

    p = sub.add_parser("matrices", parents=[common], help="D0 and D1 in the printed basis")
    _add_rep(p, required=False)
    p.add_argument("--check", action="store_true", help="compare with the printed matrices")

    p = sub.add_parser("transport-table", parents=[common], help="transport table from path lifting")
    p.add_argument("--check", action="store_true", help="compare with the printed table")
    p.add_argument("--convention", choices=su2.CONVENTIONS, default="direct")
    return parser


def _format_value(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_format_value(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_format_value(x)}" for k, x in v.items()) + "}"
    return str(v)


def render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for k, v in report["inputs"].items():
        lines.append(f"  {k}: {_format_value(v)}")
    results = report["results"]
    if results:
        lines.append("results:")
        width = max(len(str(k)) for k in results)
        for k, v in results.items():
            if isinstance(v, list) and v and all(isinstance(r, str) for r in v) and len(v) > 4:
                lines.append(f"  {k}:")
                lines += [f"    {r}" for r in v]
            else:
                lines.append(f"  {str(k).ljust(width)}  {_format_value(v)}")
    if report["checks"]:
        lines.append("checks:")
        for c in report["checks"]:
            mark = "PASS" if c["pass"] else "FAIL"
            detail = "" if c["pass"] else f"  expected {_format_value(c['expected'])}, got {_format_value(c['actual'])}"
            lines.append(f"  {mark}  {c['name']}{detail}")
        failed = sum(not c["pass"] for c in report["checks"])
        lines.append(f"{len(report['checks']) - failed}/{len(report['checks'])} checks passed")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("seed", 0), ("tolerance", su2.DEFAULT_TOLERANCE)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        inputs, results, found = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (RepError, GF2Error, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = {"command": args.command, "inputs": inputs, "results": checks._jsonable(results),
              "checks": [c.to_dict() for c in found]}
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    return EXIT_OK if all(c.passed for c in found) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
