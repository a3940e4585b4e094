"""Command-line front end.

    isofib cqs 11 7
    isofib appendix-b --max-n 14
    isofib classify 2 --format json
    isofib fibration --group psl2:7 --v1 "genus=0; a,b,(a*b)^-1" --v2 same
    isofib construct --set 1/2,1/3,1/6 --q 1
    isofib verify --only groups

Exit codes: 0 success, 1 a check or bound failed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .actions import parse_vector
from .fibres import bound_check, classify_minus_one_fibres, minimal_model_invariants
from .groups import GroupError, parse_group_spec
from .quotient import StandardIsotrivialFibration, invariants, construct_cyclic_fibration
from .rationals import mixed, to_json
from .singularities import TableRow, singularity_table, table_row
from .verify import MUTATIONS, SECTIONS, run_verification


class UsageError(Exception):
    """Invalid input; reported on stderr with exit code 2."""


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _frac_list(xs) -> str:
    return "(" + ", ".join(str(x) for x in xs) + ")"


# cqs / table

def row_json(r: TableRow) -> dict:
    return {"n": r.n, "q": r.q, "expansion": list(r.expansion), "q_prime": r.q_prime,
            "B": to_json(r.B), "h": to_json(r.h)}


def row_text(r: TableRow) -> str:
    return f"{r.n:>3} {r.q:>3}  [{','.join(map(str, r.expansion))}]  {r.q_prime}  {mixed(r.B)}  {mixed(r.h)}"


def cmd_cqs(args) -> tuple[object, str, int]:
    try:
        r = table_row(args.n, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return row_json(r), row_text(r), 0


def cmd_table(args):
    if args.max_n < 2:
        raise UsageError("--max-n must be at least 2")
    rows = singularity_table(args.max_n)
    header = "  n   q  expansion  q'  B  h"
    return [row_json(r) for r in rows], "\n".join([header] + [row_text(r) for r in rows]), 0


# classify

def cmd_classify(args):
    genus = args.genus if args.genus is not None else args.genus_pos
    if genus is None:
        raise UsageError("give a genus, either positionally or with --genus")
    try:
        rows = classify_minus_one_fibres(genus)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = [{"genus": r.genus, "type": [str(f) for f in r.type], "c": r.c,
             "delta": to_json(r.delta), "label": r.label} for r in rows]
    lines = [f"(-1)-fibres over a base of genus {genus}: {len(rows)} types"]
    for r in rows:
        lines.append(f"  {_frac_list(r.type):<24} c={r.c}  delta={mixed(r.delta):<8} {r.label or ''}".rstrip())
    return data, "\n".join(lines), 0


# fibration analysis

def analyse(F: StandardIsotrivialFibration) -> dict:
    inv = invariants(F)
    mm = minimal_model_invariants(F)
    bound = bound_check(F, strict=False)
    fibres = []
    for r in mm.fibres:
        fb = r.fibre
        fibres.append({
            "branch": fb.branch, "multiplicity": fb.multiplicity, "central_genus": fb.central_genus,
            "type": [str(t) for t in fb.type], "Y2": fb.self_intersection,
            "strings": [{"n": x.n, "q": x.q} for x in fb.strings],
            "minus_one": r.minus_one, "c": r.c, "delta": to_json(r.delta), "case": r.case,
            "ruled_signal": r.ruled_signal,
        })
    return {
        "group": F.group.name, "g1": F.g1, "g2": F.g2,
        "sing": [{"n": x.n, "q": x.q, "mult": m} for x, m in F.sing.items()],
        "quasi_bundle": F.is_quasi_bundle(),
        "invariants": {"K2": inv.K2, "e": inv.e, "q": inv.q, "pg": inv.pg, "chi": inv.chi},
        "fibres": fibres,
        "minimal_model": {"K2": mm.K2, "e": mm.e, "chi": mm.chi},
        "bound": {"K2_hat": bound.K2_hat, "eight_chi": 8 * bound.chi, "equality": bound.equality,
                  "strong_bound_applies": bound.strong_bound_applies,
                  "exceptions": [e for e in bound.exceptions if e], "violations": list(bound.violations)},
    }


def analysis_text(a: dict) -> str:
    inv, mm, b = a["invariants"], a["minimal_model"], a["bound"]
    sing = " + ".join((f"{s['mult']}x" if s["mult"] > 1 else "") + f"1/{s['n']}(1,{s['q']})" for s in a["sing"])
    lines = [f"group {a['group']}, g(C1) = {a['g1']}, g(C2) = {a['g2']}",
             f"Sing(T) = {sing or '0'}",
             f"K^2 = {inv['K2']}  e = {inv['e']}  chi = {inv['chi']}  pg = {inv['pg']}  q = {inv['q']}"]
    if a["quasi_bundle"]:
        lines.append("quasi-bundle: K^2 = 8 chi")
    for f in a["fibres"]:
        kind = "(-1)-fibre" if f["minus_one"] else "fibre"
        extra = f"  case {f['case']}" if f["case"] else ""
        lines.append(f"{kind} over branch point {f['branch']}: type ({', '.join(f['type'])}), "
                     f"Y^2 = {f['Y2']}, multiplicity {f['multiplicity']}, "
                     f"c = {f['c']}, delta = {mixed(Fraction(f['delta']))}{extra}")
    lines.append(f"minimal model: K^2 = {mm['K2']}  e = {mm['e']}  (8 chi = {b['eight_chi']})")
    if b["violations"]:
        lines += [f"BOUND VIOLATION: {v}" for v in b["violations"]]
    else:
        lines.append("bounds: ok")
    return "\n".join(lines)


def cmd_fibration(args):
    try:
        G = parse_group_spec(args.group)
        v1 = parse_vector(G, args.v1)
        v2 = v1 if args.v2.strip().lower() == "same" else parse_vector(G, args.v2)
        F = StandardIsotrivialFibration(v1, v2)
        F.g1, F.g2
    except (ValueError, GroupError) as exc:
        raise UsageError(str(exc)) from exc
    a = analyse(F)
    return a, analysis_text(a), 1 if a["bound"]["violations"] else 0


def cmd_construct(args):
    try:
        fractions = [Fraction(s.replace("−", "-")) for s in args.set.split(",") if s.strip()]
        F = construct_cyclic_fibration(fractions, args.q)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc
    a = analyse(F)
    a["construction"] = {"set": [str(f) for f in fractions], "q": args.q, "n": F.group.N}
    return a, analysis_text(a), 1 if a["bound"]["violations"] else 0


# verify

def cmd_verify(args):
    only = [s.strip() for s in args.only.split(",") if s.strip()] if args.only else None
    try:
        report = run_verification(only, args.mutate)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = {"ok": report.ok, "checks": [{"section": c.section, "name": c.name, "passed": c.passed,
                                         "detail": c.detail} for c in report.checks]}
    lines = [f"{'PASS' if c.passed else 'FAIL'}  [{c.section}] {c.name}" + (f"  ({c.detail})" if c.detail else "")
             for c in report.checks]
    failed = report.failures()
    lines.append(f"{len(report.checks) - len(failed)}/{len(report.checks)} checks passed")
    return data, "\n".join(lines), 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="isofib", description=__doc__.split("\n")[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cqs", parents=[fmt], help="one row of the singularity table")
    s.add_argument("n", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_cqs)

    s = sub.add_parser("appendix-b", aliases=["table"], parents=[fmt], help="all rows 1/n(1,q) with n <= max-n")
    s.add_argument("--max-n", type=int, default=14)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("classify", parents=[fmt], help="(-1)-fibres over a base of the given genus")
    s.add_argument("genus_pos", type=int, nargs="?", metavar="genus")
    s.add_argument("--genus", type=int)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("fibration", parents=[fmt], help="analyse (C1 x C2)/G from two generating vectors")
    s.add_argument("--group", required=True, help="e.g. psl2:7, cyclic:6, abelian:2x2, registry:32,9")
    s.add_argument("--v1", required=True, help='e.g. "genus=0; a,b,(a*b)^-1"')
    s.add_argument("--v2", required=True, help='a vector, or "same"')
    s.set_defaults(func=cmd_fibration)

    s = sub.add_parser("construct", parents=[fmt], help="cyclic fibration realizing a (-1)-fibre type")
    s.add_argument("--set", required=True, help="comma-separated fractions summing to 1")
    s.add_argument("--q", type=int, default=0, help="genus of the base C2/G")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", parents=[fmt], help="run the reference checks")
    s.add_argument("--only", help="comma-separated sections: " + ", ".join(SECTIONS))
    s.add_argument("--mutate", choices=sorted(MUTATIONS), help="inject a known error")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data, text, code = args.func(args)
    except UsageError as exc:
        print(f"isofib {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"isofib {args.command}: check failed: {exc}", file=sys.stderr)
        return 1
    print(dump(data) if args.format == "json" else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
