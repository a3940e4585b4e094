"""The aggregate verification suite behind ``isofib verify``.

Every check compares a computed value with frozen reference data from
``isofib/data`` or with an exact identity.  Sections can be run alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import golden
from .actions import parse_vector
from .fibres import (ReducibleFibre, bound_check, classify_minus_one_fibres, contract,
                     cyclic_signatures, delta, is_minus_one_fibre,
                     minimal_model_invariants)
from .groups import parse_group_spec
from .identities import CONTINUED_FRACTION_SUITE, FIBRE_SUITE
from .quotient import (StandardIsotrivialFibration, fibres_of, invariants, construct_cyclic_fibration)
from .randomized import RANDOM_SUITES
from .singularities import SingularLocus, TableRow, singularity_table, table_row


@dataclass(frozen=True)
class Check:
    section: str
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, section: str, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(section, name, bool(passed), detail))


# singularity table

def check_cqs_table(report: VerificationReport, row_fn: Callable[[int, int], TableRow] = table_row) -> None:
    s = "cqs-table"
    rows = golden.cqs_rows()
    for ref in rows:
        got = row_fn(ref.n, ref.q)
        diffs = [name for name, a, b in (("expansion", got.expansion, ref.expansion),
                                         ("q'", got.q_prime, ref.q_prime),
                                         ("B", got.B, ref.B), ("h", got.h, ref.h)) if a != b]
        report.add(s, f"row 1/{ref.n}(1,{ref.q})", not diffs,
                   "mismatch in " + ", ".join(diffs) if diffs else "")
    table = singularity_table(14)
    listed = {(r.n, r.q) for r in rows}
    report.add(s, "every reference row is produced by the full table", listed <= {(r.n, r.q) for r in table})
    report.add(s, "27 rows for n <= 9", len(singularity_table(9)) == 27, str(len(singularity_table(9))))


# (-1)-fibre classification

def check_classification(report: VerificationReport) -> None:
    s = "classification"
    for g in (1, 2, 3):
        ref = golden.minus_one_rows(g)
        got = classify_minus_one_fibres(g)
        report.add(s, f"genus {g}: {len(ref)} types", len(got) == len(ref), f"found {len(got)}")
        for a, b in zip(got, ref):
            same = (tuple(sorted(a.type)) == tuple(sorted(b.type)) and a.c == b.c and a.delta == b.delta
                    and a.label == b.label)
            report.add(s, f"genus {g}: type ({', '.join(map(str, b.type))})", same,
                       f"c={a.c} delta={a.delta} label={a.label}")
        orders = [2, 3, 4, 6] if g == 1 else range(2, 4 * g + 3)
        found = sorted((n, ms) for n in orders for ms in cyclic_signatures(g, n))
        report.add(s, f"genus {g}: cyclic actions with rational quotient", found == golden.cyclic_actions(g),
                   f"{len(found)} signatures")
    try:
        classify_minus_one_fibres(0)
        report.add(s, "genus 0 is rejected", False)
    except ValueError:
        report.add(s, "genus 0 is rejected", True)


# worked examples

def _fibration(spec: dict) -> StandardIsotrivialFibration:
    G = parse_group_spec(spec["group"])
    return StandardIsotrivialFibration(parse_vector(G, spec["v1"]), parse_vector(G, spec["v2"]))


def _check_invariants(report, s, label, F, expected: dict) -> None:
    inv = invariants(F)
    got = {k: getattr(inv, k) for k in expected}
    report.add(s, f"{label}: invariants", got == expected, str(got))


def check_examples(report: VerificationReport) -> None:
    s = "examples"
    ex = golden.examples()
    for key in ("psl2_7", "nodes_z2"):
        spec = ex[key]
        F = _fibration(spec)
        report.add(s, f"{key}: singular locus", F.sing == SingularLocus.parse(spec["sing"]), str(F.sing))
        _check_invariants(report, s, key, F, spec["invariants"])
        fibres = fibres_of(F, 2)
        report.add(s, f"{key}: {len(spec['fibres'])} reducible fibres", len(fibres) == len(spec["fibres"]))
        for fb, ref in zip(fibres, spec["fibres"]):
            res = contract(fb)
            ok = ([str(t) for t in fb.type] == ref["type"] and fb.self_intersection == ref["Y2"]
                  and is_minus_one_fibre(fb) == ref["minus_one"])
            if "c" in ref:
                ok = ok and res.c == ref["c"]
            if "delta" in ref:
                ok = ok and res.delta == Fraction(ref["delta"])
            if "central_genus" in ref:
                ok = ok and fb.central_genus == ref["central_genus"]
            report.add(s, f"{key}: fibre {fb}", ok, f"Y^2={fb.self_intersection} c={res.c} delta={res.delta}")
        mm = minimal_model_invariants(F)
        report.add(s, f"{key}: minimal model K^2 = {spec['K2_min']}", mm.K2 == spec["K2_min"], str(mm.K2))
        report.add(s, f"{key}: bound report clean", bound_check(F, strict=False).ok)

    for key in ("construct_pair", "construct_equal"):
        for case in ex[key]["cases"]:
            F = construct_cyclic_fibration(case["set"], case["q"])
            _check_invariants(report, s, f"{key} n={case['n']}", F, case["invariants"])
            mm = minimal_model_invariants(F)
            good = mm.K2 == case["K2_min"] and ("e_min" not in case or mm.e == case["e_min"])
            report.add(s, f"{key} n={case['n']}: minimal model", good, f"K^2={mm.K2} e={mm.e}")
            report.add(s, f"{key} n={case['n']}: {case['n']} (-1)-fibres",
                       sum(r.minus_one for r in mm.fibres) == case["n"] == len(mm.fibres))

    c = ex["construct_thirds_q2"]
    _check_invariants(report, s, "thirds with handle genus 2", construct_cyclic_fibration(c["set"], c["q"]), c["invariants"])
    for case in ex["delta_equal_strings"]["cases"]:
        n, g = case["n"], case["central_genus"]
        F = ReducibleFibre.from_type([Fraction(1, n)] * n, central_genus=g)
        report.add(s, f"delta of (1/{n} x {n}), central genus {g}", delta(F) == Fraction(case["delta"]),
                   str(delta(F)))


def check_identities(report: VerificationReport) -> None:
    for name, fn in {**CONTINUED_FRACTION_SUITE, **FIBRE_SUITE}.items():
        r = fn()
        report.add("identities", f"{name}: {r.name}", r.ok,
                   f"{r.checked} checked, {r.failures} failed" + (f", e.g. {r.examples[0]}" if r.examples else ""))


def check_groups(report: VerificationReport) -> None:
    from .exclusions import exclusion_suite

    for c in exclusion_suite().checks:
        report.add("groups", f"({c.case}) {c.name}", c.passed, c.detail)


def check_random(report: VerificationReport) -> None:
    for name, fn in RANDOM_SUITES.items():
        r = fn()
        report.add("random", f"{name}: {r.name}", r.ok,
                   f"{r.samples} samples, {r.checks} checks, {len(r.failures)} failed")


SECTIONS: dict[str, Callable[[VerificationReport], None]] = {
    "cqs-table": check_cqs_table,
    "classification": check_classification,
    "examples": check_examples,
    "identities": check_identities,
    "groups": check_groups,
    "random": check_random,
}


def _negated_h(n: int, q: int) -> TableRow:
    r = table_row(n, q)
    return TableRow(r.n, r.q, r.expansion, r.q_prime, r.B, -r.h)


MUTATIONS = {"h-sign": _negated_h}


def run_verification(only: list[str] | None = None, mutate: str | None = None) -> VerificationReport:
    """Run the named sections (all by default) in a fixed order.

    ``mutate="h-sign"`` flips the sign of h in the table check, which must
    then report mismatches; it exists to show the suite can fail.
    """
    names = list(SECTIONS) if not only else only
    unknown = [n for n in names if n not in SECTIONS]
    if unknown:
        raise ValueError(f"unknown section(s) {', '.join(unknown)}; choose from {', '.join(SECTIONS)}")
    if mutate is not None and mutate not in MUTATIONS:
        raise ValueError(f"unknown mutation {mutate!r}; choose from {', '.join(MUTATIONS)}")
    report = VerificationReport()
    for name in SECTIONS:
        if name not in names:
            continue
        if name == "cqs-table" and mutate:
            check_cqs_table(report, MUTATIONS[mutate])
        else:
            SECTIONS[name](report)
    return report
