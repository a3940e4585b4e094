"""Exhaustive checks of the continued-fraction and fibre identities.

Each check returns an :class:`IdentityResult` listing up to a handful of
counterexamples; ``failures == 0`` is the passing condition.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator

from .contfrac import (IdentityError, blocks_of, convergents, dual_shift_identities,
                       hj_eval, hj_expand, inverse_residue, riemenschneider_dual)
from .singularities import CQS, B_invariant, B_of, e_invariant, ell, h_invariant


@dataclass
class IdentityResult:
    name: str
    checked: int = 0
    failures: int = 0
    examples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and self.failures == 0

    def record(self, good: bool, witness=None) -> None:
        self.checked += 1
        if not good:
            self.failures += 1
            if len(self.examples) < 5:
                self.examples.append(witness)


def coprime_pairs(n_max: int, q_min: int = 1) -> Iterator[tuple[int, int]]:
    for n in range(2, n_max + 1):
        for q in range(q_min, n):
            if gcd(n, q) == 1:
                yield n, q


def _block_sum(b) -> int:
    return 3 * sum(k + 1 for k in b.k) + 3 * sum(l + 1 for l in b.l)


def round_trip(n_max: int = 200) -> IdentityResult:
    r = IdentityResult("expansion round trip")
    for n, q in coprime_pairs(n_max):
        r.record(hj_eval(hj_expand(n, q)) == Fraction(n, q), (n, q))
    return r


def reversal(n_max: int = 60) -> IdentityResult:
    r = IdentityResult("q' reverses the expansion")
    for n, q in coprime_pairs(n_max):
        r.record(hj_expand(n, inverse_residue(n, q)).terms == hj_expand(n, q).terms[::-1], (n, q))
    return r


def convergent_determinant(n_max: int = 60) -> IdentityResult:
    r = IdentityResult("convergent determinant n_{s-1} q_s - n_s q_{s-1} = 1")
    for n, q in coprime_pairs(n_max):
        cv = [(1, 0)] + convergents(hj_expand(n, q))
        for (n0, q0), (n1, q1) in zip(cv, cv[1:]):
            r.record(n0 * q1 - n1 * q0 == 1, (n, q))
    return r


def convergent_gaps(n_max: int = 60) -> IdentityResult:
    """n_s/q_s decreases by 1/(q_{s-1} q_s); q_s/n_s increases by 1/(n_s n_{s-1})."""
    r = IdentityResult("convergent gaps")
    for n, q in coprime_pairs(n_max):
        cv = convergents(hj_expand(n, q))
        for (n0, q0), (n1, q1) in zip(cv, cv[1:]):
            down = Fraction(n0, q0) - Fraction(n1, q1) == Fraction(1, q0 * q1)
            up = Fraction(q1, n1) - Fraction(q0, n0) == Fraction(1, n1 * n0)
            r.record(down and up, (n, q))
        r.record(cv[-1] == (n, q), (n, q))
    return r


def duality_involution(n_max: int = 60) -> IdentityResult:
    r = IdentityResult("duality is an involution")
    for n, q in coprime_pairs(n_max):
        if 2 * q == n:
            continue
        dual, _ = riemenschneider_dual(n, q)
        back, _ = riemenschneider_dual(n, n - q)
        r.record(dual == hj_expand(n, n - q) and back == hj_expand(n, q), (n, q))
    return r


def duality_sum(n_max: int = 60) -> IdentityResult:
    r = IdentityResult("B(q/n) + B((n-q)/n) = 3 sum(k+1) + 3 sum(l+1)")
    for n, q in coprime_pairs(n_max):
        if 2 * q == n:
            continue
        _, b = riemenschneider_dual(n, q)
        r.record(B_invariant(CQS(n, q)) + B_invariant(CQS(n, n - q)) == _block_sum(b), (n, q))
    return r


def dual_shifts(n_max: int = 60) -> IdentityResult:
    """Appending k_t+3 or dropping the last block of the dual of n/(n-q')."""
    r = IdentityResult("shifted duals evaluate to (n+q)/(a+q') and q/a")
    for n, q in coprime_pairs(n_max, q_min=2):
        try:
            full, head, a = dual_shift_identities(n, q)
        except IdentityError:
            r.record(False, (n, q))
            continue
        qp = inverse_residue(n, q)
        r.record(full == Fraction(n + q, a + qp) and head == Fraction(q, a) and q * qp == 1 + a * n, (n, q))
    return r


def shifted_duality_sums(n_max: int = 60) -> IdentityResult:
    r = IdentityResult("B sums for the shifted duals")
    for n, q in coprime_pairs(n_max, q_min=2):
        qp = inverse_residue(n, q)
        a = (q * qp - 1) // n
        S = _block_sum(blocks_of(hj_expand(n, n - qp).terms))
        base = B_of(Fraction(n - qp, n))
        first = base + B_of(Fraction(a + qp, n + q)) == 1 - Fraction(1 + q * q, n * (n + q)) + S
        second = base + B_of(Fraction(a, q)) == -Fraction(1 + q * q + n * n, n * q) + S
        r.record(first and second, (n, q))
    return r


def B_monotone(n_max: int = 60) -> IdentityResult:
    """B(q_s/n_s) - B(q_t/n_t) >= s - t along convergents, equality iff s = t."""
    r = IdentityResult("B increases by more than 1 per convergent")
    for n, q in coprime_pairs(n_max):
        cv = convergents(hj_expand(n, q))
        Bs = [B_of(Fraction(qs, ns)) for ns, qs in cv]
        for s in range(len(cv)):
            for t in range(s + 1):
                d = Bs[s] - Bs[t]
                r.record(d >= s - t and ((d == s - t) == (s == t)), (n, q, s, t))
    return r


def B_floor(n_max: int = 60) -> IdentityResult:
    """b1 >= c implies B >= c + 2/c, with equality iff q/n = 1/c."""
    r = IdentityResult("B >= c + 2/c when b1 >= c")
    for n, q in coprime_pairs(n_max):
        x = CQS(n, q)
        B = B_invariant(x)
        for c in range(2, x.expansion[0] + 1):
            bound = c + Fraction(2, c)
            r.record(B >= bound and ((B == bound) == (q == 1 and n == c)), (n, q, c))
    return r


def B_minimum(n_max: int = 60) -> IdentityResult:
    r = IdentityResult("B >= 3 with equality only at 1/2")
    for n, q in coprime_pairs(n_max):
        B = B_invariant(CQS(n, q))
        r.record(B >= 3 and ((B == 3) == ((n, q) == (2, 1))), (n, q))
    return r


def q_prime_symmetry(n_max: int = 100) -> IdentityResult:
    r = IdentityResult("l, h, e, B agree for q and q'")
    for n, q in coprime_pairs(n_max):
        x, y = CQS(n, q), CQS(n, inverse_residue(n, q))
        r.record(all(f(x) == f(y) for f in (ell, h_invariant, e_invariant, B_invariant)), (n, q))
    return r


def h_vanishing(n_max: int = 60) -> IdentityResult:
    r = IdentityResult("h = 0 exactly for q = n-1")
    for n, q in coprime_pairs(n_max):
        r.record((h_invariant(CQS(n, q)) == 0) == (q == n - 1), (n, q))
    return r


CONTINUED_FRACTION_SUITE: dict[str, Callable[[], IdentityResult]] = {
    "round-trip": round_trip,
    "reversal": reversal,
    "determinant": convergent_determinant,
    "gaps": convergent_gaps,
    "involution": duality_involution,
    "duality-sum": duality_sum,
    "dual-shifts": dual_shifts,
    "shifted-sums": shifted_duality_sums,
    "B-monotone": B_monotone,
    "B-floor": B_floor,
    "B-minimum": B_minimum,
    "q-prime-symmetry": q_prime_symmetry,
    "h-vanishing": h_vanishing,
}


# fibre-level properties

def rational_pairs(n_max: int = 60) -> IdentityResult:
    """Type (q/n, (n-q)/n) over a rational central curve: everything but one
    curve contracts, so c = l(q/n) + l((n-q)/n) and delta = 0."""
    from .fibres import ReducibleFibre, contract, is_minus_one_fibre

    r = IdentityResult("genus-0 pairs contract to a smooth fibre")
    for n, q in coprime_pairs(n_max):
        F = ReducibleFibre.from_type([Fraction(q, n), Fraction(n - q, n)], central_genus=0)
        res = contract(F)
        final = [res.final_configuration.curves[i] for i in res.final_configuration.survivors()]
        good = (is_minus_one_fibre(F) and res.c == ell(CQS(n, q)) + ell(CQS(n, n - q)) and res.delta == 0
                and len(final) == 1 and final[0].self_intersection == 0)
        r.record(good, (n, q))
    return r


def classified_fibre_properties(genus_max: int = 6) -> IdentityResult:
    """Over the classified (-1)-fibres of genus 1..genus_max: delta > 2 apart
    from (1/2,1/3,1/6) and (1/2,1/4,1/4); c = 1 iff every b1 >= 3, and then
    delta >= 8/3 with equality only for (1/3,1/3,1/3); at most two strings
    lose components, in one of the named prefix patterns."""
    from .fibres import ReducibleFibre, classify_minus_one_fibres, contract, contraction_case

    allowed = {(Fraction(1, 6), Fraction(1, 3), Fraction(1, 2)): Fraction(4, 3),
               (Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)): Fraction(2)}
    thirds = (Fraction(1, 3),) * 3
    r = IdentityResult("classified (-1)-fibre bounds")
    for g in range(1, genus_max + 1):
        for row in classify_minus_one_fibres(g, labels={}):
            key = tuple(sorted(row.type))
            F = ReducibleFibre.from_type(row.type, fibre_genus=g)
            res = contract(F)
            small = row.delta <= 2
            r.record(not small or allowed.get(key) == row.delta, ("delta", g, key))
            all_big = all(x.expansion[0] >= 3 for x in F.strings)
            r.record((res.c == 1) == all_big, ("c=1", g, key))
            if res.c == 1:
                r.record(row.delta >= Fraction(8, 3) and ((row.delta == Fraction(8, 3)) == (key == thirds)),
                         ("c=1 delta", g, key))
            r.record(sum(1 for k in res.per_string if k) <= 2, ("strings", g, key))
            r.record(contraction_case(F, res) != "other", ("case", g, key))
    return r


FIBRE_SUITE: dict[str, Callable[[], IdentityResult]] = {
    "rational-pairs": rational_pairs,
    "classified-bounds": classified_fibre_properties,
}
