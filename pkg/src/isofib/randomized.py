"""Seeded random sampling of generating vectors and fibrations, and the two
randomized suites built on them: fixed-point counts (model vs closed form)
and structural invariants of the resulting surfaces."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterator

from .actions import (GeneratingVector, covering_genus, fix_count, fix_count_rot, parse_vector,
                      random_generating_vector)
from .fibres import BoundViolation, bound_check, central_self_intersection
from .groups import (FiniteGroup, abelian, alternating, cyclic, dihedral, psl2, registry,
                     symmetric)
from .quotient import (StandardIsotrivialFibration, fibres_of, integrality_checks,
                       invariants, singular_locus_by_double_cosets)
from .singularities import B_invariant, SingularLocus


def group_pool() -> list[FiniteGroup]:
    """Groups of order at most 96 with varied conjugacy structure."""
    pool = [cyclic(n) for n in (2, 3, 4, 5, 6, 7, 8, 9, 10, 12)]
    pool += [abelian([2, 2]), abelian([2, 4]), abelian([3, 3]), abelian([2, 6]), abelian([2, 2, 2])]
    pool += [dihedral(m) for m in (3, 4, 5, 6, 8)]
    pool += [symmetric(3), symmetric(4), alternating(4), alternating(5)]
    pool += [registry(8, 3), registry(16, 6), registry(24, 8), registry(32, 9)]
    return pool


def random_vectors(rng: random.Random, count: int, pool: list[FiniteGroup] | None = None
                   ) -> Iterator[GeneratingVector]:
    pool = pool or group_pool()
    made = 0
    while made < count:
        G = rng.choice(pool)
        genus = rng.choice((0, 0, 0, 1))
        r = rng.randint(0 if genus else 2, 5)
        V = random_generating_vector(G, rng, r, genus)
        if V is None or not V.branch:
            continue
        try:
            covering_genus(V)
        except ValueError:
            continue
        made += 1
        yield V


def random_fibrations(rng: random.Random, count: int, max_order: int = 100
                      ) -> Iterator[StandardIsotrivialFibration]:
    pool = [G for G in group_pool() if G.N <= max_order]
    made = 0
    while made < count:
        G = rng.choice(pool)
        vs = []
        for _ in range(2):
            genus = rng.choice((0, 0, 1))
            # keep the number of marked points moderate on big groups
            r = rng.randint(2, 4 if G.N <= 24 else 3)
            vs.append(random_generating_vector(G, rng, r, genus))
        if None in vs:
            continue
        made += 1
        yield StandardIsotrivialFibration(*vs)


@dataclass
class SuiteResult:
    name: str
    samples: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)
    only_node_cases: int = 0

    @property
    def ok(self) -> bool:
        return self.samples > 0 and not self.failures

    def check(self, good: bool, witness) -> None:
        self.checks += 1
        if not good:
            self.failures.append(witness)


def fixed_point_suite(seed: int = 20240607, count: int = 120) -> SuiteResult:
    """fixed_point_model against the normalizer and centralizer formulas, for
    every nonidentity element and every unit rotation exponent."""
    rng = random.Random(seed)
    res = SuiteResult("fixed points: model against closed forms")
    for V in random_vectors(rng, count):
        G, M = V.group, V.model
        res.samples += 1
        for h in range(1, G.N):
            m = int(G.orders[h])
            res.check(M.count(h) == fix_count(V, h), (repr(V), G.labels[h]))
            for q in range(1, m):
                if gcd(q, m) == 1:
                    res.check(M.count(h, q) == fix_count_rot(V, h, q), (repr(V), G.labels[h], q))
    return res


def structural_checks(F: StandardIsotrivialFibration, res: SuiteResult) -> None:
    tag = repr(F)
    sing = F.sing
    res.check(singular_locus_by_double_cosets(F) == sing, ("double-coset count", tag))
    res.check(F.swapped().sing == sing.dual(), ("swap gives q'", tag))
    report = integrality_checks(F, strict=False)
    res.check(report.ok, ("integrality", tag, report))
    res.check(report.nodes_ok, ("even nodes", tag))
    if report.only_nodes:
        res.only_node_cases += 1
    try:
        inv = invariants(F)
    except ArithmeticError as exc:
        res.check(False, ("invariants", tag, str(exc)))
        return
    res.check(inv.K2 + inv.e == 12 * inv.chi, ("Noether", tag))
    res.check(inv.K2 == 8 * inv.chi - sing.total(B_invariant) / 3, ("K^2 = 8 chi - B/3", tag))
    fibres = fibres_of(F, 2)
    union = SingularLocus(x for fb in fibres for x in fb.strings)
    res.check(union == sing, ("strings cover Sing(T)", tag))
    for fb in fibres:
        res.check(fb.type_sum.denominator == 1 and central_self_intersection(fb) == -fb.type_sum,
                  ("integral Y^2", tag, str(fb)))
    try:
        b = bound_check(F, strict=True)
    except BoundViolation as exc:
        res.check(False, ("bound", tag, str(exc)))
        return
    res.check(b.K2_hat <= 8 * b.chi, ("K^2 <= 8 chi", tag))
    res.check(b.equality == (F.is_quasi_bundle() or F.g1 == 0), ("equality case", tag))
    if F.g1 >= 1 and not F.is_quasi_bundle():
        res.check(b.K2_hat <= 8 * b.chi - 2, ("K^2 <= 8 chi - 2", tag))


def fixed_fibrations() -> list[StandardIsotrivialFibration]:
    """A quasi-bundle, the PSL(2,7) triangle surface and the 12-node double cover."""
    K = abelian([2, 2])
    x, y = K.gen("x").index, K.gen("y").index
    free = StandardIsotrivialFibration(GeneratingVector(K, (x, x), (y, 0)), GeneratingVector(K, (y, y), (x, 0)))
    P = psl2(7)
    v = parse_vector(P, "genus=0; a,b,(a*b)^-1")
    Z = cyclic(2)
    nodes = StandardIsotrivialFibration(GeneratingVector(Z, (1,) * 6), GeneratingVector(Z, (1, 1), (1, 1)))
    return [free, StandardIsotrivialFibration(v, v), nodes]


def structural_suite(seed: int = 1729, count: int = 60) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("structural invariants of random fibrations")
    for F in itertools.chain(fixed_fibrations(), random_fibrations(rng, count)):
        res.samples += 1
        structural_checks(F, res)
    return res


RANDOM_SUITES: dict[str, Callable[[], SuiteResult]] = {
    "fixed-points": fixed_point_suite,
    "structure": structural_suite,
}
