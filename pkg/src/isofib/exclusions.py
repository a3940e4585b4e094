"""Group-theoretic facts used to rule out the small-delta configurations
K^2 = 8 chi - 3 and K^2 = 8 chi - 4 with ample canonical class.

Each case is checked twice where possible: once for the normalized vector
used in the hand argument, and once exhaustively over every generating
vector of the relevant signature.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .groups import (FiniteGroup, abelian, automorphism_group, candidates_32_11,
                     candidates_96_64, derived_subgroup, has_generating_vector,
                     iter_triangle_vectors, power_conjugacy_profile, registry)


@dataclass(frozen=True)
class ExclusionCheck:
    case: str
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ExclusionReport:
    checks: list[ExclusionCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, case: str, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(ExclusionCheck(case, name, bool(passed), detail))

    def failures(self) -> list[ExclusionCheck]:
        return [c for c in self.checks if not c.passed]


def cyclic_cover(G: FiniteGroup, elems) -> set[int]:
    """Union of the cyclic subgroups generated by ``elems``."""
    out: set[int] = set()
    for g in elems:
        out |= G.cyclic_subgroup(g)
    return out


def conjugation_closure(G: FiniteGroup, elems) -> set[int]:
    out: set[int] = set()
    for g in elems:
        out.update(G.classes[G.class_id[g]])
    return out


def free_elements(G: FiniteGroup, S: set[int]) -> set[int]:
    """Nonidentity g whose cyclic subgroup meets S only in the identity.

    These are the only possible branch elements over points of C2/G whose
    fibre is irreducible.
    """
    return {g for g in range(1, G.N) if not (G.cyclic_subgroup(g) - {0}) & S}


def _words(G: FiniteGroup, words: str) -> set[int]:
    return {G.parse_word(w).index for w in words.split(",")}


def _label_set(G: FiniteGroup, elems) -> str:
    return "{" + ", ".join(sorted(G.labels[g] for g in elems)) + "}"


def _has_order(G: FiniteGroup, elems, m: int) -> bool:
    return any(G.orders[g] == m for g in elems)


def _abelian_case(report: ExclusionReport, case: str, n: int, expected_complement: str,
                  expected_free: str) -> None:
    """Z2 x Zn with vectors of type (0 | 2, n, n) and l1 of order n."""
    G = abelian([2, n])
    x, y = G.gen("x").index, G.gen("y").index
    V = (x, G.parse_word("x*y^-1").index, y)
    report.add(case, "normalized vector has type (0|2,%d,%d)" % (n, n),
               tuple(int(G.orders[g]) for g in V) == (2, n, n) and G.product(V) == 0)
    S = cyclic_cover(G, V)
    rest = set(range(G.N)) - S
    report.add(case, "complement of the stabilizer union", rest == _words(G, expected_complement),
               _label_set(G, rest))
    free = free_elements(G, S)
    want = _words(G, expected_free) if expected_free else set()
    report.add(case, "free elements of the normalized vector", free == want, _label_set(G, free))

    # an abelian group needs s >= 2, and l2..ls free; the relation then puts
    # l1 (order n) inside <free elements>
    count = 0
    bad = []
    for W in iter_triangle_vectors(G, (2, n, n)):
        count += 1
        free_w = free_elements(G, cyclic_cover(G, W))
        if free_w and _has_order(G, G.closure(free_w), n):
            bad.append(W)
    report.add(case, f"no (0|2,{n},{n}) vector leaves room for an order-{n} l1",
               count > 0 and not bad, f"{count} vectors checked, {len(bad)} escape")


def _fails_star(G: FiniteGroup) -> tuple[bool, bool]:
    """(every order-8 g is conjugate to g^5, no order-8 g satisfies (*))."""
    prof = power_conjugacy_profile(G, 8)
    all5 = bool(prof) and all(5 in p for p in prof.values())
    no_star = not any(p == frozenset({1}) for p in prof.values())
    return all5, no_star


def exclusion_suite() -> ExclusionReport:
    report = ExclusionReport()

    # K^2 = 8 chi - 3: type (2/3, 1/6, 1/6) in genus 2
    _abelian_case(report, "2a", 6, "x*y^2,x*y^4", "")

    G = registry(24, 8)
    ord3 = [c for c in G.classes if G.orders[c[0]] == 3]
    w = G.gen("w").index
    report.add("2b", "G(24,8) has one class of order-3 elements, of size 2",
               len(ord3) == 1 and set(ord3[0]) == {w, int(G.inv[w])}, _label_set(G, ord3[0]) if ord3 else "")
    report.add("2b", "G(24,8) is (0|2,4,6)-generated", has_generating_vector(G, (2, 4, 6)))

    # K^2 = 8 chi - 4: type (3/4, 1/8, 1/8) in genus 3
    _abelian_case(report, "a", 8, "x*y^2,x*y^4,x*y^6", "x*y^4")

    G = registry(16, 6)
    all5, no_star = _fails_star(G)
    report.add("b", "G(16,6): every order-8 element is conjugate to its 5th power", all5 and no_star)
    report.add("b", "G(16,6) is (0|2,8,8)-generated", has_generating_vector(G, (2, 8, 8)))

    for case, build, order in (("d", candidates_32_11, 32), ("e", candidates_96_64, 96)):
        cands = build()
        flags = [_fails_star(H) for H in cands]
        report.add(case, f"semidirect candidates of order {order} exist",
                   bool(cands) and all(H.N == order for H in cands), f"{len(cands)} candidates")
        report.add(case, f"every order-{order} candidate fails (*)",
                   bool(cands) and all(a and b for a, b in flags),
                   f"{sum(a and b for a, b in flags)}/{len(cands)}")

    _case_c(report)
    return report


def _case_c(report: ExclusionReport) -> None:
    G = registry(32, 9)
    auts = automorphism_group(G)
    report.add("c", "|Aut(G(32,9))| = 64", len(auts) == 64, str(len(auts)))

    vectors = list(iter_triangle_vectors(G, (2, 4, 8)))
    report.add("c", "64 generating vectors of type (0|2,4,8)", len(vectors) == 64, str(len(vectors)))
    index = {v: k for k, v in enumerate(vectors)}
    seen = set()
    orbits = 0
    for v in vectors:
        if v in seen:
            continue
        orbits += 1
        for a in auts:
            img = tuple(a[g] for g in v)
            if img not in index:
                raise ArithmeticError("automorphism image is not a generating vector")
            seen.add(img)
    report.add("c", "the vectors form one Aut-orbit", orbits == 1, f"{orbits} orbits")

    all5, no_star = _fails_star(G)
    report.add("c", "G(32,9) satisfies (*)", not no_star)
    report.add("c", "no element of order above 8", int(G.orders.max()) == 8)

    D = {g.index for g in derived_subgroup(G)}
    yz2 = G.parse_word("y*z^2").index
    report.add("c", "[G,G] = <y z^2> of order 4", D == set(G.cyclic_subgroup(yz2)) and len(D) == 4,
               _label_set(G, D))
    z = G.gen("z").index
    report.add("c", "z is not in [G,G]", z not in D)

    V = (G.gen("x").index, G.parse_word("x*z^-1").index, z)
    report.add("c", "normalized vector x, x z^-1, z", V in index)
    S = conjugation_closure(G, cyclic_cover(G, V))
    rest = set(range(G.N)) - S
    expected = _words(G, "y*z^2,x*z^2,x*y*z^2*x,z*x*z,z^2*x,y,x*y")
    H = G.closure(_words(G, "x,y,z^2"))
    report.add("c", "complement of the conjugated stabilizer union", rest == expected, _label_set(G, rest))
    report.add("c", "complement lies in <x, y, z^2> and z does not", rest <= H and z not in H)

    # all 64 vectors: l1 of order 8 would lie in <free elements, [G,G]>
    bad = 0
    for W in vectors:
        SW = conjugation_closure(G, cyclic_cover(G, W))
        M = G.closure(free_elements(G, SW) | D)
        bad += _has_order(G, M, 8)
    report.add("c", "for every vector, <free, [G,G]> has no element of order 8", bad == 0,
               f"{bad} of {len(vectors)} escape")
