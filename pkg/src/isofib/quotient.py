"""Diagonal quotients (C1 x C2)/G and the numerical invariants of their
minimal resolutions S."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Sequence

from .actions import GeneratingVector, covering_genus, subquotient_genus
from .groups import FiniteGroup, GroupError, cyclic
from .singularities import (CQS, B_invariant, SingularLocus, e_invariant,
                            h_invariant)


@dataclass(frozen=True)
class SurfaceInvariants:
    K2: int
    e: int
    q: int
    pg: int
    chi: int

    def __post_init__(self):
        if self.K2 + self.e != 12 * self.chi or self.chi != 1 - self.q + self.pg:
            raise ArithmeticError(f"inconsistent invariants {self}")


@dataclass(frozen=True)
class SingularOrbit:
    """One G-orbit of pairs (p1, p2) of marked points with common stabilizer."""

    point1: int
    point2: int
    branch1: int
    branch2: int
    size: int
    point: CQS


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


class StandardIsotrivialFibration:
    def __init__(self, v1: GeneratingVector, v2: GeneratingVector):
        if v1.group is not v2.group:
            raise GroupError("both vectors must be over the same group object")
        self.group: FiniteGroup = v1.group
        self.v1 = v1.check()
        self.v2 = v2.check()

    def swapped(self) -> "StandardIsotrivialFibration":
        return StandardIsotrivialFibration(self.v2, self.v1)

    @cached_property
    def g1(self) -> int:
        return covering_genus(self.v1)

    @cached_property
    def g2(self) -> int:
        return covering_genus(self.v2)

    @cached_property
    def orbits(self) -> list[SingularOrbit]:
        return _singular_orbits(self)

    @cached_property
    def sing(self) -> SingularLocus:
        return SingularLocus(o.point for o in self.orbits)

    def is_quasi_bundle(self) -> bool:
        return not self.sing

    def __repr__(self) -> str:
        return f"<fibration over {self.group.name}: [{self.v1!r}] x [{self.v2!r}]>"


def _singular_orbits(F: StandardIsotrivialFibration) -> list[SingularOrbit]:
    G = F.group
    M1, M2 = F.v1.model, F.v2.model
    # group marked points by stabilizer so intersections are computed once per pair of subgroups
    by_stab1: dict[frozenset, list[int]] = {}
    by_stab2: dict[frozenset, list[int]] = {}
    for k, pt in enumerate(M1.points):
        by_stab1.setdefault(pt.stabilizer, []).append(k)
    for k, pt in enumerate(M2.points):
        by_stab2.setdefault(pt.stabilizer, []).append(k)

    pairs = []
    for S1, P1 in by_stab1.items():
        for S2, P2 in by_stab2.items():
            if len(S1 & S2) > 1:
                pairs.extend((a, b) for a in P1 for b in P2)
    pair_set = set(pairs)

    uf = _UnionFind()
    for a, b in pairs:
        uf.find((a, b))
        for s in G.generators:
            image = (M1.act(s, a), M2.act(s, b))
            if image not in pair_set:
                raise ArithmeticError("diagonal action does not preserve stabilized pairs")
            uf.union((a, b), image)

    sizes: dict = {}
    for p in pairs:
        r = uf.find(p)
        sizes[r] = sizes.get(r, 0) + 1

    out = []
    for (a, b), size in sorted(sizes.items()):
        p1, p2 = M1.points[a], M2.points[b]
        K = p1.stabilizer & p2.stabilizer
        d = len(K)
        u = next(x for x in sorted(K) if G.orders[x] == d)
        ra, rb = p1.rotation_exponent(u), p2.rotation_exponent(u)
        q = pow(ra, -1, d) * rb % d
        if G.N // d != size:
            raise ArithmeticError("orbit size does not match stabilizer order")
        out.append(SingularOrbit(a, b, p1.branch_index, p2.branch_index, size, CQS(d, q)))
    return out


def singular_locus(F: StandardIsotrivialFibration) -> SingularLocus:
    return F.sing


def singular_locus_by_double_cosets(F: StandardIsotrivialFibration) -> SingularLocus:
    """Independent count: for each C2 marked point y, the Stab(y)-orbits on
    the marked points of C1 with nontrivial common stabilizer, taken over one y
    per G-orbit of C2 points."""
    G = F.group
    M1, M2 = F.v1.model, F.v2.model
    seen_y = set()
    out = []
    for b, y in enumerate(M2.points):
        if b in seen_y:
            continue
        seen_y.update(M2.act(s, b) for s in range(G.N))
        H = sorted(y.stabilizer)
        seen_x = set()
        for a, x in enumerate(M1.points):
            if a in seen_x:
                continue
            orbit = {M1.act(h, a) for h in H}
            seen_x |= orbit
            K = x.stabilizer & y.stabilizer
            if len(K) > 1:
                d = len(K)
                u = next(v for v in sorted(K) if G.orders[v] == d)
                q = pow(x.rotation_exponent(u), -1, d) * y.rotation_exponent(u) % d
                out.append(CQS(d, q))
    return SingularLocus(out)


def invariants(F: StandardIsotrivialFibration) -> SurfaceInvariants:
    G = F.group
    base = Fraction(8 * (F.g1 - 1) * (F.g2 - 1), G.N)
    K2 = base + F.sing.total(h_invariant)
    e = base / 2 + F.sing.total(e_invariant)
    if K2.denominator != 1 or e.denominator != 1:
        raise ArithmeticError(f"non-integral K^2 = {K2} or e = {e}")
    chi12 = K2 + e
    if chi12.numerator % 12:
        raise ArithmeticError(f"K^2 + e = {chi12} is not divisible by 12")
    chi = int(chi12) // 12
    q = F.v1.quotient_genus + F.v2.quotient_genus
    if K2 != 8 * chi - F.sing.total(B_invariant) / 3:
        raise ArithmeticError("K^2 = 8 chi - (1/3) sum B fails")
    return SurfaceInvariants(int(K2), int(e), q, chi - 1 + q, chi)


@dataclass(frozen=True)
class IntegralityReport:
    sum_q: Fraction
    sum_q_prime: Fraction
    nodes: int
    only_nodes: bool
    sum_B: Fraction

    @property
    def nodes_ok(self) -> bool:
        # parity is forced only when every singular point is a node
        return not self.only_nodes or self.nodes % 2 == 0

    @property
    def ok(self) -> bool:
        return (self.sum_q.denominator == 1 and self.sum_q_prime.denominator == 1
                and self.nodes_ok and self.sum_B.denominator == 1 and self.sum_B.numerator % 3 == 0)


def integrality_checks(F: StandardIsotrivialFibration, strict: bool = True) -> IntegralityReport:
    s = F.sing
    report = IntegralityReport(
        s.total(lambda x: x.fraction),
        s.total(lambda x: Fraction(x.q_prime, x.n)),
        s[CQS(2, 1)],
        len(s) == s[CQS(2, 1)],
        s.total(B_invariant),
    )
    if strict and not report.ok:
        raise ArithmeticError(f"integrality fails: {report}")
    return report


def construct_cyclic_fibration(fractions: Sequence[Fraction | str], handle_genus: int) -> StandardIsotrivialFibration:
    """The cyclic construction realizing a prescribed (-1)-fibre type.

    With n = lcm(ni) and G = Z_n: on C1 the branch elements are x^(qi n/ni)
    over a rational base; on C2 there are n branch points each with element
    x, plus 2*handle_genus handles equal to x.
    """
    fr = [Fraction(f) for f in fractions]
    if not fr or any(not 0 < f < 1 for f in fr):
        raise ValueError("fractions must lie strictly between 0 and 1")
    if sum(fr) != 1:
        raise ValueError(f"fractions sum to {sum(fr)}, not 1")
    if handle_genus < 0:
        raise ValueError("handle genus must be nonnegative")
    n = lcm(*(f.denominator for f in fr))
    G = cyclic(n)
    v1 = GeneratingVector(G, tuple(f.numerator * n // f.denominator for f in fr))
    v2 = GeneratingVector(G, (1,) * n, (1,) * (2 * handle_genus))
    F = StandardIsotrivialFibration(v1, v2)

    expected = SingularLocus(CQS(f.denominator, f.numerator) for f in fr for _ in range(n))
    if F.sing != expected:
        raise ArithmeticError(f"construction gave {F.sing}, expected {expected}")
    from .fibres import is_minus_one_fibre

    fibres = fibres_of(F, 2)
    if len(fibres) != n or not all(is_minus_one_fibre(fb) for fb in fibres):
        raise ArithmeticError("construction does not give n (-1)-fibres")
    if sorted(x.fraction for x in fibres[0].strings) != sorted(fr):
        raise ArithmeticError("construction gives the wrong fibre type")
    if invariants(F).q != handle_genus:
        raise ArithmeticError("irregularity mismatch")
    return F


def fibres_of(F: StandardIsotrivialFibration, projection: int = 2) -> list:
    """Reducible fibres of the projection to C2/G (2) or C1/G (1).

    For projection 2 the central component over the j-th branch point of
    the second vector is C1/<l_j> and its strings are the singular orbits
    lying over that branch point.
    """
    from .fibres import ReducibleFibre

    if projection == 1:
        return fibres_of(F.swapped(), 2)
    if projection != 2:
        raise ValueError("projection must be 1 or 2")
    G = F.group
    out = []
    for j, lj in enumerate(F.v2.branch):
        strings = [o.point for o in F.orbits if o.branch2 == j]
        if not strings:
            continue
        strings.sort(key=lambda x: x.sort_key())
        H = G.cyclic_subgroup(lj)
        out.append(ReducibleFibre(tuple(strings), subquotient_genus(F.v1, H), len(H), F.g1, j))
    return out


theorem_a_construct = construct_cyclic_fibration
