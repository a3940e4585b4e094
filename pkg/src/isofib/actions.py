"""Group actions on curves encoded by generating vectors.

A vector for G of signature (g' | m1, ..., mr) is a tuple of branch
elements g1..gr of orders mi and handle elements h1..h_{2g'} with
g1...gr * prod [h_i, h_{i+g'}] = 1, all together generating G.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .groups import FiniteGroup, GroupElement, GroupError, _idx, normalizer


class InvalidGeneratingVector(ValueError):
    def __init__(self, report: "ValidationReport"):
        super().__init__("; ".join(v.message for v in report.violations))
        self.report = report


@dataclass(frozen=True)
class Violation:
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


@dataclass(frozen=True, eq=False)
class GeneratingVector:
    group: FiniteGroup
    branch: tuple[int, ...]
    handles: tuple[int, ...] = ()

    def __post_init__(self):
        G = self.group
        object.__setattr__(self, "branch", tuple(_idx(G, g) for g in self.branch))
        object.__setattr__(self, "handles", tuple(_idx(G, h) for h in self.handles))

    @property
    def quotient_genus(self) -> int:
        return len(self.handles) // 2

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(int(self.group.orders[g]) for g in self.branch)

    @property
    def signature(self) -> tuple[int, tuple[int, ...]]:
        return self.quotient_genus, self.orders

    @property
    def branch_elements(self) -> list[GroupElement]:
        return [GroupElement(self.group, g) for g in self.branch]

    @property
    def handle_elements(self) -> list[GroupElement]:
        return [GroupElement(self.group, h) for h in self.handles]

    def relation_product(self) -> int:
        G = self.group
        p = G.product(self.branch)
        k = self.quotient_genus
        for i in range(k):
            p = G.mul(p, G.commutator(self.handles[i], self.handles[i + k]))
        return p

    def check(self) -> "GeneratingVector":
        report = validate(self)
        if not report.ok:
            raise InvalidGeneratingVector(report)
        return self

    @cached_property
    def model(self) -> "FixedPointModel":
        return FixedPointModel(self)

    def __repr__(self) -> str:
        G = self.group
        b = ", ".join(G.labels[g] for g in self.branch)
        h = ", ".join(G.labels[x] for x in self.handles)
        return f"genus={self.quotient_genus}; {b}" + (f" | {h}" if h else "")


def validate(V: GeneratingVector) -> ValidationReport:
    G = V.group
    out = []
    if len(V.handles) % 2:
        out.append(Violation("handles", f"odd number of handle elements ({len(V.handles)})"))
    for i, g in enumerate(V.branch):
        if g == 0:
            out.append(Violation("order", f"branch element {i + 1} is the identity"))
    if len(V.handles) % 2 == 0 and V.relation_product() != 0:
        out.append(Violation("product", f"relation product is {G.labels[V.relation_product()]}, not 1"))
    if len(G.closure(V.branch + V.handles)) != G.N:
        out.append(Violation("generation", f"elements do not generate {G.name}"))
    if G.is_abelian():
        r = len(V.branch)
        if r == 1:
            out.append(Violation("abelian-branch", "abelian group with exactly one branch point"))
        elif r == 2 and V.orders[0] != V.orders[1]:
            out.append(Violation("abelian-branch", "abelian group with two branch points of different orders"))
    return ValidationReport(tuple(out))


def parse_vector(G: FiniteGroup, text: str) -> GeneratingVector:
    """Parse ``genus=Q; w1, ..., wr [| h1, ..., h2Q]``."""
    head, sep, body = text.partition(";")
    if not sep:
        head, body = "genus=0", text
    key, eq, val = head.partition("=")
    if key.strip().lower() not in ("genus", "g") or not eq:
        raise ValueError(f"expected 'genus=Q;' at the start of {text!r}")
    genus = int(val)
    branch_text, _, handle_text = body.partition("|")
    branch = [G.parse_word(w).index for w in branch_text.split(",") if w.strip()]
    handles = [G.parse_word(w).index for w in handle_text.split(",") if w.strip()]
    if len(handles) != 2 * genus:
        raise ValueError(f"genus={genus} needs {2 * genus} handle elements, got {len(handles)}")
    return GeneratingVector(G, tuple(branch), tuple(handles))


def hurwitz_characteristic(V: GeneratingVector) -> Fraction:
    """2g(C) - 2 from the Riemann-Hurwitz relation."""
    return V.group.N * (2 * V.quotient_genus - 2 + sum(1 - Fraction(1, m) for m in V.orders))


def covering_genus(V: GeneratingVector) -> int:
    chi2 = hurwitz_characteristic(V)
    if chi2.denominator != 1 or chi2.numerator % 2 or chi2 < -2:
        raise ValueError(f"signature {V.signature} of {V.group.name} gives 2g-2 = {chi2}")
    return int(chi2) // 2 + 1


# closed formulas for fixed points

def _units(m: int) -> list[int]:
    return [j for j in range(1, m + 1) if gcd(j, m) == 1] if m > 1 else [1]


def _conjugate_cyclic(G: FiniteGroup, a: int, b: int) -> bool:
    """Whether <a> and <b> are conjugate subgroups."""
    m = int(G.orders[a])
    if int(G.orders[b]) != m:
        return False
    cb = G.class_id[b]
    return any(G.class_id[G.power(a, j)] == cb for j in _units(m))


def fix_count(V: GeneratingVector, h) -> int:
    """|Fix(h)| = |N_G(<h>)| * sum over i with m | mi and <h> ~ <gi^(mi/m)> of 1/mi."""
    G = V.group
    h = _idx(G, h)
    if h == 0:
        raise ValueError("the identity fixes every point")
    m = int(G.orders[h])
    H = G.cyclic_subgroup(h)
    total = Fraction(0)
    for g, mi in zip(V.branch, V.orders):
        if mi % m == 0 and _conjugate_cyclic(G, h, G.power(g, mi // m)):
            total += Fraction(1, mi)
    value = len(normalizer(G, H)) * total
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral fixed-point count {value}")
    return int(value)


def fix_count_rot(V: GeneratingVector, h, q: int) -> int:
    """Fixed points of h where it rotates by exp(2 pi i q / |h|)."""
    G = V.group
    h = _idx(G, h)
    if h == 0:
        raise ValueError("the identity fixes every point")
    m = int(G.orders[h])
    if gcd(q, m) != 1:
        raise ValueError(f"rotation exponent {q} is not a unit mod {m}")
    ch = G.class_id[h]
    total = Fraction(0)
    for g, mi in zip(V.branch, V.orders):
        if mi % m == 0 and G.class_id[G.power(g, mi * q // m)] == ch:
            total += Fraction(1, mi)
    centralizer_order = int(np.count_nonzero(G.table[:, h] == G.table[h, :]))
    value = centralizer_order * total
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral fixed-point count {value}")
    return int(value)


# combinatorial model: one marked point per left coset of <gi>

@dataclass(frozen=True)
class MarkedPoint:
    branch_index: int
    representative: int
    coset: frozenset[int]
    stabilizer_generator: int
    order: int
    rotation: dict = field(compare=False, hash=False, repr=False)

    @property
    def stabilizer(self) -> frozenset[int]:
        return frozenset(self.rotation)

    def rotation_exponent(self, u) -> int:
        """c with u acting by exp(2 pi i c / |u|) on the tangent space."""
        u = int(u) if not isinstance(u, GroupElement) else u.index
        try:
            return self.rotation[u]
        except KeyError:
            raise ValueError("element does not fix this point") from None


def _marked_point(G: FiniteGroup, i: int, g: int, rep: int, coset) -> MarkedPoint:
    s = G.conj(rep, g)
    mi = int(G.orders[g])
    rotation = {0: 0}
    x = 0
    for j in range(1, mi):
        x = int(G.table[x, s])
        m = mi // gcd(j, mi)
        rotation[x] = (j // (mi // m)) % m
    return MarkedPoint(i, rep, frozenset(coset), s, mi, rotation)


class FixedPointModel:
    """All points with nontrivial stabilizer, with the action of G on them."""

    def __init__(self, V: GeneratingVector):
        G = V.group
        self.vector = V
        self.points: list[MarkedPoint] = []
        self.point_of = []  # per branch index: element -> point index of its coset
        for i, g in enumerate(V.branch):
            lookup = np.full(G.N, -1, dtype=np.int64)
            H = np.array(sorted(G.cyclic_subgroup(g)), dtype=np.int64)
            for s in range(G.N):
                if lookup[s] < 0:
                    coset = G.table[s, H]
                    lookup[coset] = len(self.points)
                    self.points.append(_marked_point(G, i, g, s, coset.tolist()))
            self.point_of.append(lookup)

    def act(self, s: int, p: int) -> int:
        """Index of the point s * p."""
        pt = self.points[p]
        G = self.vector.group
        return int(self.point_of[pt.branch_index][G.table[s, pt.representative]])

    def fixed_by(self, h: int) -> list[int]:
        return [k for k, pt in enumerate(self.points) if h in pt.rotation]

    def count(self, h: int, q: int | None = None) -> int:
        if q is None:
            return len(self.fixed_by(h))
        return sum(1 for pt in self.points if pt.rotation.get(h) == q)


def fixed_point_model(V: GeneratingVector) -> list[MarkedPoint]:
    return list(V.model.points)


def model_fix_count(V: GeneratingVector, h, q: int | None = None) -> int:
    return V.model.count(_idx(V.group, h), q)


def subquotient_genus(V: GeneratingVector, H: Iterable) -> int:
    """Genus of C/H for a subgroup H, by Riemann-Hurwitz on the restricted action."""
    G = V.group
    Hs = frozenset(_idx(G, x) for x in H)
    if len(G.closure(Hs)) != len(Hs):
        raise ValueError("H is not a subgroup")
    ram = sum(len(pt.stabilizer & Hs) - 1 for pt in V.model.points)
    top = 2 * covering_genus(V) - 2 - ram
    if top % len(Hs):
        raise ArithmeticError("non-integral quotient genus")
    chi = top // len(Hs)
    if chi % 2 or chi < -2:
        raise ArithmeticError(f"impossible quotient Euler characteristic {-chi}")
    return chi // 2 + 1


# random vectors for tests and the verification suite

def random_generating_vector(G: FiniteGroup, rng: random.Random, r: int, genus: int = 0,
                             tries: int = 200) -> GeneratingVector | None:
    """A random valid vector with r branch points and quotient genus ``genus``.

    The first r-1 branch elements and the handles are drawn uniformly; the
    last branch element is forced by the relation.
    """
    if G.N == 1:
        return None
    for _ in range(tries):
        handles = [rng.randrange(G.N) for _ in range(2 * genus)]
        branch = [rng.randrange(1, G.N) for _ in range(max(r - 1, 0))]
        if r > 0:
            comm = GeneratingVector(G, (), tuple(handles)).relation_product()
            last = G.mul(int(G.inv[G.product(branch)]), int(G.inv[comm]))
            if last == 0:
                continue
            branch.append(last)
        V = GeneratingVector(G, tuple(branch), tuple(handles))
        if validate(V).ok:
            return V
    return None


def all_vectors_of_signature(G: FiniteGroup, orders: Sequence[int]):
    """Every (0 | orders) vector of G, by brute force over the first r-1 entries."""
    choices = [G.elements_of_order(m) for m in orders[:-1]]
    m_last = orders[-1]
    for head in itertools.product(*choices):
        last = int(G.inv[G.product(head)])
        if G.orders[last] != m_last:
            continue
        V = GeneratingVector(G, tuple(head) + (last,))
        if validate(V).ok:
            yield V
