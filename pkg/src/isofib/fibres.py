"""Reducible fibres: multiplicities, (-1)-fibres, contraction to the
relative minimal model, and the resulting invariants c(F) and delta(F)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .contfrac import HJExpansion, blocks_of, hj_eval
from .singularities import CQS, B_invariant


@dataclass(frozen=True)
class ReducibleFibre:
    """A reducible fibre rho*Y + strings, seen from the factor whose
    quotient is the central component Y.

    ``strings`` are the local types 1/n(1,q) in that convention, so the
    first curve of a string has self-intersection -ceil(n/q).
    """

    strings: tuple[CQS, ...]
    central_genus: int
    multiplicity: int
    fibre_genus: int
    branch: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "strings", tuple(self.strings))
        if len(self.strings) < 2:
            raise ValueError("a reducible fibre has at least two strings")
        s = self.type_sum
        if s.denominator != 1 or s <= 0:
            raise ValueError(f"sum of q/n over strings is {s}, not a positive integer")
        if any(self.multiplicity % x.n for x in self.strings):
            raise ValueError("every string order must divide the multiplicity")
        chi = Fraction(2 * self.fibre_genus - 2)
        expected = self.multiplicity * (2 * self.central_genus - 2 + sum(1 - Fraction(1, x.n) for x in self.strings))
        if chi != expected:
            raise ValueError(f"Riemann-Hurwitz fails: 2g-2 = {chi} but rho(...) = {expected}")

    @classmethod
    def from_type(cls, fractions: Sequence[Fraction | str], *, fibre_genus: int | None = None,
                  central_genus: int | None = None, multiplicity: int | None = None,
                  branch: int | None = None) -> "ReducibleFibre":
        """Build from fractions q/n; exactly one of the genera may be omitted."""
        strings = tuple(sorted((CQS.from_fraction(f) for f in fractions), key=lambda x: x.sort_key()))
        rho = multiplicity or lcm(*(x.n for x in strings))
        ram = sum(1 - Fraction(1, x.n) for x in strings)
        if fibre_genus is None and central_genus is None:
            raise ValueError("give the fibre genus or the central genus")
        if fibre_genus is None:
            fibre_genus = rho * (2 * central_genus - 2 + ram) / 2 + 1
        elif central_genus is None:
            central_genus = (Fraction(2 * fibre_genus - 2, rho) - ram + 2) / 2
        for name, v in (("fibre", fibre_genus), ("central", central_genus)):
            if Fraction(v).denominator != 1 or v < 0:
                raise ValueError(f"{name} genus {v} is not a nonnegative integer")
        return cls(strings, int(central_genus), rho, int(fibre_genus), branch)

    @property
    def type_sum(self) -> Fraction:
        return sum((x.fraction for x in self.strings), Fraction(0))

    @property
    def type(self) -> tuple[Fraction, ...]:
        return tuple(x.fraction for x in self.strings)

    @property
    def self_intersection(self) -> int:
        return central_self_intersection(self)

    def __str__(self) -> str:
        return "(" + ", ".join(str(f) for f in self.type) + ")"


def central_self_intersection(F: ReducibleFibre, side: int = 1) -> int:
    """-sum q/n (side 1) or -sum q'/n (side 2 reading of the same points)."""
    if side == 1:
        s = F.type_sum
    elif side == 2:
        s = sum((Fraction(x.q_prime, x.n) for x in F.strings), Fraction(0))
    else:
        raise ValueError("side must be 1 or 2")
    if s.denominator != 1:
        raise ValueError(f"non-integral self-intersection {-s}")
    return -int(s)


def fibre_multiplicities(rho: int, e: HJExpansion | Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Multiplicities of a string's curves in rho*Y + ... , from both ends.

    lambda starts at rho*q/n next to the central component and solves
    F.Z_i = 0 along the string.  mu is the same system with the string
    attached at its far end instead (as in the fibre of the other
    projection), starting from rho*q'/n.
    """
    terms = list(e)
    x = hj_eval(terms)
    n, q = x.numerator, x.denominator
    if rho % n:
        raise ValueError(f"string order {n} does not divide the multiplicity {rho}")
    qp = pow(q, -1, n) if n > 1 else 0

    def run(start: int, bs: list[int]) -> list[int]:
        vals = [rho, start]
        for b in bs[:-1]:
            vals.append(b * vals[-1] - vals[-2])
        if vals[-2] - bs[-1] * vals[-1] != 0:
            raise ArithmeticError("multiplicity system is inconsistent")
        return vals[1:]

    lam = run(rho * q // n, terms)
    mu = run(rho * qp // n, terms[::-1])[::-1]
    if any(v <= 0 for v in lam + mu):
        raise ArithmeticError("nonpositive multiplicity")
    return tuple(lam), tuple(mu)


def is_minus_one_fibre(F: ReducibleFibre) -> bool:
    if F.type_sum != 1:
        return False
    rho = lcm(*(x.n for x in F.strings))
    return 2 * F.fibre_genus - 2 == rho * (-2 + sum(1 - Fraction(1, x.n) for x in F.strings))


# explicit curve configurations

@dataclass
class Curve:
    label: str
    genus: int
    self_intersection: int
    multiplicity: int
    string: int  # -1 for the central component


class CurveConfiguration:
    """Curves with genus, self-intersection and pairwise intersection numbers."""

    def __init__(self, curves: list[Curve], intersections: list[list[int]]):
        k = len(curves)
        if len(intersections) != k or any(len(r) != k for r in intersections):
            raise ValueError("intersection matrix has the wrong shape")
        for i in range(k):
            if intersections[i][i] != 0:
                raise ValueError("self-intersections are kept on the curves, not the matrix")
            for j in range(k):
                if intersections[i][j] != intersections[j][i] or intersections[i][j] < 0:
                    raise ValueError("intersection matrix must be symmetric and nonnegative")
        self.curves = curves
        self.M = [list(r) for r in intersections]
        self.alive = [True] * k

    @classmethod
    def of_fibre(cls, F: ReducibleFibre) -> "CurveConfiguration":
        curves = [Curve("Y", F.central_genus, F.self_intersection, F.multiplicity, -1)]
        edges = []
        for s, x in enumerate(F.strings):
            lam, _ = fibre_multiplicities(F.multiplicity, x.expansion)
            prev = 0
            for j, (b, m) in enumerate(zip(x.expansion, lam)):
                curves.append(Curve(f"E{s + 1}.{j + 1}", 0, -b, m, s))
                edges.append((prev, len(curves) - 1))
                prev = len(curves) - 1
        M = [[0] * len(curves) for _ in curves]
        for a, b in edges:
            M[a][b] = M[b][a] = 1
        return cls(curves, M)

    def survivors(self) -> list[int]:
        return [i for i, a in enumerate(self.alive) if a]

    def is_contractible(self, i: int) -> bool:
        c = self.curves[i]
        return self.alive[i] and c.genus == 0 and c.self_intersection == -1

    def blow_down(self, i: int) -> None:
        if not self.is_contractible(i):
            raise ValueError(f"{self.curves[i].label} is not a smooth rational (-1)-curve")
        row = self.M[i]
        others = [j for j in self.survivors() if j != i]
        for a in others:
            ea = row[a]
            if not ea:
                continue
            ca = self.curves[a]
            ca.self_intersection += ea * ea
            ca.genus += ea * (ea - 1) // 2
            for b in others:
                if b > a and row[b]:
                    self.M[a][b] += ea * row[b]
                    self.M[b][a] = self.M[a][b]
        self.alive[i] = False
        for j in range(len(self.curves)):
            self.M[i][j] = self.M[j][i] = 0

    def fibre_dot(self, i: int) -> int:
        """F . C_i where F is the multiplicity-weighted sum of surviving curves."""
        c = self.curves[i]
        return c.multiplicity * c.self_intersection + sum(
            self.curves[j].multiplicity * self.M[i][j] for j in self.survivors() if j != i)

    def meeting_minus_ones(self) -> tuple[bool, bool]:
        """(two (-1)-curves meet, two (-1)-curves meet with multiplicity >= 2)."""
        pts = [i for i in self.survivors() if self.is_contractible(i)]
        meet = tangent = False
        for a, b in itertools.combinations(pts, 2):
            if self.M[a][b] >= 1:
                meet = True
            if self.M[a][b] >= 2:
                tangent = True
        return meet, tangent

    def copy(self) -> "CurveConfiguration":
        cc = CurveConfiguration.__new__(CurveConfiguration)
        cc.curves = [Curve(c.label, c.genus, c.self_intersection, c.multiplicity, c.string) for c in self.curves]
        cc.M = [list(r) for r in self.M]
        cc.alive = list(self.alive)
        return cc

    def summary(self) -> list[tuple[str, int, int]]:
        return [(self.curves[i].label, self.curves[i].genus, self.curves[i].self_intersection)
                for i in self.survivors()]


@dataclass
class ContractionResult:
    c: int
    delta: Fraction
    final_configuration: CurveConfiguration
    ruled_signal: bool = False
    two_tangent_minus_ones: bool = False
    contracted: list[str] = field(default_factory=list)
    per_string: tuple[int, ...] = ()

    @property
    def flags(self) -> dict[str, bool]:
        return {"ruled_signal": self.ruled_signal, "two_tangent_minus_ones": self.two_tangent_minus_ones}


def _contract(F: ReducibleFibre, strategy: str) -> ContractionResult:
    conf = CurveConfiguration.of_fibre(F)
    third_B = sum((B_invariant(x) for x in F.strings), Fraction(0)) / 3
    result = ContractionResult(0, third_B, conf, per_string=(0,) * len(F.strings))
    if not is_minus_one_fibre(F):
        return result
    per = [0] * len(F.strings)

    def do(i):
        conf.blow_down(i)
        result.contracted.append(conf.curves[i].label)
        s = conf.curves[i].string
        if s >= 0:
            per[s] += 1
        meet, tangent = conf.meeting_minus_ones()
        result.ruled_signal |= meet
        result.two_tangent_minus_ones |= tangent
        for j in conf.survivors():
            if conf.fibre_dot(j) != 0:
                raise ArithmeticError("fibre class is no longer orthogonal to its components")

    do(0)
    if strategy == "round_robin":
        progress = True
        while progress:
            progress = False
            for s in range(len(F.strings)):
                while True:
                    cand = next((i for i in conf.survivors()
                                 if conf.curves[i].string == s and conf.is_contractible(i)), None)
                    if cand is None:
                        break
                    do(cand)
                    progress = True
    elif strategy == "greedy":
        while True:
            cand = next((i for i in conf.survivors() if conf.is_contractible(i)), None)
            if cand is None:
                break
            do(cand)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    result.c = len(result.contracted)
    result.delta = third_B - result.c
    result.per_string = tuple(per)
    return result


def contract(F: ReducibleFibre) -> ContractionResult:
    """Blow down the fibre to the relative minimal model, string by string.

    The count is compared with a greedy order; a mismatch raises.
    """
    rr = _contract(F, "round_robin")
    greedy = _contract(F, "greedy")
    if rr.c != greedy.c:
        raise ArithmeticError(f"contraction count depends on the order for {F}: {rr.c} vs {greedy.c}")
    return rr


def delta(F: ReducibleFibre) -> Fraction:
    return contract(F).delta


def contraction_case(F: ReducibleFibre, result: ContractionResult | None = None) -> str | None:
    """Which pattern of contracted string prefixes occurs, for (-1)-fibres
    with c >= 2 over a base of positive genus.

    Returns "1", "2", "3", "4", "3'", "4'", or "other"; None when the
    question does not apply.
    """
    result = result or contract(F)
    if not is_minus_one_fibre(F) or F.fibre_genus == 0 or result.c < 2:
        return None
    touched = [s for s, k in enumerate(result.per_string) if k]
    if len(touched) > 2:
        return "other"
    first = [s for s in touched if F.strings[s].expansion[0] == 2]
    if len(first) != 1:
        return "other"
    s1 = first[0]
    s2 = next((s for s in touched if s != s1), None)
    P1 = list(F.strings[s1].expansion[: result.per_string[s1]])
    P2 = list(F.strings[s2].expansion[: result.per_string[s2]]) if s2 is not None else []
    if all(b == 2 for b in P1):
        k1 = len(P1)
        if not P2:
            return "1"
        if P2 == [k1 + 2]:
            return "2"
    else:
        blocks = blocks_of(P1)
        if blocks.t >= 2:
            if P2 == blocks.bumped_side(last_bump=3):
                return "3"
            if P2 == blocks.bumped_side(drop_last=True):
                return "4"
    if P2 and P2[0] >= 3:
        blocks = blocks_of(P2)
        if P1 == blocks.bumped_side(last_bump=3):
            return "3'"
        if P1 == blocks.bumped_side(drop_last=True):
            return "4'"
    return "other"


# surfaces: minimal model and bounds

@dataclass(frozen=True)
class FibreReport:
    fibre: ReducibleFibre
    minus_one: bool
    c: int
    delta: Fraction
    case: str | None
    ruled_signal: bool


@dataclass(frozen=True)
class MinimalModelInvariants:
    K2: int
    e: int
    chi: int
    fibres: tuple[FibreReport, ...]

    @property
    def deltas(self) -> list[Fraction]:
        return [r.delta for r in self.fibres]


def analyse_fibres(F) -> list[FibreReport]:
    from .quotient import fibres_of

    out = []
    for fb in fibres_of(F, 2):
        res = contract(fb)
        out.append(FibreReport(fb, is_minus_one_fibre(fb), res.c, res.delta,
                               contraction_case(fb, res), res.ruled_signal))
    return out


def minimal_model_invariants(F) -> MinimalModelInvariants:
    from .quotient import invariants

    inv = invariants(F)
    reports = analyse_fibres(F)
    total_delta = sum((r.delta for r in reports), Fraction(0))
    total_c = sum(r.c for r in reports)
    K2 = 8 * inv.chi - total_delta
    if K2 != inv.K2 + total_c:
        raise ArithmeticError(f"8 chi - sum delta = {K2} but K^2 + sum c = {inv.K2 + total_c}")
    return MinimalModelInvariants(int(K2), inv.e - total_c, inv.chi, tuple(reports))


EXCEPTION_TYPES = {
    "i": (Fraction(1, 6), Fraction(1, 3), Fraction(1, 2)),
    "ii": (Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)),
    "iii": (Fraction(1, 2), Fraction(1, 2)),
}


def small_delta_exception(r: FibreReport) -> str | None:
    """Label of the fibres with delta <= 2 over a base of positive genus."""
    t = tuple(sorted(r.fibre.type))
    if r.minus_one and t == EXCEPTION_TYPES["i"]:
        return "i"
    if r.minus_one and t == EXCEPTION_TYPES["ii"]:
        return "ii"
    if not r.minus_one and t == EXCEPTION_TYPES["iii"]:
        return "iii"
    return None


class BoundViolation(ArithmeticError):
    pass


@dataclass(frozen=True)
class BoundReport:
    K2_hat: int
    chi: int
    g1: int
    quasi_bundle: bool
    equality: bool
    strong_bound_applies: bool
    exceptions: tuple[str | None, ...]
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def bound_check(F, strict: bool = True) -> BoundReport:
    mm = minimal_model_invariants(F)
    eight_chi = 8 * mm.chi
    quasi = F.is_quasi_bundle()
    problems = []
    if mm.K2 > eight_chi:
        problems.append(f"K^2 = {mm.K2} exceeds 8 chi = {eight_chi}")
    equality = mm.K2 == eight_chi
    if equality != (quasi or F.g1 == 0):
        problems.append("equality K^2 = 8 chi does not match (quasi-bundle or g(C1) = 0)")
    strong = F.g1 >= 1 and not quasi
    exceptions = tuple(small_delta_exception(r) if F.g1 >= 1 else None for r in mm.fibres)
    for r, ex in zip(mm.fibres, exceptions):
        if r.delta < 0:
            problems.append(f"negative delta {r.delta} for fibre {r.fibre}")
        if (r.delta == 0) != (r.minus_one and F.g1 == 0):
            problems.append(f"delta = 0 mismatch for fibre {r.fibre}")
        if F.g1 >= 1 and r.delta <= 2 and ex is None:
            problems.append(f"fibre {r.fibre} has delta {r.delta} <= 2 but is not an exception")
    if strong:
        if mm.K2 > eight_chi - 2:
            problems.append(f"K^2 = {mm.K2} exceeds 8 chi - 2 = {eight_chi - 2}")
        single_node_pair = (len(mm.fibres) == 1 and exceptions[0] == "iii")
        if (mm.K2 == eight_chi - 2) != single_node_pair:
            problems.append("K^2 = 8 chi - 2 does not match a single non-(-1) fibre of type (1/2, 1/2)")
    report = BoundReport(mm.K2, mm.chi, F.g1, quasi, equality, strong, exceptions, tuple(problems))
    if strict and problems:
        raise BoundViolation("; ".join(problems))
    return report


# classification of (-1)-fibres over a base of genus g

@dataclass(frozen=True)
class MinusOneFibreClass:
    genus: int
    type: tuple[Fraction, ...]
    c: int
    delta: Fraction
    label: str | None
    group_order: int


def cyclic_signatures(genus: int, n: int) -> list[tuple[int, ...]]:
    """Signatures (0 | m1..mr), sorted, of Z_n-actions on genus-g curves."""
    divisors = [d for d in range(2, n + 1) if n % d == 0]
    target = Fraction(2 * genus - 2, n) + 2
    out = []
    max_r = int(2 * target) + 1
    for r in range(3, max_r + 1):
        for ms in itertools.combinations_with_replacement(divisors, r):
            if sum(1 - Fraction(1, m) for m in ms) == target and _cyclic_vector_exists(n, ms):
                out.append(ms)
    return out


def _cyclic_vector_exists(n: int, ms: Sequence[int]) -> bool:
    choices = [[t for t in range(1, n) if n // gcd(t, n) == m] for m in ms]
    for ts in itertools.product(*choices[:-1]):
        last = (-sum(ts)) % n
        if last and n // gcd(last, n) == ms[-1]:
            g = n
            for t in ts + (last,):
                g = gcd(g, t)
            if g == 1:
                return True
    return False


def _types_for(ms: Sequence[int]) -> set[tuple[Fraction, ...]]:
    options = [[Fraction(q, m) for q in range(1, m) if gcd(q, m) == 1] for m in ms]
    out = set()
    for fr in itertools.product(*options):
        if sum(fr) == 1:
            out.add(tuple(sorted(fr, key=lambda f: (f.denominator, f.numerator))))
    return out


def classify_minus_one_fibres(genus: int, labels: dict | None = None) -> list[MinusOneFibreClass]:
    if genus < 1:
        raise ValueError("over a rational curve the (-1)-fibres form an infinite family: "
                         "every pair (q/n, (n-q)/n) occurs")
    if labels is None:
        from .golden import minus_one_labels

        labels = minus_one_labels()
    orders = [2, 3, 4, 6] if genus == 1 else range(2, 4 * genus + 3)
    found = {}
    for n in orders:
        for ms in cyclic_signatures(genus, n):
            for t in _types_for(ms):
                if lcm(*(f.denominator for f in t)) == n:
                    found.setdefault(t, n)
    out = []
    for t, n in sorted(found.items(), key=lambda kv: (kv[1], [(f.denominator, f.numerator) for f in kv[0]])):
        F = ReducibleFibre.from_type(t, fibre_genus=genus)
        if not is_minus_one_fibre(F):
            raise ArithmeticError(f"type {t} is not a (-1)-fibre")
        res = contract(F)
        out.append(MinusOneFibreClass(genus, t, res.c, res.delta, labels.get((genus, _type_key(t))), n))
    return out


def _type_key(t: Sequence[Fraction]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((f.denominator, f.numerator) for f in t))


def exclusion_suite():
    from .exclusions import exclusion_suite as run

    return run()
