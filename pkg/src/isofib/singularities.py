"""Cyclic quotient singularities 1/n(1,q) and their numerical invariants."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator

from .contfrac import HJExpansion, _check_pair, hj_expand, inverse_residue


@dataclass(frozen=True, order=True)
class CyclicQuotientSingularity:
    n: int
    q: int

    def __post_init__(self):
        _check_pair(self.n, self.q)

    @classmethod
    def from_fraction(cls, x: Fraction | str) -> "CyclicQuotientSingularity":
        """1/n(1,q) from the fraction q/n."""
        x = Fraction(x)
        return cls(x.denominator, x.numerator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.q, self.n)

    @cached_property
    def q_prime(self) -> int:
        return inverse_residue(self.n, self.q)

    @cached_property
    def expansion(self) -> HJExpansion:
        return hj_expand(self.n, self.q)

    def dual_type(self) -> "CyclicQuotientSingularity":
        """Same point seen from the other factor: q replaced by q'."""
        return CyclicQuotientSingularity(self.n, self.q_prime)

    @property
    def canonical_q(self) -> int:
        return min(self.q, self.q_prime)

    def sort_key(self):
        return (self.n, self.canonical_q, self.q)

    def __str__(self) -> str:
        return f"1/{self.n}(1,{self.q})"


CQS = CyclicQuotientSingularity


def ell(x: CQS) -> int:
    return len(x.expansion)


def h_invariant(x: CQS) -> Fraction:
    return 2 - Fraction(2 + x.q + x.q_prime, x.n) - sum(b - 2 for b in x.expansion)


def e_invariant(x: CQS) -> Fraction:
    return ell(x) + 1 - Fraction(1, x.n)


def B_invariant(x: CQS) -> Fraction:
    direct = Fraction(x.q + x.q_prime, x.n) + sum(x.expansion)
    if direct != 2 * e_invariant(x) - h_invariant(x):
        raise ArithmeticError(f"B formulas disagree at {x}")
    return direct


def B_of(x: Fraction | str) -> Fraction:
    """B of the fraction q/n, convenient for identities written in q/n."""
    return B_invariant(CQS.from_fraction(x))


def is_isomorphic(x: CQS, y: CQS) -> bool:
    return x.n == y.n and y.q in (x.q, x.q_prime)


class SingularLocus:
    """Multiset of cyclic quotient singularities."""

    def __init__(self, points: Iterable[CQS] | dict[CQS, int] = ()):
        counts = Counter(points)
        if any(m < 1 for m in counts.values()):
            raise ValueError("multiplicities must be positive")
        self._counts = counts

    @classmethod
    def parse(cls, entries: Iterable[tuple[int, int, int]]) -> "SingularLocus":
        """From (n, q, multiplicity) triples."""
        return cls({CQS(n, q): m for n, q, m in entries})

    def items(self) -> list[tuple[CQS, int]]:
        return sorted(self._counts.items(), key=lambda kv: kv[0].sort_key())

    def __iter__(self) -> Iterator[CQS]:
        for x, m in self.items():
            for _ in range(m):
                yield x

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __getitem__(self, x: CQS) -> int:
        return self._counts.get(x, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, SingularLocus):
            return self._counts == other._counts
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._counts)

    def up_to_isomorphism(self) -> Counter:
        return Counter((x.n, x.canonical_q) for x in self)

    def dual(self) -> "SingularLocus":
        return SingularLocus(x.dual_type() for x in self)

    def total(self, f) -> Fraction:
        return sum((Fraction(f(x)) for x in self), Fraction(0))

    def __str__(self) -> str:
        if not self._counts:
            return "0"
        return " + ".join(f"{m}x{x}" if m > 1 else str(x) for x, m in self.items())

    __repr__ = __str__


@dataclass(frozen=True)
class TableRow:
    n: int
    q: int
    expansion: tuple[int, ...]
    q_prime: int
    B: Fraction
    h: Fraction


def table_row(n: int, q: int) -> TableRow:
    x = CQS(n, q)
    return TableRow(n, q, x.expansion.terms, x.q_prime, B_invariant(x), h_invariant(x))


def singularity_table(n_max: int) -> list[TableRow]:
    """Every coprime pair (n, q) with 2 <= n <= n_max, ordered by (n, q)."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    return [table_row(n, q) for n in range(2, n_max + 1) for q in range(1, n) if gcd(n, q) == 1]


appendix_b_table = singularity_table
