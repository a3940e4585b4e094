"""Hirzebruch-Jung continued fractions.

An expansion ``[b1, ..., bk]`` with every ``bi >= 2`` stands for the
descending fraction ``b1 - 1/(b2 - 1/(... - 1/bk))``.  Every rational
``n/q > 1`` in lowest terms has exactly one such expansion.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

Rational = Fraction


class IdentityError(ArithmeticError):
    """Raised when a continued-fraction identity fails to hold."""


def _check_pair(n: int, q: int) -> None:
    if not (isinstance(n, int) and isinstance(q, int)):
        raise TypeError("n and q must be integers")
    if n < 2 or not 1 <= q <= n - 1:
        raise ValueError(f"need 1 <= q <= n-1, got n={n}, q={q}")
    if gcd(n, q) != 1:
        raise ValueError(f"n={n} and q={q} are not coprime")


@dataclass(frozen=True)
class HJExpansion:
    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(b) for b in self.terms)
        if not terms:
            raise ValueError("an expansion needs at least one term")
        if any(b < 2 for b in terms):
            raise ValueError(f"all terms must be >= 2, got {list(terms)}")
        object.__setattr__(self, "terms", terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def reversed(self) -> "HJExpansion":
        return HJExpansion(self.terms[::-1])

    @property
    def value(self) -> Fraction:
        return hj_eval(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.terms)) + "]"


def hj_expand(n: int, q: int) -> HJExpansion:
    """Expansion of n/q by the ceiling recursion b = ceil(n/q)."""
    _check_pair(n, q)
    terms = []
    while q > 0:
        b = -(-n // q)
        terms.append(b)
        n, q = q, b * q - n
    return HJExpansion(tuple(terms))


def hj_eval(e: HJExpansion | Sequence[int]) -> Fraction:
    terms = list(e)
    if not terms:
        raise ValueError("empty expansion")
    value = Fraction(terms[-1])
    for b in reversed(terms[:-1]):
        value = b - 1 / value
    return value


def convergents(e: HJExpansion | Sequence[int]) -> list[tuple[int, int]]:
    """Pairs (n_s, q_s) with n_s/q_s = [b1, ..., bs]."""
    n_prev, n_cur = 0, 1
    q_prev, q_cur = -1, 0
    out = []
    for b in e:
        n_prev, n_cur = n_cur, b * n_cur - n_prev
        q_prev, q_cur = q_cur, b * q_cur - q_prev
        out.append((n_cur, q_cur))
    return out


def inverse_residue(n: int, q: int) -> int:
    _check_pair(n, q)
    return pow(q, -1, n) if n > 1 else 0


@dataclass(frozen=True)
class DualBlocks:
    """Block lengths describing a pair of mutually dual expansions.

    The "twos side" is ``[(2)^k1, l1+3, (2)^k2, ..., l_{t-1}+3, (2)^kt]``
    and the "bumped side" is ``[k1+2, (2)^l1, k2+3, ..., k_{t-1}+3,
    (2)^l_{t-1}, kt+2]``.  ``swapped`` is true when the expansion passed
    in is the bumped side (this only happens for n/(n-1) = [2, ..., 2]).
    """

    k: tuple[int, ...]
    l: tuple[int, ...]
    swapped: bool = False

    @property
    def t(self) -> int:
        return len(self.k)

    def twos_side(self) -> list[int]:
        out = [2] * self.k[0]
        for li, ki in zip(self.l, self.k[1:]):
            out.append(li + 3)
            out.extend([2] * ki)
        return out

    def bumped_side(self, last_bump: int = 2, drop_last: bool = False) -> list[int]:
        """The dual side; ``last_bump`` is added to the final k block."""
        t = self.t
        out = [self.k[0] + 2] if t > 1 else []
        for j, li in enumerate(self.l):
            out.extend([2] * li)
            if j + 1 < t - 1:
                out.append(self.k[j + 1] + 3)
        if not drop_last:
            out.append(self.k[-1] + last_bump)
        return out


def blocks_of(terms: Sequence[int]) -> DualBlocks:
    """Read off the blocks of an expansion on the twos side.

    Raises ValueError when the expansion consists of twos only, since
    such an expansion has no representation on that side.
    """
    k: list[int] = [0]
    l: list[int] = []
    for b in terms:
        if b == 2:
            k[-1] += 1
        else:
            l.append(b - 3)
            k.append(0)
    if not l:
        raise ValueError("an all-twos expansion has no twos-side blocks")
    return DualBlocks(tuple(k), tuple(l))


def riemenschneider_dual(n: int, q: int) -> tuple[HJExpansion, DualBlocks]:
    _check_pair(n, q)
    if 2 * q == n:
        raise ValueError("1/2 is self-dual and is handled by the caller")
    e = hj_expand(n, q)
    dual = hj_expand(n, n - q)
    if any(b > 2 for b in e):
        blocks = blocks_of(e.terms)
        mine, theirs = blocks.twos_side(), blocks.bumped_side()
    else:
        blocks = blocks_of(dual.terms)
        blocks = DualBlocks(blocks.k, blocks.l, swapped=True)
        mine, theirs = blocks.bumped_side(), blocks.twos_side()
    if mine != list(e.terms) or theirs != list(dual.terms):
        raise IdentityError(f"block decomposition does not reproduce the dual of {n}/{q}")
    return dual, blocks


def dual_shift_identities(n: int, q: int) -> tuple[Fraction, Fraction, int]:
    """Return ((n+q)/(a+q'), q/a, a) where q q' = 1 + a n.

    The blocks of n/(n-q') on the twos side give the bumped list with the
    last k raised by 3; it evaluates to (n+q)/(a+q'), and dropping its
    final entry gives q/a.  The reversed bumped list evaluates to
    (n+q)/q.  All three are checked.
    """
    _check_pair(n, q)
    if q == 1:
        raise ValueError("q = 1 gives a = 0")
    qp = inverse_residue(n, q)
    a = (q * qp - 1) // n
    blocks = blocks_of(hj_expand(n, n - qp).terms)
    full = blocks.bumped_side(last_bump=3)
    head = blocks.bumped_side(drop_last=True)
    frac1 = Fraction(n + q, a + qp)
    frac2 = Fraction(q, a)
    if hj_eval(full) != frac1:
        raise IdentityError(f"appended list {full} != {frac1}")
    if not head or hj_eval(head) != frac2:
        raise IdentityError(f"truncated list {head} != {frac2}")
    if hj_eval(full[::-1]) != Fraction(n + q, q):
        raise IdentityError(f"reversed list {full[::-1]} != {Fraction(n + q, q)}")
    return frac1, frac2, a
