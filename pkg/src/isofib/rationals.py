"""Text forms for exact rationals: mixed "a+b/c" for tables, "p/q" for JSON."""
from __future__ import annotations

import re
from fractions import Fraction

_MIXED = re.compile(r"^\s*(-?\d+)\s*\+\s*(\d+)\s*/\s*(\d+)\s*$")


def mixed(x: Fraction | int) -> str:
    """Values above 1 as "whole+num/den"; everything else as "p/q" or an integer.

    >>> mixed(Fraction(11, 3)), mixed(Fraction(-8, 3)), mixed(Fraction(2, 5))
    ('3+2/3', '-8/3', '2/5')
    """
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    if x > 1:
        whole = x.numerator // x.denominator
        return f"{whole}+{x - whole}"
    return str(x)


def parse_mixed(text: str) -> Fraction:
    """Inverse of :func:`mixed`; also accepts plain "p/q" and the minus sign U+2212."""
    text = text.replace("−", "-")
    m = _MIXED.match(text)
    if m:
        return int(m[1]) + Fraction(int(m[2]), int(m[3]))
    return Fraction(text.strip())


def to_json(x: Fraction | int) -> str:
    return str(Fraction(x))
