"""Frozen reference data shipped with the package (``isofib/data/*.json``)."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .rationals import parse_mixed


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    with resources.files("isofib").joinpath("data").joinpath(f"{name}.json").open(encoding="utf-8") as fh:
        return json.load(fh)


@dataclass(frozen=True)
class GoldenCQSRow:
    n: int
    q: int
    expansion: tuple[int, ...]
    q_prime: int
    B: Fraction
    h: Fraction


@dataclass(frozen=True)
class GoldenFibreRow:
    genus: int
    type: tuple[Fraction, ...]
    c: int
    delta: Fraction
    label: str | None


def cqs_rows() -> list[GoldenCQSRow]:
    return [GoldenCQSRow(r["n"], r["q"], tuple(r["expansion"]), r["q_prime"],
                         parse_mixed(r["B"]), parse_mixed(r["h"]))
            for r in load("cqs_table")["rows"]]


def minus_one_rows(genus: int | None = None) -> list[GoldenFibreRow]:
    out = []
    for g, block in sorted(load("minus_one_fibres")["genera"].items()):
        if genus is not None and int(g) != genus:
            continue
        for r in block["rows"]:
            out.append(GoldenFibreRow(int(g), tuple(Fraction(f) for f in r["type"]), r["c"],
                                      parse_mixed(r["delta"]), r["label"]))
    return out


def cyclic_actions(genus: int) -> list[tuple[int, tuple[int, ...]]]:
    """(n, sorted branch orders) of the cyclic actions with rational quotient."""
    block = load("minus_one_fibres")["genera"][str(genus)]
    return sorted((n, tuple(sorted(ms))) for n, ms in block["cyclic_actions"])


def minus_one_labels() -> dict[tuple[int, tuple[tuple[int, int], ...]], str]:
    """Kodaira/Ogg names keyed by (genus, sorted (n, q) pairs of the type)."""
    return {(r.genus, tuple(sorted((f.denominator, f.numerator) for f in r.type))): r.label
            for r in minus_one_rows() if r.label is not None}


def examples() -> dict:
    return load("examples")
