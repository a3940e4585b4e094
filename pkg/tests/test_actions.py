import random
from math import gcd

import pytest

from isofib.actions import (GeneratingVector, InvalidGeneratingVector, covering_genus, fix_count,
                            fix_count_rot, model_fix_count, parse_vector, random_generating_vector,
                            subquotient_genus, validate)
from isofib.groups import abelian, cyclic, psl2, symmetric


def test_klein_quartic_vector():
    G = psl2(7)
    V = parse_vector(G, "genus=0; a,b,(a*b)^-1")
    assert V.orders == (2, 3, 7)
    assert covering_genus(V) == 3


def test_genus_with_handles():
    Z = cyclic(2)
    assert covering_genus(GeneratingVector(Z, (1,) * 6)) == 2
    assert covering_genus(GeneratingVector(Z, (1, 1), (1, 1))) == 2


@pytest.mark.parametrize("text,code", [
    ("genus=0; x,x", "product"),
    ("genus=0; x,x^-1,1", "order"),
])
def test_validation_names_the_condition(text, code):
    V = parse_vector(cyclic(3), text)
    assert code in validate(V).codes()
    with pytest.raises(InvalidGeneratingVector):
        V.check()


def test_generation_is_required():
    G = abelian([2, 2])
    V = GeneratingVector(G, (G.gen("x").index, G.gen("x").index))
    assert "generation" in validate(V).codes()


def test_handle_count_must_match_genus():
    with pytest.raises(ValueError):
        parse_vector(cyclic(2), "genus=1; x,x | x")


def test_fixed_points_on_the_klein_quartic():
    G = psl2(7)
    V = parse_vector(G, "genus=0; a,b,(a*b)^-1")
    for h in range(1, G.N):
        m = int(G.orders[h])
        assert model_fix_count(V, h) == fix_count(V, h)
        assert fix_count(V, h) == {2: 4, 3: 2, 4: 0, 7: 3}[m]
        units = [q for q in range(1, m) if gcd(q, m) == 1]
        assert sum(fix_count_rot(V, h, q) for q in units) == fix_count(V, h)


def test_subquotient_genus():
    G = psl2(7)
    V = parse_vector(G, "genus=0; a,b,(a*b)^-1")
    assert subquotient_genus(V, [0]) == 3
    assert subquotient_genus(V, range(G.N)) == 0
    seven = [G.power(V.branch[2], k) for k in range(7)]
    assert subquotient_genus(V, seven) == 0


def test_random_vectors_are_valid():
    rng = random.Random(5)
    for G in (symmetric(4), abelian([2, 4]), cyclic(6)):
        for _ in range(5):
            V = random_generating_vector(G, rng, 3, 0)
            if V is not None:
                assert validate(V).ok
