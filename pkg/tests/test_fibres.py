from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isofib.fibres import (CurveConfiguration, ReducibleFibre, classify_minus_one_fibres, contract,
                           contraction_case, cyclic_signatures, delta, fibre_multiplicities,
                           is_minus_one_fibre, small_delta_exception, analyse_fibres)
from isofib.singularities import CQS, B_invariant, ell


def fibre(*fr, g=None, central=None):
    return ReducibleFibre.from_type([Fr(f) for f in fr], fibre_genus=g, central_genus=central)


def test_multiplicities_of_a_string():
    assert fibre_multiplicities(7, [3, 2, 2]) == ((3, 2, 1), (1, 3, 5))
    assert fibre_multiplicities(2, [2]) == ((1,), (1,))
    with pytest.raises(ValueError):
        fibre_multiplicities(6, [3, 2, 2])


@pytest.mark.parametrize("fr,g,c,d", [
    (("1/3", "1/3", "1/3"), 1, 1, 2 + Fr(2, 3)),
    (("1/7", "2/7", "4/7"), 3, 2, 5),
    (("1/2", "1/3", "1/6"), 1, 3, 1 + Fr(1, 3)),
    (("1/2", "1/4", "1/4"), 1, 2, 2),
    (("1/2", "2/5", "1/10"), 2, 4, 2 + Fr(2, 5)),
])
def test_contraction_examples(fr, g, c, d):
    F = fibre(*fr, g=g)
    assert is_minus_one_fibre(F)
    r = contract(F)
    assert (r.c, r.delta) == (c, d)
    assert delta(F) == d


def test_non_minus_one_fibres_contract_nothing():
    F = fibre("1/2", "1/2", central=1)
    assert not is_minus_one_fibre(F)
    assert contract(F).c == 0
    assert delta(F) == 2
    assert fibre("1/2", "1/2", "1/2", "1/2", central=1).self_intersection == -2


@pytest.mark.parametrize("n", range(3, 9))
def test_delta_of_equal_strings(n):
    assert delta(fibre(*[Fr(1, n)] * n, central=0)) == Fr(n * n - 1, 3)
    assert delta(fibre(*[Fr(1, n)] * n, central=1)) == Fr(n * n + 2, 3)


def test_delta_of_equal_halves():
    assert delta(fibre("1/2", "1/2", central=0)) == 0
    assert delta(fibre("1/2", "1/2", central=1)) == 2


def test_fibre_validation():
    with pytest.raises(ValueError):
        fibre("1/2")
    with pytest.raises(ValueError):
        fibre("1/3", "1/3", central=0)
    with pytest.raises(ValueError):
        ReducibleFibre.from_type(["1/2", "1/2"])


def test_configuration_blow_down_updates_neighbours():
    conf = CurveConfiguration.of_fibre(fibre("1/2", "1/2", central=0))
    survivors = conf.survivors()
    assert len(survivors) == 3
    first = next(i for i in survivors if conf.is_contractible(i))
    conf.blow_down(first)
    assert len(conf.survivors()) == 2


def test_cases():
    assert contraction_case(fibre("1/7", "2/7", "4/7", g=3)) == "1"
    assert contraction_case(fibre("1/2", "1/3", "1/6", g=1)) == "2"
    assert contraction_case(fibre("1/3", "1/3", "1/3", g=1)) is None


def test_classification_counts_and_labels():
    g1 = classify_minus_one_fibres(1)
    assert [(r.c, r.delta, r.label) for r in g1] == [
        (1, 2 + Fr(2, 3), "IV(~A2)"), (2, Fr(2), "III(~A1)"), (3, 1 + Fr(1, 3), "II")]
    assert len(classify_minus_one_fibres(2)) == 6
    assert len(classify_minus_one_fibres(3)) == 17
    with pytest.raises(ValueError):
        classify_minus_one_fibres(0)


def test_cyclic_signatures_genus_one():
    assert sorted((n, s) for n in (2, 3, 4, 6) for s in cyclic_signatures(1, n)) == [
        (2, (2, 2, 2, 2)), (3, (3, 3, 3)), (4, (2, 4, 4)), (6, (2, 3, 6))]


@st.composite
def rational_pair(draw):
    n = draw(st.integers(2, 40))
    q = draw(st.integers(1, n - 1).filter(lambda q: __import__("math").gcd(n, q) == 1))
    return Fr(q, n)


@settings(max_examples=60)
@given(rational_pair())
def test_genus_zero_pairs_contract_completely(x):
    F = fibre(x, 1 - x, central=0)
    r = contract(F)
    a, b = CQS.from_fraction(x), CQS.from_fraction(1 - x)
    assert r.c == ell(a) + ell(b)
    assert r.delta == 0
    assert (B_invariant(a) + B_invariant(b)) / 3 == r.c


def test_small_delta_labels():
    from isofib.quotient import construct_cyclic_fibration

    F = construct_cyclic_fibration(["1/2", "1/4", "1/4"], 1)
    assert {small_delta_exception(r) for r in analyse_fibres(F)} == {"ii"}
