from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import coprime_pair
from isofib.contfrac import (HJExpansion, blocks_of, convergents, dual_shift_identities, hj_eval,
                             hj_expand, inverse_residue, riemenschneider_dual)


@pytest.mark.parametrize("n,q,terms", [
    (2, 1, (2,)), (7, 3, (3, 2, 2)), (11, 7, (2, 3, 2, 2)), (12, 5, (3, 2, 3)),
    (14, 3, (5, 3)), (5, 4, (2, 2, 2, 2)), (7, 1, (7,)),
])
def test_known_expansions(n, q, terms):
    assert hj_expand(n, q).terms == terms


@pytest.mark.parametrize("n,q", [(4, 2), (1, 0), (5, 5), (6, 0), (6, 9)])
def test_rejects_bad_pairs(n, q):
    with pytest.raises(ValueError):
        hj_expand(n, q)


def test_rejects_small_terms():
    with pytest.raises(ValueError):
        HJExpansion((3, 1))
    with pytest.raises(ValueError):
        HJExpansion(())


def test_convergents_of_7_3():
    # seeds (0, 1) and (-1, 0); the last convergent is (n, q)
    assert convergents(hj_expand(7, 3)) == [(3, 1), (5, 2), (7, 3)]


def test_dual_of_7_3():
    dual, b = riemenschneider_dual(7, 3)
    assert dual.terms == (2, 4)
    assert hj_eval(dual) == Fraction(7, 4)
    assert not b.swapped


def test_all_twos_is_handled_from_the_other_side():
    dual, b = riemenschneider_dual(5, 4)
    assert dual.terms == (5,)
    assert b.swapped
    assert b.bumped_side() == [2, 2, 2, 2]


def test_half_is_left_to_the_caller():
    with pytest.raises(ValueError):
        riemenschneider_dual(2, 1)


def test_blocks_of_all_twos_raise():
    with pytest.raises(ValueError):
        blocks_of([2, 2, 2])


def test_dual_shift_example():
    # 7/3: q' = 5, a = 2
    full, head, a = dual_shift_identities(7, 3)
    assert (full, head, a) == (Fraction(10, 7), Fraction(3, 2), 2)


@given(coprime_pair())
def test_round_trip(pair):
    n, q = pair
    e = hj_expand(n, q)
    assert hj_eval(e) == Fraction(n, q)
    assert all(b >= 2 for b in e)


@given(coprime_pair())
def test_inverse_residue_reverses(pair):
    n, q = pair
    qp = inverse_residue(n, q)
    assert q * qp % n == 1 % n
    assert hj_expand(n, qp).terms == hj_expand(n, q).terms[::-1]


@given(coprime_pair().filter(lambda p: 2 * p[1] != p[0]))
def test_duality_is_involutive(pair):
    n, q = pair
    dual, _ = riemenschneider_dual(n, q)
    back, _ = riemenschneider_dual(n, n - q)
    assert hj_eval(dual) == Fraction(n, n - q)
    assert back == hj_expand(n, q)
    # total length of an expansion and its dual: sum(b - 1) + 1 on either side
    assert len(dual) == sum(b - 2 for b in hj_expand(n, q)) + 1


@given(coprime_pair())
def test_convergent_determinant(pair):
    n, q = pair
    cv = [(1, 0)] + convergents(hj_expand(n, q))
    for (n0, q0), (n1, q1) in zip(cv, cv[1:]):
        assert n0 * q1 - n1 * q0 == 1
        assert gcd(n1, q1) == 1


@given(coprime_pair().filter(lambda p: p[1] > 1))
def test_dual_shift_property(pair):
    n, q = pair
    full, head, a = dual_shift_identities(n, q)
    assert q * inverse_residue(n, q) == 1 + a * n
    assert full == Fraction(n + q, a + inverse_residue(n, q))
