from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from isofib import golden
from isofib.rationals import mixed, parse_mixed, to_json


def test_mixed_forms():
    assert mixed(Fraction(52, 5)) == "10+2/5"
    assert mixed(Fraction(-6, 11)) == "-6/11"
    assert mixed(Fraction(3)) == "3"
    assert mixed(Fraction(1, 2)) == "1/2"
    assert parse_mixed("2+2/3") == Fraction(8, 3)
    assert parse_mixed("−19/7") == Fraction(-19, 7)
    assert to_json(Fraction(8, 3)) == "8/3"


@given(st.fractions(max_denominator=500))
def test_round_trips(x):
    assert parse_mixed(mixed(x)) == x
    assert Fraction(to_json(x)) == x


def test_reference_data_loads():
    rows = golden.cqs_rows()
    assert len(rows) == 41
    assert {(r.n, r.q) for r in rows} >= {(2, 1), (11, 7), (14, 3)}
    assert [len(golden.minus_one_rows(g)) for g in (1, 2, 3)] == [3, 6, 17]
    assert len(golden.cyclic_actions(2)) == 8
    assert golden.minus_one_labels()[(1, ((3, 1), (3, 1), (3, 1)))] == "IV(~A2)"
