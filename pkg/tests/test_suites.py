"""The identity, exclusion, randomized and aggregate suites."""
import pytest

from isofib.exclusions import conjugation_closure, cyclic_cover, exclusion_suite, free_elements
from isofib.groups import cyclic, symmetric
from isofib.identities import CONTINUED_FRACTION_SUITE, FIBRE_SUITE, IdentityResult
from isofib.randomized import fixed_fibrations, fixed_point_suite, structural_suite
from isofib.verify import SECTIONS, run_verification


@pytest.mark.parametrize("name", sorted(CONTINUED_FRACTION_SUITE))
def test_continued_fraction_identity(name):
    r = CONTINUED_FRACTION_SUITE[name]()
    assert r.ok, r.examples


@pytest.mark.parametrize("name", sorted(FIBRE_SUITE))
def test_fibre_identity(name):
    r = FIBRE_SUITE[name]()
    assert r.ok, r.examples


def test_identity_result_records_witnesses():
    r = IdentityResult("demo")
    assert not r.ok
    for i in range(8):
        r.record(i % 2 == 0, i)
    assert (r.checked, r.failures, r.examples) == (8, 4, [1, 3, 5, 7])


def test_cover_and_free_elements():
    G = cyclic(6)
    assert cyclic_cover(G, [3]) == {0, 3}
    # generators of Z6 reach 3, the order-3 elements do not
    assert free_elements(G, {0, 3}) == {2, 4}
    S3 = symmetric(3)
    t = next(g for g in range(S3.N) if S3.orders[g] == 2)
    assert len(conjugation_closure(S3, [t])) == 3


def test_exclusions():
    rep = exclusion_suite()
    assert rep.ok, [c for c in rep.failures()]
    assert {c.case for c in rep.checks} == {"2a", "2b", "a", "b", "c", "d", "e"}


def test_small_random_suites_are_seeded():
    a = fixed_point_suite(seed=3, count=10)
    b = fixed_point_suite(seed=3, count=10)
    assert a.ok and (a.samples, a.checks) == (b.samples, b.checks)
    s = structural_suite(seed=4, count=8)
    assert s.ok and s.samples == 8 + len(fixed_fibrations())


def test_verification_sections_run_alone():
    r = run_verification(["groups"])
    assert r.ok and {c.section for c in r.checks} == {"groups"}
    with pytest.raises(ValueError):
        run_verification(["nope"])
    with pytest.raises(ValueError):
        run_verification(mutate="nope")
    assert list(SECTIONS)[0] == "cqs-table"


def test_h_sign_mutation_is_caught():
    r = run_verification(["cqs-table"], mutate="h-sign")
    assert not r.ok
    bad = r.failures()
    assert all("h" in c.detail for c in bad)
    # rows with h = 0 (q = n-1) survive the sign flip
    assert len(bad) == len([c for c in r.checks if c.name.startswith("row")]) - 8
