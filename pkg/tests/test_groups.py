import pytest

from isofib.groups import (GroupError, abelian, alternating, automorphism_group, candidates_32_11,
                           candidates_96_64, cyclic, derived_subgroup, dihedral, has_generating_vector,
                           parse_group_spec, power_conjugacy_profile, psl2, registry, symmetric)


@pytest.mark.parametrize("G,order,classes", [
    (cyclic(6), 6, 6), (abelian([2, 2]), 4, 4), (dihedral(4), 8, 5), (symmetric(3), 6, 3),
    (symmetric(4), 24, 5), (alternating(4), 12, 4), (alternating(5), 60, 5), (psl2(7), 168, 6),
])
def test_orders_and_class_numbers(G, order, classes):
    assert G.N == order
    assert len(G.classes) == classes
    assert sum(len(c) for c in G.classes) == order


def test_multiplication_basics():
    G = psl2(7)
    for g in range(0, G.N, 7):
        assert G.mul(g, G.inv[g]) == 0
        assert G.power(g, int(G.orders[g])) == 0


def test_word_parser():
    G = parse_group_spec("cyclic:5")
    x = G.parse_word("x")
    assert G.parse_word("x^2*x^3").index == 0
    assert G.parse_word("(x*x)^-1").index == G.power(x.index, -2)
    assert G.parse_word("1").index == 0
    with pytest.raises(GroupError):
        G.parse_word("y")
    with pytest.raises(GroupError):
        G.parse_word("x^")


def test_group_spec_errors():
    with pytest.raises(GroupError):
        parse_group_spec("nonsense:3")
    with pytest.raises(GroupError):
        parse_group_spec("cyclic:abc")


def test_derived_subgroups():
    assert len(derived_subgroup(symmetric(4))) == 12
    assert len(derived_subgroup(abelian([2, 4]))) == 1
    assert len(derived_subgroup(psl2(7))) == 168


def test_automorphisms_of_small_groups():
    assert len(automorphism_group(cyclic(8))) == 4
    assert len(automorphism_group(abelian([2, 2]))) == 6
    assert len(automorphism_group(symmetric(3))) == 6


def test_triangle_generation():
    assert has_generating_vector(psl2(7), (2, 3, 7))
    assert not has_generating_vector(symmetric(4), (2, 3, 7))
    assert has_generating_vector(registry(24, 8), (2, 4, 6))
    assert has_generating_vector(registry(16, 6), (2, 8, 8))


def test_G_24_8_has_one_class_of_order_three():
    G = registry(24, 8)
    cls = [c for c in G.classes if G.orders[next(iter(c))] == 3]
    assert len(cls) == 1 and len(cls[0]) == 2


def test_order_eight_elements_of_G_16_6_are_5_conjugate():
    G = registry(16, 6)
    prof = power_conjugacy_profile(G, 8)
    assert prof and all(5 in p for p in prof.values())


def test_G_32_9():
    G = registry(32, 9)
    assert max(int(o) for o in G.orders) == 8
    assert len(derived_subgroup(G)) == 4
    assert len(automorphism_group(G)) == 64


def test_candidate_searches():
    c32, c96 = candidates_32_11(), candidates_96_64()
    assert len(c32) == 2 and all(G.N == 32 for G in c32)
    assert len(c96) == 48 and all(G.N == 96 for G in c96)
    for G in c32 + c96:
        assert all(5 in p for p in power_conjugacy_profile(G, 8).values())
