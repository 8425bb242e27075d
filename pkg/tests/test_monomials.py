import random

import pytest

from monograded.errors import DimensionMismatch, InfiniteLength, ZeroIdealColon
from monograded.monomials import (
    Monomial,
    MonomialIdeal,
    compositions,
    minimalize,
    parse_ideal,
    parse_monomial,
)
from monograded.bounds import random_m_primary_ideal

from oracles import box_standard_count, brute_colon_matches, brute_intersection_matches, monomials_upto

XY = ("x", "y")
ABCD = ("a", "b", "c", "d")


def mono(text, names):
    return parse_monomial(text, names)


def test_divides_lcm_product():
    b = mono("b", ABCD)
    c3 = mono("c^3", ABCD)
    assert b.lcm(c3) == mono("b*c^3", ABCD)
    assert mono("x", XY).divides(mono("x^3", XY))
    assert not mono("x^3", XY).divides(mono("x", XY))
    assert mono("x^2*y^4", XY) * mono("x*y^5", XY) == mono("x^3*y^9", XY)


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionMismatch):
        mono("x", XY).divides(mono("b", ABCD))
    with pytest.raises(DimensionMismatch):
        parse_ideal("x", XY) + parse_ideal("b", ABCD)


def test_minimalize_examples():
    gens = {mono(t, ABCD) for t in ("b*c", "b*d", "b^2", "c^3", "c^3*d", "b^2*c^3")}
    expected = {mono(t, ABCD) for t in ("b*c", "b*d", "b^2", "c^3")}
    assert minimalize(gens) == expected
    assert minimalize({mono("x", XY), mono("x^2", XY)}) == {mono("x", XY)}
    assert MonomialIdeal(2, ()).is_zero


def test_minimalize_idempotent_random():
    rng = random.Random(11)
    for _ in range(40):
        k = rng.randint(1, 4)
        gens = {
            Monomial(tuple(rng.randint(0, 4) for _ in range(k)))
            for _ in range(rng.randint(0, 6))
        }
        once = minimalize(gens)
        assert minimalize(once) == once


def test_sum_product_power():
    m2 = parse_ideal("x^2, x*y, y^2", XY)
    fourth = m2 * m2
    assert fourth == parse_ideal("x^4, x^3*y, x^2*y^2, x*y^3, y^4", XY)
    ideal = parse_ideal("x^3, x^2*y^4, x*y^5, y^7", XY)
    assert ideal.power(0).is_unit
    assert ideal.power(2).num_generators() == 7  # mu(I^2) = 3*2 + 1
    assert ideal.power(1) == ideal


def test_intersection_examples():
    j = parse_ideal("b, c^3", ABCD)
    k = parse_ideal("c, d, b^2", ABCD)
    assert j.intersection(k) == parse_ideal("b*d, b*c, b^2, c^3", ABCD)
    ideal = parse_ideal("x^2, y^3", XY)
    assert ideal.intersection(MonomialIdeal.unit(2, XY)) == ideal
    assert parse_ideal("x", XY).intersection(parse_ideal("y", XY)) == parse_ideal("x*y", XY)


def test_colon_examples():
    ideal = parse_ideal("x^3, x^2*y^4, x*y^5, y^7", XY)
    assert ideal.colon(parse_ideal("x", XY)) == parse_ideal("x^2, x*y^4, y^5", XY)
    assert parse_ideal("x^2*y, y^3", XY).colon(parse_ideal("y", XY)) == parse_ideal("x^2, y^2", XY)
    with pytest.raises(ZeroIdealColon):
        ideal.colon(MonomialIdeal.zero(2, XY))


def test_saturation_m_primary_is_unit():
    assert parse_ideal("x^2, x*y, y^2", XY).saturation().is_unit
    assert parse_ideal("x^3, y^7", XY).saturation().is_unit
    # (x) is saturated already
    assert parse_ideal("x", XY).saturation() == parse_ideal("x", XY)
    # x * m saturates to (x)
    mixed = parse_ideal("x^2, x*y", XY)
    assert mixed.saturation() == parse_ideal("x", XY)


def test_membership_and_m_primary():
    ideal = parse_ideal("x^3, x^2*y^4, x*y^5, y^7", XY)
    assert ideal.contains_monomial(mono("x^3*y", XY))
    assert not ideal.contains_monomial(mono("x^2*y^3", XY))
    assert ideal.is_m_primary()
    assert not parse_ideal("x*y", XY).is_m_primary()
    assert not MonomialIdeal.unit(2, XY).is_m_primary()


def test_quotient_length_examples():
    assert parse_ideal("x^2, x*y, y^2", XY).quotient_length() == 3
    n_ideal = parse_ideal("b*d, b*c, b^2, c^3", ABCD)
    assert n_ideal.graded_length(1) == 4
    ideal = parse_ideal("x^3, x^2*y^4, x*y^5, y^7", XY)
    l1 = ideal.quotient_length()
    l2 = ideal.power(2).quotient_length()
    assert (l1, l2) == (16, 52)
    # identity: ell(R/I^2) - ell(R/I) = ell(I/I^2), both sides by brute force
    assert l2 - l1 == box_standard_count(ideal.power(2)) - box_standard_count(ideal)


def test_quotient_length_matches_box_oracle_random():
    rng = random.Random(5)
    for _ in range(25):
        k = rng.randint(1, 3)
        ideal = random_m_primary_ideal(rng, k, 5)
        assert ideal.quotient_length() == box_standard_count(ideal)


def test_quotient_length_requires_artinian():
    with pytest.raises(InfiniteLength):
        parse_ideal("x", XY).quotient_length()


def test_graded_length_sums_match_enumeration():
    rng = random.Random(7)
    bound = 6
    for _ in range(15):
        k = rng.randint(1, 3)
        ideal = random_m_primary_ideal(rng, k, 4)
        direct = sum(
            1 for m in monomials_upto(k, bound) if not ideal.contains_monomial(m)
        )
        assert sum(ideal.graded_length(n) for n in range(bound + 1)) == direct


def test_colon_contains_and_product_inside_random():
    rng = random.Random(13)
    for _ in range(25):
        k = rng.randint(1, 3)
        a = random_m_primary_ideal(rng, k, 4)
        b = random_m_primary_ideal(rng, k, 4)
        quot = a.colon(b)
        assert quot.contains_ideal(a)
        assert a.contains_ideal(quot * b)
        assert brute_colon_matches(a, b, quot, 7)


def test_intersection_matches_brute_force_random():
    rng = random.Random(17)
    for _ in range(25):
        k = rng.randint(1, 3)
        a = random_m_primary_ideal(rng, k, 4)
        b = random_m_primary_ideal(rng, k, 4)
        assert brute_intersection_matches(a, b, a.intersection(b), 8)


def test_results_are_minimalized_random():
    rng = random.Random(19)
    for _ in range(20):
        k = rng.randint(1, 3)
        a = random_m_primary_ideal(rng, k, 4)
        b = random_m_primary_ideal(rng, k, 4)
        for result in (a + b, a * b, a.intersection(b), a.colon(b)):
            gens = result.minimal_generators()
            for i, g in enumerate(gens):
                for j, h in enumerate(gens):
                    assert i == j or not g.divides(h)


def test_compositions_count():
    assert len(list(compositions(5, 3))) == 21  # C(7, 2)
    assert list(compositions(2, 1)) == [(2,)]


def test_parse_and_format_roundtrip():
    ideal = parse_ideal("x^3, x^2*y^4, x*y^5, y^7", XY)
    assert parse_ideal(ideal.format().strip("()"), XY) == ideal
    assert parse_ideal("", XY).is_zero
    assert parse_ideal("1", XY).is_unit
    assert str(mono("x^2*y", XY)) == "x^2*y"
    with pytest.raises(ValueError):
        parse_ideal("q^2", XY)
