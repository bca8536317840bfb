import json
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from tropalg.errors import DomainError, StructuralError
from tropalg.rings.base import ZZ
from tropalg.rings.parsing import parse_ring
from tropalg.semiring import (BOOLEAN, NAT_GCD, FgId, FiniteSemiring, RationalGcd, chain,
                              check_natgcd_isomorphism, check_partial_order, check_semiring_axioms,
                              fixture_semirings, is_idempotent, is_lo_semiring, is_simple,
                              load_semiring, localize_semiring, product_semiring, units)

FIXTURES = {s.name: s for s in fixture_semirings()}


def test_fixture_corpus_shape():
    assert len(FIXTURES) >= 12
    assert all(len(s) <= 6 for s in FIXTURES.values())
    assert {"boolean", "chain3", "diamond"} <= set(FIXTURES)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_axioms(name):
    s = FIXTURES[name]
    assert check_semiring_axioms(s)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_round_trip(name):
    s = FIXTURES[name]
    assert FiniteSemiring.from_json(s.to_json()) == s


def test_boolean_tables():
    B = BOOLEAN
    assert B.add(B.one, B.one) == B.one
    assert B.mul(B.zero, B.one) == B.zero
    assert is_idempotent(B) and is_simple(B) and is_lo_semiring(B)


def test_chain_and_order():
    c = chain(4)
    assert check_partial_order(c)
    assert c.leq(c.get("a1"), c.get("a2"))
    assert not c.leq(c.get("a2"), c.get("a1"))
    assert units(c) == [c.one]


def test_ring_fixtures_are_not_idempotent():
    assert not is_idempotent(FIXTURES["z3_ring"])
    assert is_idempotent(FIXTURES["fgid_z12"])


def test_product_semiring_size():
    p = product_semiring(BOOLEAN, chain(3))
    assert len(p) == 6
    assert check_semiring_axioms(p)


def test_bad_tables_rejected():
    with pytest.raises(StructuralError):
        FiniteSemiring(["0", "1"], [["0", "1"]], [["0", "0"], ["0", "1"]], "0", "1")
    with pytest.raises(StructuralError):
        FiniteSemiring(["0", "1"], [["0", "2"], ["1", "1"]], [["0", "0"], ["0", "1"]], "0", "1")
    with pytest.raises(StructuralError):
        FiniteSemiring.from_json("{not json")
    with pytest.raises(StructuralError):
        load_semiring("no_such_fixture")


def test_bad_table_fails_axioms():
    # addition that is not associative
    s = FiniteSemiring(["0", "a", "1"],
                       [["0", "a", "1"], ["a", "1", "0"], ["1", "0", "1"]],
                       [["0", "0", "0"], ["0", "a", "1"], ["0", "1", "1"]], "0", "1", name="bad")
    rep = check_semiring_axioms(s)
    assert not rep
    assert rep.witnesses


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_natgcd_operations(a, b):
    assert NAT_GCD.add(a, b) == gcd(a, b)
    assert NAT_GCD.mul(a, b) == a * b


def test_natgcd_isomorphism():
    pairs = [(a, b) for a in range(0, 40) for b in range(0, 40)]
    assert check_natgcd_isomorphism(pairs)


def test_fgid_finite_tabulation():
    T = FgId(parse_ring("Z/12")).to_finite()
    assert len(T) == 6
    assert check_semiring_axioms(T)
    assert len(FIXTURES["fgid_z12"]) == len(T)


def test_fgid_of_field_is_boolean():
    T = FgId(parse_ring("Q"))
    assert T.is_finite
    assert len(T.to_finite()) == 2


def test_fgid_elements_of_infinite_ring():
    with pytest.raises(DomainError):
        FgId(ZZ).elements()


def test_fraction_semiring_normal_form():
    T = FgId(ZZ)
    T6 = localize_semiring(T, ("away", ZZ.ideal(6)))
    assert T6.make(ZZ.ideal(4), ZZ.ideal(6)) == T6.make(ZZ.ideal(2), ZZ.ideal(3))
    with pytest.raises(DomainError):
        T6.make(ZZ.ideal(1), ZZ.ideal(5))


@given(st.integers(1, 200), st.integers(1, 200), st.integers(1, 200), st.integers(1, 200))
def test_fraction_semiring_matches_rationals(a, b, c, d):
    # fgId(Z) localized at all nonzero ideals is Q>0 with gcd; compare with RationalGcd
    T = FgId(ZZ)
    F = localize_semiring(T, "nonzero")
    Q = RationalGcd()
    x = F.make(ZZ.ideal(a), ZZ.ideal(b))
    y = F.make(ZZ.ideal(c), ZZ.ideal(d))
    to_q = lambda t: Fraction(t[0].generator, t[1].generator)
    assert to_q(F.add(x, y)) == Q.add(Fraction(a, b), Fraction(c, d))
    assert to_q(F.mul(x, y)) == Q.mul(Fraction(a, b), Fraction(c, d))


def test_localize_finite_semiring():
    c3 = chain(3)
    loc = localize_semiring(c3, ["a", "1"])
    assert check_semiring_axioms(loc)
    with pytest.raises(DomainError):
        localize_semiring(c3, ["a"])


def test_fixture_json_schema():
    data = json.loads(FIXTURES["boolean"].to_json())
    assert set(data) == {"name", "carrier", "add", "mul", "zero", "one"}
