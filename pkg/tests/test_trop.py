from math import gcd

import pytest
import sympy

from tropalg.errors import DomainError
from tropalg.modules import FgMod
from tropalg.rings import ZZ, ResidueRing, morphism, parse_element, parse_ring
from tropalg.semiring import BOOLEAN, FgId, chain, load_semiring
from tropalg.trop import (KIdealHandle, KSubmoduleHandle, alternative_presentation,
                          check_fgid_functor, check_kideal_product, check_module_seminorm,
                          check_module_universal_property, check_morphism, check_order,
                          check_primary_preservation, check_seminorm, check_universal_property,
                          check_vhat_well_defined, collapse_to_boolean, correspondence_backward,
                          correspondence_forward, enumerate_morphisms, fgid_functor,
                          handle_is_prime, handle_is_primary, induced_vhat, integer_witnesses,
                          is_realization, kideal_product, module_norm, nat_gcd_abs,
                          subtractive_closure_fgid, tabulated_u_R, table_valuation,
                          universal_valuation, valuation, verify_correspondence)


def test_u_R_is_a_valuation_on_z(rng):
    v = universal_valuation(ZZ)
    rep = check_seminorm(v, [rng.randint(-100, 100) for _ in range(40)])
    assert rep and rep.details["valuation"] and rep.details["integral"]


def test_collapse_is_a_valuation_on_a_domain(rng):
    R = parse_ring("F5[x]")
    rep = check_seminorm(collapse_to_boolean(R), [R.random_element(rng) for _ in range(30)])
    assert rep.details["valuation"]


def test_collapse_is_not_multiplicative_with_zero_divisors():
    R = ResidueRing(ZZ, 6)
    rep = check_seminorm(collapse_to_boolean(R), list(R.elements()))
    assert rep
    assert not rep.details["multiplicative"]


def test_table_valuation_must_cover_ring():
    R = ResidueRing(ZZ, 2)
    with pytest.raises(DomainError):
        table_valuation(R, BOOLEAN, {"0": "0"})
    with pytest.raises(DomainError):
        valuation("p-adic", ZZ)
    with pytest.raises(DomainError):
        valuation("nat_gcd_abs", parse_ring("Q"))


def test_bad_table_fails_seminorm():
    # sending everything nonzero to the bottom of a chain breaks |1| = 1
    R = ResidueRing(ZZ, 3)
    t = chain(3)
    v = table_valuation(R, t, {"0": "0", "1": "0", "2": "0"})
    assert not check_seminorm(v, list(R.elements()))


def test_nat_gcd_realization_small():
    ideals = [ZZ.ideal(n) for n in range(0, 300)]
    pairs = [(ZZ.ideal(a), ZZ.ideal(b)) for a in range(0, 40) for b in range(0, 40)]
    rep = is_realization(nat_gcd_abs(), ideals, list(range(-30, 31)), pairs, targets=range(300))
    assert rep, rep.witnesses
    for I, J in pairs[:200]:
        a, b = I.generator, J.generator
        assert (I + J).generator == gcd(a, b)
        assert (I * J).generator == a * b


def test_non_realization_detected():
    R = ResidueRing(ZZ, 4)
    rep = is_realization(collapse_to_boolean(R), FgId(R).elements(), list(R.elements()))
    assert not rep


@pytest.mark.parametrize("n", [2, 4, 6, 12])
def test_tabulated_u_R_is_realization(n):
    R = ResidueRing(ZZ, n)
    v = tabulated_u_R(R)
    rep = is_realization(v, FgId(R).elements(), list(R.elements()))
    assert rep, rep.witnesses


@pytest.mark.parametrize("n", [4, 5, 6, 8])
def test_universal_property_finite(n, rng):
    R = ResidueRing(ZZ, n)
    rep = check_universal_property(tabulated_u_R(R), list(R.elements()), FgId(R).elements(), rng)
    assert rep, rep.witnesses
    assert rep.details["morphisms_enumerated"] >= 1


def test_collapse_factors_only_over_a_field(rng):
    F5 = ResidueRing(ZZ, 5)
    assert check_universal_property(collapse_to_boolean(F5), list(F5.elements()),
                                    FgId(F5).elements(), rng)
    # on Z/4 the collapse is not multiplicative (2 * 2 = 0), so nothing factors it
    Z4 = ResidueRing(ZZ, 4)
    rep = check_universal_property(collapse_to_boolean(Z4), list(Z4.elements()),
                                   FgId(Z4).elements(), rng)
    assert not rep


def test_universal_property_integers(rng):
    samples = [rng.randint(-1000, 1000) for _ in range(100)]
    ideals = [ZZ.ideal(rng.randint(0, 500), rng.randint(0, 500)) for _ in range(30)]
    for v in (universal_valuation(ZZ), nat_gcd_abs(), collapse_to_boolean(ZZ)):
        assert check_universal_property(v, samples, ideals, rng)


def test_non_integral_valuation_rejected():
    R = ResidueRing(ZZ, 2)
    t = load_semiring("maxplus_capped")
    # "2" lies above the unit "0" of the capped max-plus semiring
    v = table_valuation(R, t, {"0": "-inf", "1": "2"})
    with pytest.raises(DomainError):
        induced_vhat(v, list(R.elements()))


def test_enumerate_morphisms_bool_to_chain():
    # B -> C3: 0 -> 0, 1 -> 2 is the only choice
    assert enumerate_morphisms(BOOLEAN, chain(3)) == [(0, 2)]
    assert len(enumerate_morphisms(chain(3), BOOLEAN)) == 2


def test_vhat_presentation_independent(rng):
    R = parse_ring("Q[x,y]")
    ideals = [R.ideal(R.random_element(rng, degree=2), R.random_element(rng, degree=2))
              for _ in range(5)]
    assert check_vhat_well_defined(universal_valuation(R), ideals, rng)
    for I in ideals:
        assert R.ideal(*alternative_presentation(I, rng)) == I


def test_fgid_functor(rng):
    Z12 = ResidueRing(ZZ, 12)
    f = morphism("reduction", ZZ, Z12)
    assert check_fgid_functor(f, range(-30, 30))
    F = fgid_functor(f)
    assert check_morphism(F, [ZZ.ideal(a) for a in range(0, 25)])
    R = parse_ring("Q[x]")
    ev = morphism("evaluation", R, point=2)
    assert check_fgid_functor(ev, [R.random_element(rng) for _ in range(20)])
    # <x - 2> goes to zero
    assert fgid_functor(ev)(R.ideal(parse_element(R, "x - 2"))).is_zero
    with pytest.raises(DomainError):
        fgid_functor(lambda a: a)


@pytest.mark.parametrize("name", ["u_M", "content"])
def test_module_norms(name, rng):
    M = FgMod(ZZ, 2)
    w = module_norm(name, ZZ, 2)
    vecs = [M.random_vector(rng, bound=20) for _ in range(15)]
    assert check_module_seminorm(w, vecs, [0, 1, -3, 6])
    subs = [M.random_element(rng) for _ in range(8)]
    assert check_module_universal_property(w, vecs, subs, rng)


def test_content_norm_value():
    w = module_norm("content", ZZ, 2)
    assert w([4, 6]) == ZZ.ideal(2)
    with pytest.raises(DomainError):
        module_norm("max", ZZ, 2)


@pytest.mark.parametrize("ring", ["Z", "F5[x]", "Q[x,y]", "Z/12", "Z[1/6]"])
def test_correspondence_round_trip(ring, rng):
    R = parse_ring(ring)
    for _ in range(10):
        L = R.ideal(*[R.random_element(rng) for _ in range(rng.randint(1, 3))])
        rep = verify_correspondence(L, rng, samples=3)
        assert rep, rep.witnesses
        assert isinstance(correspondence_forward(L), KIdealHandle)


def test_correspondence_modules(rng):
    M = FgMod(ZZ, 2)
    for _ in range(20):
        S = M.random_element(rng, gens=3)
        assert verify_correspondence(S, rng, samples=5)
        h = correspondence_forward(S)
        assert isinstance(h, KSubmoduleHandle)
        assert correspondence_backward(h) == S
    with pytest.raises(DomainError):
        correspondence_forward(3)


def test_order_both_ways():
    assert check_order(ZZ.ideal(12), ZZ.ideal(6))
    assert check_order(ZZ.ideal(6), ZZ.ideal(12))
    h4, h2 = correspondence_forward(ZZ.ideal(4)), correspondence_forward(ZZ.ideal(2))
    assert h4 <= h2 and not h2 <= h4
    assert ZZ.ideal(8) in h4 and ZZ.ideal(6) not in h4


def test_handle_sum_and_product():
    h4, h6 = correspondence_forward(ZZ.ideal(4)), correspondence_forward(ZZ.ideal(6))
    assert (h4 + h6) == correspondence_forward(ZZ.ideal(2))
    assert kideal_product(h4, h6) == correspondence_forward(ZZ.ideal(24))
    assert subtractive_closure_fgid(FgId(ZZ), [ZZ.ideal(4), ZZ.ideal(6)]) == h4 + h6


def test_kideal_product_random(rng):
    R = parse_ring("F5[x]")
    for _ in range(10):
        a = correspondence_forward(R.ideal(R.random_element(rng)))
        b = correspondence_forward(R.ideal(R.random_element(rng)))
        c = correspondence_forward(R.ideal(R.random_element(rng)))
        assert check_kideal_product(a, b, rng)
        assert kideal_product(a, b + c) == kideal_product(a, b) + kideal_product(a, c)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 9, 12, 27, 30, 49, 97, 360])
def test_primary_preservation(n):
    rep = check_primary_preservation(n)
    assert rep, rep.witnesses
    f = sympy.factorint(n)
    assert rep.details["ring"]["prime"] == sympy.isprime(n)
    assert rep.details["ring"]["primary"] == (len(f) == 1)
    assert rep.details["ring"]["radical"] == all(e == 1 for e in f.values())


def test_handle_side_predicates_directly():
    W = integer_witnesses(12)
    assert not handle_is_prime(correspondence_forward(ZZ.ideal(12)), W)
    assert handle_is_primary(correspondence_forward(ZZ.ideal(8)), integer_witnesses(8), 4)
    assert not handle_is_primary(correspondence_forward(ZZ.ideal(1)), W, 4)
