from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from oracles import irreducible_count_fp
from tropalg.errors import DomainError, UnsupportedError
from tropalg.modules import FgMod, Submodule, hnf
from tropalg.rings import (QQ, ZZ, LocalizedAtPrime, LocalizedAway, PrimeField, ResidueRing,
                           factor, induced_ideal_map, is_primary_ring_ideal,
                           is_prime_ring_ideal, morphism, parse_element, parse_ring,
                           rational_catalogue, ring_radical, spec_truncated)

X, Y = sympy.symbols("x y")


def to_sympy(R, f):
    return sum(sympy.Rational(c.numerator, c.denominator) * X ** e[0] * Y ** e[1] for e, c in f)


@pytest.mark.parametrize("text,name", [
    ("Z", "Z"), ("Q", "Q"), ("F5", "F5"), ("Z/12", "Z/(12)"), ("F2[x]", "F2[x]"),
    ("Q[x,y]", "Q[x,y]"), ("Z[1/6]", "Z_(6)"), ("Z_<3>", "Z_<3>"),
])
def test_parse_ring(text, name):
    assert parse_ring(text).name == name


@pytest.mark.parametrize("text", ["W", "Z/0", "F4", "Z_<4>", "Q[x]/(1", ""])
def test_parse_ring_errors(text):
    with pytest.raises(DomainError):
        parse_ring(text)


def test_parse_element():
    R = parse_ring("Q[x]")
    assert parse_element(R, "x^2 - 1") == R.make([-1, 0, 1])
    L = parse_ring("F2[y,1/y]")
    one = parse_element(L, "y * (1/y)")
    assert one == L.one
    with pytest.raises(DomainError):
        parse_element(R, "1/x")


def test_integer_ideals():
    assert ZZ.ideal(-6) == ZZ.ideal(6)
    assert ZZ.ideal(4, 6) == ZZ.ideal(2)
    assert ZZ.ideal(4) * ZZ.ideal(6) == ZZ.ideal(24)
    assert 12 in ZZ.ideal(6) and 13 not in ZZ.ideal(6)
    assert ZZ.ideal(12) <= ZZ.ideal(6)


def test_ideal_rings_mismatch():
    with pytest.raises(DomainError):
        ZZ.ideal(2) + QQ.ideal(QQ.one)


@given(st.lists(st.integers(-500, 500), min_size=1, max_size=4))
def test_integer_canonical_form_is_gcd(gens):
    g = 0
    for x in gens:
        g = sympy.gcd(g, x)
    assert ZZ.ideal(*gens).generator == abs(int(g))


def test_univariate_gcd_against_sympy(rng):
    R = parse_ring("Q[x]")
    for _ in range(50):
        a, b = R.random_element(rng), R.random_element(rng)
        if not a and not b:
            continue
        mine = R.ideal(a, b).generator
        sa = sum(sympy.Rational(c.numerator, c.denominator) * X ** i for i, c in enumerate(a))
        sb = sum(sympy.Rational(c.numerator, c.denominator) * X ** i for i, c in enumerate(b))
        ref = sympy.Poly(sympy.gcd(sa, sb), X, domain="QQ").monic()
        got = sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator) * X ** i
                             for i, c in enumerate(mine)), X, domain="QQ")
        assert got == ref


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_irreducible_counts_f2(d):
    R = parse_ring("F2[x]")
    assert sum(1 for m in R.monic_polynomials(d) if R.is_irreducible(m)) == irreducible_count_fp(2, d)


def test_irreducible_counts_f5():
    R = parse_ring("F5[x]")
    for d in (1, 2, 3):
        assert sum(1 for m in R.monic_polynomials(d) if R.is_irreducible(m)) == irreducible_count_fp(5, d)


@pytest.mark.parametrize("n", [2, 12, 30, 97, 360, 1001, 65536])
def test_factor_integers(n):
    assert factor(ZZ, n) == sympy.factorint(n)


def test_factor_f2_against_sympy():
    R = parse_ring("F2[x]")
    for coeffs in [(0, 1, 1), (1, 0, 0, 1), (1, 1, 1, 1, 1), (0, 0, 1, 1, 0, 1)]:
        f = R.make(coeffs)
        got = {tuple(int(c) for c in p): e for p, e in factor(R, f).items()}
        poly = sympy.Poly(list(reversed(coeffs)), X, modulus=2)
        ref = {tuple(int(c) % 2 for c in reversed(p.all_coeffs())): e
               for p, e in poly.factor_list()[1]}
        assert got == ref


def test_rational_catalogue_closed_under_reciprocal():
    R = parse_ring("Q[x]")
    cat = set(rational_catalogue(R, 3))
    for f in cat:
        if f[0] != 0:
            rev = R.normal(tuple(reversed(f)))
            assert rev in cat


def test_radical_and_primality():
    assert ring_radical(ZZ.ideal(72)) == ZZ.ideal(6)
    assert is_prime_ring_ideal(ZZ.ideal(7)) and not is_prime_ring_ideal(ZZ.ideal(9))
    assert is_primary_ring_ideal(ZZ.ideal(9)) and not is_primary_ring_ideal(ZZ.ideal(12))
    assert is_prime_ring_ideal(ZZ.ideal(0))
    with pytest.raises(UnsupportedError):
        ring_radical(parse_ring("Q[x,y]").ideal(parse_ring("Q[x,y]").one))


def test_residue_ring():
    R = ResidueRing(ZZ, 12)
    assert R.elements() == list(range(12))
    assert len(R.all_ideals()) == 6
    assert R.ideal(8) == R.ideal(4)
    assert R.is_unit(5) and not R.is_unit(4)


def test_localizations():
    Z6 = LocalizedAway(ZZ, 6)
    assert Z6.ideal(Z6.embed(12)) == Z6.unit_ideal()
    assert Z6.ideal(Z6.embed(10)) == Z6.ideal(Z6.embed(5))
    Z3 = LocalizedAtPrime(ZZ, 3)
    assert Z3.ideal(Z3.embed(12)) == Z3.ideal(Z3.embed(3))
    assert Z3.make(2, 4) == (1, 2)
    with pytest.raises(DomainError):
        Z3.make(1, 3)


@given(st.integers(-50, 50), st.integers(1, 50), st.integers(-50, 50), st.integers(1, 50))
def test_localization_arithmetic_matches_fractions(a, b, c, d):
    Q0 = LocalizedAtPrime(ZZ, 0)
    x, y = Q0.make(a, b), Q0.make(c, d)
    s = Q0.add(x, y)
    p = Q0.mul(x, y)
    assert Fraction(*s) == Fraction(a, b) + Fraction(c, d)
    assert Fraction(*p) == Fraction(a, b) * Fraction(c, d)


def test_spec_truncated():
    assert [I.generator for I in spec_truncated(ZZ, 20)] == [0] + list(sympy.primerange(2, 21))
    F2x = parse_ring("F2[x]")
    assert len(spec_truncated(F2x, 3)) == 1 + 2 + 1 + 2


def test_groebner_against_sympy(rng):
    R = parse_ring("Q[x,y]")
    for _ in range(60):
        gens = [R.random_element(rng, degree=4) for _ in range(rng.randint(1, 3))]
        I = R.ideal(*gens)
        mine = {sympy.expand(to_sympy(R, g)) for g in I.canonical}
        nz = [to_sympy(R, g) for g in gens if g]
        if not nz:
            assert I.is_zero
            continue
        ref = sympy.groebner(nz, X, Y, order="grevlex", domain="QQ")
        assert mine == {sympy.expand(g) for g in ref.exprs}
        assert R.is_reduced_groebner(I.canonical)


def test_groebner_lex_order(rng):
    R = parse_ring("Q[x,y;lex]")
    for _ in range(20):
        gens = [R.random_element(rng, degree=3) for _ in range(2)]
        nz = [to_sympy(R, g) for g in gens if g]
        if not nz:
            continue
        ref = sympy.groebner(nz, X, Y, order="lex", domain="QQ")
        assert {sympy.expand(to_sympy(R, g)) for g in R.ideal(*gens).canonical} == \
            {sympy.expand(g) for g in ref.exprs}


def test_multivariate_membership():
    R = parse_ring("Q[x,y]")
    x, y = R.variable("x"), R.variable("y")
    I = R.ideal(x, y)
    assert R.mul(x, y) in I
    assert R.one not in I


def _lattice_equal(rows_a, rows_b):
    # sympy's column Hermite form is canonical for the lattice the columns span
    from sympy.matrices.normalforms import hermite_normal_form
    return hermite_normal_form(sympy.Matrix(rows_a).T) == hermite_normal_form(sympy.Matrix(rows_b).T)


def test_hnf_against_lattice_oracle(rng):
    for _ in range(60):
        rows = [[rng.randint(-20, 20) for _ in range(3)] for _ in range(rng.randint(1, 4))]
        H = hnf(ZZ, rows, 3)
        if all(all(x == 0 for x in r) for r in rows):
            assert H == ()
            continue
        assert _lattice_equal(rows, [list(r) for r in H])
        # echelon shape with positive, reducing pivots
        cols = [next(i for i, x in enumerate(r) if x) for r in H]
        assert cols == sorted(set(cols))
        for k, (c, r) in enumerate(zip(cols, H)):
            assert r[c] > 0
            for above in H[:k]:
                assert 0 <= above[c] < r[c]


def test_submodule_operations():
    M = FgMod(ZZ, 2)
    a = M.span([2, 0], [0, 4])
    b = M.span([2, 4])
    assert b <= a
    assert (a + b) == a
    assert [4, 8] in b and [1, 0] not in a
    assert a.scale(2) == M.span([4, 0], [0, 8])
    assert M.zero.is_zero()
    with pytest.raises(DomainError):
        Submodule(parse_ring("Q[x,y]"), 2, [])


def test_hnf_over_polynomials():
    R = parse_ring("F2[x]")
    x = R.x()
    H = hnf(R, [[x, R.one], [R.mul(x, x), R.zero]], 2)
    S = Submodule(R, 2, [[x, R.one], [R.mul(x, x), R.zero]])
    assert S.rows == H
    assert S.contains([R.zero, x])


def test_morphism_catalogue():
    Z6 = ResidueRing(ZZ, 6)
    f = morphism("reduction", ZZ, Z6)
    assert induced_ideal_map(f, ZZ.ideal(4)) == Z6.ideal(2)
    R = parse_ring("Q[x]")
    sub = morphism("substitution", R, R, images={"x": R.add(R.x(), R.one)})
    assert induced_ideal_map(sub, R.ideal(R.x())) == R.ideal(R.add(R.x(), R.one))
    with pytest.raises(DomainError):
        morphism("frobenius", R, R)
    with pytest.raises(DomainError):
        morphism("reduction", ResidueRing(ZZ, 4), ResidueRing(ZZ, 3))


def test_prime_field():
    F = PrimeField(7)
    assert F.mul(3, F.inverse(3)) == 1
    with pytest.raises(DomainError):
        PrimeField(8)
