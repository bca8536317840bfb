import pytest

import oracles
from tropalg.errors import DomainError, ResourceError
from tropalg.ideals import (Congruence, PosetSpace, congruence_generated, enumerate_congruences,
                            enumerate_ideals, enumerate_k_ideals, ideal_closure, is_ideal,
                            is_k_ideal, is_lo_semigroup, is_prime_ideal, kideal_semiring,
                            lo_semigroup_report, map_c, map_j, map_r, quotient_kideal_bijection_check,
                            quotient_semiring, subtractive_closure, verify_retraction_congruences,
                            verify_retraction_ideals)
from tropalg.semiring import chain, check_semiring_axioms, fixture_semirings

FIXTURES = {s.name: s for s in fixture_semirings()}

# (size, ideals, k-ideals, congruences), computed once with tests/oracles.py
FROZEN = {
    "boolean": (2, 2, 2, 2),
    "boolean_x_chain3": (6, 6, 6, 8),
    "chain3": (3, 3, 3, 4),
    "chain4": (4, 4, 4, 8),
    "chain5": (5, 5, 5, 16),
    "diamond": (4, 4, 4, 4),
    "fgid_f2x_x2x": (4, 4, 4, 4),
    "fgid_z12": (6, 6, 6, 6),
    "fgid_z4": (3, 3, 3, 3),
    "fgid_z6": (4, 4, 4, 4),
    "fgid_z8": (4, 4, 4, 4),
    "maxplus_capped": (4, 4, 2, 4),
    "nat_trunc3": (4, 4, 2, 4),
    "z2_ring": (2, 2, 2, 2),
    "z3_ring": (3, 2, 2, 2),
    "z4_ring": (4, 3, 3, 3),
    "zero": (1, 1, 1, 1),
}


def test_frozen_table_covers_corpus():
    assert set(FROZEN) == set(FIXTURES)


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_counts_frozen(name):
    s = FIXTURES[name]
    size, ni, nk, nc = FROZEN[name]
    assert len(s) == size
    assert len(enumerate_ideals(s)) == ni
    assert len(enumerate_k_ideals(s)) == nk
    assert len(enumerate_congruences(s)) == nc


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_enumeration_matches_brute_force(name):
    s = FIXTURES[name]
    assert set(enumerate_ideals(s)) == set(oracles.ideals(s))
    assert set(enumerate_k_ideals(s)) == set(oracles.k_ideals(s))
    mine = {frozenset(frozenset(b) for b in c.partition()) for c in enumerate_congruences(s)}
    assert mine == set(oracles.congruences(s))


def test_chain_congruences_count():
    # every cut of an n-chain between consecutive elements can be merged or not
    for n in range(2, 7):
        assert len(enumerate_congruences(chain(n))) == 2 ** (n - 1)


def test_enumeration_bound():
    with pytest.raises(ResourceError):
        enumerate_ideals(chain(9))
    assert len(enumerate_ideals(chain(9), bound=9)) == 9


def test_predicates_on_chain3():
    s = FIXTURES["chain3"]
    assert is_ideal(s, {s.zero})
    assert is_k_ideal(s, set(s.elements()))
    assert ideal_closure(s, []) == frozenset([s.zero])
    assert ideal_closure(s, [s.one]) == frozenset(s.elements())


def test_non_subtractive_ideal():
    s = FIXTURES["nat_trunc3"]
    bad = [I for I in enumerate_ideals(s) if not is_k_ideal(s, I)]
    assert bad
    for I in bad:
        J = subtractive_closure(s, I)
        assert I < J and is_k_ideal(s, J)
        assert map_j(s, I) == J


def test_prime_ideals_of_z4_ring():
    s = FIXTURES["z4_ring"]
    primes = [I for I in enumerate_ideals(s) if is_prime_ideal(s, I)]
    assert [sorted(s.subset_labels(I)) for I in primes] == [["0", "2"]]


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_retraction_congruences(name):
    rep = verify_retraction_congruences(FIXTURES[name])
    assert rep, rep.witnesses
    assert rep.details["c_injective"]


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_retraction_ideals(name):
    rep = verify_retraction_ideals(FIXTURES[name])
    assert rep, rep.witnesses


def test_r_after_c_and_c_after_r():
    s = FIXTURES["chain4"]
    for I in enumerate_k_ideals(s):
        assert map_r(s, map_c(s, I)) == I
    for Y in enumerate_congruences(s):
        assert map_c(s, map_r(s, Y)) <= Y


def test_congruence_generated_is_smallest():
    s = FIXTURES["chain4"]
    a, b = 1, 2
    gen = congruence_generated(s, [(a, b)])
    assert gen.related(a, b)
    for Y in enumerate_congruences(s):
        if Y.related(a, b):
            assert gen <= Y


def test_congruence_rejects_unstable():
    s = FIXTURES["chain3"]
    # 0 ~ 2 but 0 + 1 = 1 and 2 + 1 = 2 land in different blocks
    Y = Congruence.from_partition(s, [[0, 2], [1]])
    assert not Y.is_stable()
    with pytest.raises(DomainError):
        quotient_by_congruence_checked(s, Y)


def quotient_by_congruence_checked(s, Y):
    from tropalg.ideals import _check_well_defined
    _check_well_defined(s, Y)


@pytest.mark.parametrize("name", ["chain4", "fgid_z12", "boolean_x_chain3", "nat_trunc3"])
def test_quotient_bijection(name):
    s = FIXTURES[name]
    for I in enumerate_k_ideals(s):
        rep = quotient_kideal_bijection_check(s, I)
        assert rep, rep.witnesses
        q = quotient_semiring(s, I)
        assert check_semiring_axioms(q)


def test_quotient_of_chain_by_bottom_two():
    s = chain(4)
    I = enumerate_k_ideals(s)[1]
    q = quotient_semiring(s, I)
    assert len(q) == 3


def test_kideal_semiring_of_realizable_fixture():
    # Id_k of fgId(Z/12) is again a six-element semiring satisfying the axioms
    s = FIXTURES["fgid_z12"]
    K = kideal_semiring(s)
    assert len(K) == 6
    assert check_semiring_axioms(K)


@pytest.mark.parametrize("name,expected", [
    ("boolean", True), ("chain3", True), ("diamond", True), ("fgid_z12", True),
    ("z3_ring", False), ("maxplus_capped", False),
])
def test_lo_semigroup(name, expected):
    assert is_lo_semigroup(FIXTURES[name]) is expected


def test_lo_semigroup_missing_join():
    # a "V": two maximal elements over a bottom has no join of the top pair
    pts = ["0", "a", "b"]
    leq = lambda x, y: x == y or x == "0"
    rep = lo_semigroup_report(PosetSpace(pts, leq))
    assert not rep


def test_poset_space_closed_sets():
    P = PosetSpace([0, 1, 2], lambda a, b: a <= b, "lower")
    closed = set(P.closed_sets())
    # up-sets of a 3-chain, plus the empty set
    assert closed == {frozenset(), frozenset([2]), frozenset([1, 2]), frozenset([0, 1, 2])}
    U = PosetSpace([0, 1, 2], lambda a, b: a <= b, "upper")
    assert frozenset([0]) in set(U.closed_sets())
