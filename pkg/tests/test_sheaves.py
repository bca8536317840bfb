import random

import pytest
import sympy

from oracles import irreducible_count_fp
from tropalg.errors import DescentError, DomainError, StructuralError, UnsupportedError
from tropalg.modules import Submodule
from tropalg.rings import ZZ, parse_ring
from tropalg.ideals import enumerate_ideals, enumerate_k_ideals
from tropalg.semiring import BOOLEAN, FgId, fixture_semirings
from tropalg.semiring import fixtures_dir, load_semiring
from tropalg.sheaves import (FiniteSite, GluingData, check_basic_open_restrictions,
                             check_sheaf_axioms, check_sheafification, check_tilde,
                             check_transitions, check_trop_scheme, closed_subscheme_comparison,
                             comparison_phi,
                             constant_presheaf, fixture_sites, load_gluing, load_site,
                             module_sheaf_tilde, phi_presheaf, sheafify, stalk,
                             stalk_commutation_check, structure_sections_on_basic_open,
                             symbolic_stalk_check, trop_scheme)

GLUING = fixtures_dir() / "gluing"
SITES = {site.name: (site, p) for site, p in fixture_sites()}


def moduli(name):
    site, p = SITES[name]
    return {U: p.sections[U].modulus for U in site.opens}


def test_site_fixtures_present():
    assert {"one_point", "sierpinski", "chain3", "discrete2"} <= set(SITES)


@pytest.mark.parametrize("name", sorted(SITES))
def test_site_topology_and_presheaf(name):
    site, p = SITES[name]
    assert site.check()
    assert p.check_functorial()
    assert phi_presheaf(p).check_functorial()


def test_bad_site_rejected():
    # {a} and {b} open but their union missing
    site = FiniteSite(["a", "b"], [set(), {"a"}, {"b"}])
    assert not site.check()


def test_minimal_opens_and_specialization():
    site, _ = SITES["sierpinski"]
    assert site.minimal_open("a") == frozenset({"a"})
    assert site.minimal_open("b") == frozenset({"a", "b"})
    assert site.specializes("a", "b") != site.specializes("b", "a")


@pytest.mark.parametrize("name", sorted(SITES))
def test_stalk_commutation(name):
    site, p = SITES[name]
    for x in site.points:
        rep = stalk_commutation_check(p, x)
        assert rep, rep.witnesses
        # the stalk at x is the ring over the minimal open, Z/n, whose ideals
        # are counted by the divisors of n
        n = p.sections[site.minimal_open(x)].modulus
        assert rep.details["ring_stalk"] == n
        assert rep.details["phi_stalk"] == rep.details["fgid_of_stalk"] == sympy.divisor_count(n)


def test_sierpinski_stalk_sizes():
    site, p = SITES["sierpinski"]
    phi = phi_presheaf(p)
    assert len(stalk(phi, "a").classes) == 2
    assert len(stalk(phi, "b").classes) == 3


@pytest.mark.parametrize("name", sorted(SITES))
def test_sheafification(name):
    site, p = SITES[name]
    rep = check_sheafification(phi_presheaf(p))
    assert rep, rep.witnesses
    # these residue presheaves are already sheaves, so the counts are divisor counts
    for U, n in moduli(name).items():
        key = ",".join(sorted(U)) or "{}"
        assert rep.details[key] == sympy.divisor_count(n)


def test_constant_presheaf_is_not_a_sheaf():
    site, _ = SITES["discrete2"]
    p = constant_presheaf(site, BOOLEAN)
    # the empty open carries two sections, so identity fails on the empty cover
    assert not check_sheaf_axioms(p)
    sh = sheafify(p)
    assert check_sheaf_axioms(sh)
    # a sheaf on a discrete space is the product of its stalks
    for U in site.opens:
        assert len(sh.sections[U].families) == 2 ** len(U)


def test_restriction_outside_rejected():
    site, p = SITES["sierpinski"]
    with pytest.raises(DomainError):
        p.res(frozenset({"a"}), frozenset({"a", "b"}))


def test_load_site_errors(tmp_path):
    with pytest.raises(StructuralError):
        load_site("no_such_site")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(StructuralError):
        load_site(str(bad))


def test_phi_presheaf_needs_rings():
    site, _ = SITES["one_point"]
    with pytest.raises(UnsupportedError):
        phi_presheaf(constant_presheaf(site, BOOLEAN))


def test_basic_open_sections():
    T = FgId(ZZ)
    assert len(structure_sections_on_basic_open(T, ZZ.ideal(0))) == 1
    assert structure_sections_on_basic_open(T, ZZ.ideal(1)) is T
    T6 = structure_sections_on_basic_open(T, ZZ.ideal(6))
    assert T6.make(ZZ.ideal(4), ZZ.ideal(6)) == T6.make(ZZ.ideal(2), ZZ.ideal(3))
    elems = [ZZ.ideal(a) for a in range(0, 30)]
    assert check_basic_open_restrictions(T, ZZ.ideal(2), ZZ.ideal(3), elems)


@pytest.mark.parametrize("p", [0, 2, 3, 5])
def test_symbolic_stalks(p):
    assert symbolic_stalk_check(p, random.Random(p), samples=30)


def test_module_sheaf(rng):
    assert check_tilde(module_sheaf_tilde(2), rng, samples=15)
    K = Submodule(ZZ, 2, [[2, 0], [0, 3]])
    assert check_tilde(module_sheaf_tilde(2, K), rng, samples=10)
    with pytest.raises(DomainError):
        module_sheaf_tilde(2, K).section(1, Submodule(ZZ, 2, [[1, 0]]))


def test_comparison_kernel_over_z():
    rep = comparison_phi(ZZ, ["generic", "X", 6])
    assert rep
    assert rep.details["kernel_nontrivial"]
    secs = {w["section"] for w in rep.details["kernel_witnesses"] if w["open"] == "generic"}
    assert {"<1>/<2>", "<1>/<3>", "<2>/<3>"} <= secs


def test_comparison_over_a_field_has_no_kernel():
    rep = comparison_phi(parse_ring("Q"), ["generic"])
    assert rep and not rep.details["kernel_nontrivial"]
    with pytest.raises(UnsupportedError):
        comparison_phi(parse_ring("Q[x,y]"), ["X"])


def test_comparison_over_polynomials():
    R = parse_ring("F2[x]")
    rep = comparison_phi(R, ["X", R.x()], bound=3)
    assert rep, rep.witnesses


def test_trop_p1_f2():
    g = load_gluing(str(GLUING / "p1_f2.json"))
    assert check_transitions(g, random.Random(1))
    data = trop_scheme(g, 3)
    rep = check_trop_scheme(data)
    assert rep, rep.witnesses
    irr = sum(irreducible_count_fp(2, d) for d in (1, 2, 3))
    chart = irr + 1                     # plus the generic point
    overlap = chart - 1                 # the point <x> (or <y>) is removed
    assert rep.details["chart0_points"] == rep.details["chart1_points"] == chart == 6
    assert rep.details["overlap01"] == rep.details["overlap10"] == overlap
    assert rep.details["glued_points"] == 2 * chart - overlap == 7


def test_trop_p1_q_regression():
    # over Q the truncation is a catalogue, so these counts are frozen from a run
    data = trop_scheme(load_gluing(str(GLUING / "p1_q.json")), 3)
    rep = check_trop_scheme(data)
    assert rep
    assert (rep.details["chart0_points"], rep.details["overlap01"], rep.details["glued_points"]) \
        == (21, 20, 22)


def test_trop_affine_single_chart():
    data = trop_scheme(load_gluing(str(GLUING / "affine_f2.json")), 2)
    assert check_trop_scheme(data)
    assert len(data.glued_points()) == 1 + irreducible_count_fp(2, 1) + irreducible_count_fp(2, 2)


def test_bad_inverse_raises():
    g = load_gluing(str(GLUING / "bad_inverse_f2.json"))
    with pytest.raises(DescentError) as exc:
        trop_scheme(g, 3)
    assert exc.value.witness["triple"][0] == exc.value.witness["triple"][2]


def test_bad_cocycle_raises():
    g = load_gluing(str(GLUING / "bad_cocycle_f2.json"))
    with pytest.raises(DescentError) as exc:
        trop_scheme(g, 3)
    assert sorted(exc.value.witness["triple"]) == [0, 1, 2]


def test_gluing_parse_errors():
    with pytest.raises(StructuralError):
        GluingData.from_dict({"name": "x", "charts": [{"ring": "F2[x]"}], "overlaps": [],
                              "transitions": [{"i": 0, "j": 1, "substitution": {"x": "x"}}]})
    with pytest.raises(StructuralError):
        load_gluing(str(GLUING / "p1_f2.json"), covering="other")


def test_closed_subscheme_chain3():
    s = load_semiring("chain3")
    I = {s.get("0"), s.get("a")}
    rep = closed_subscheme_comparison(s, I)
    assert rep and rep.details["isomorphic"]
    st = rep.details["stalks"]
    # at {0,a} nothing is inverted: both stalks are chain3/I, two elements
    assert st["{0,a}"] == {"in_V(I)": True, "quotient_stalk": 2, "pushforward_stalk": 2,
                           "bijective": True}
    # at {0} the element a becomes a unit, so I_P is everything
    assert st["{0}"]["quotient_stalk"] == 1 and not st["{0}"]["in_V(I)"]


def test_closed_subscheme_corpus():
    for s in fixture_semirings():
        for I in enumerate_k_ideals(s):
            rep = closed_subscheme_comparison(s, I)
            assert rep, rep.witnesses
            assert rep.details["primes"] >= 1 or len(s) == 1


def test_closed_subscheme_rejects_bad_input():
    s = load_semiring("nat_trunc3")
    bad = next(I for I in enumerate_ideals(s) if I not in enumerate_k_ideals(s))
    with pytest.raises(DomainError):
        closed_subscheme_comparison(s, bad)
    with pytest.raises(UnsupportedError):
        closed_subscheme_comparison(FgId(ZZ), [])
