"""Presheaves on finite sites, stalks, sheafification, and tropicalization of schemes.

Finite sites carry presheaves of finite rings (residue rings of Z) or of
finite semirings.  Infinite objects (Z, K[x], their localizations) only
appear through basic-open sections with canonical fraction forms and
through truncated spectra.
"""

import json
from fractions import Fraction
from itertools import combinations, product

from .errors import DescentError, DomainError, StructuralError, UnsupportedError
from .ideals import enumerate_k_ideals, is_k_ideal, is_prime_ideal, quotient_semiring
from .modules import Submodule, hnf
from .report import Report
from .rings.algorithms import factor
from .rings.base import ZZ, Field, Integers
from .rings.localization import LocalizedAtPrime, LocalizedAway
from .rings.morphisms import substitution
from .rings.parsing import parse_element, parse_ring
from .rings.univariate import ResidueRing, UniPoly
from .semiring import FgId, FiniteSemiring, fixtures_dir, localize_semiring
from .spectrum import dk, localize_at_prime, speck_truncated, zeta_natgcd


# finite sites ----------------------------------------------------------------

def _key(U):
    return ",".join(sorted(U))


class FiniteSite:
    """A finite topological space given by its list of open sets."""

    def __init__(self, points, opens, name="site"):
        self.points = tuple(points)
        self.opens = sorted({frozenset(U) for U in opens}, key=lambda U: (len(U), sorted(U)))
        self.name = name

    def check(self):
        rep = Report("finite topology", self.name)
        whole = frozenset(self.points)
        rep.check(frozenset() in self.opens, "empty set is not open")
        rep.check(whole in self.opens, "whole space is not open")
        ops = set(self.opens)
        for U in ops:
            rep.check(U <= whole, "open set has unknown points", U=sorted(U))
        for U, V in combinations(self.opens, 2):
            rep.check(U | V in ops, "not closed under unions", U=sorted(U), V=sorted(V))
            rep.check(U & V in ops, "not closed under intersections", U=sorted(U), V=sorted(V))
        return rep

    def minimal_open(self, x):
        out = frozenset(self.points)
        for U in self.opens:
            if x in U:
                out &= U
        return out

    def specializes(self, x, y):
        """y lies in every open around x (x is in the closure of y)."""
        return y in self.minimal_open(x)

    def covers(self, U):
        """Every family of nonempty open subsets of U whose union is U (empty family for U = {})."""
        subs = [V for V in self.opens if V <= U and V]
        out = []
        for k in range(0, len(subs) + 1):
            for fam in combinations(subs, k):
                if frozenset().union(*fam) == U:
                    out.append(fam)
        return out

    def to_dict(self):
        return {"name": self.name, "points": list(self.points),
                "opens": [sorted(U) for U in self.opens]}


# presheaves ----------------------------------------------------------------------

class PresheafData:
    """Sections per open, and restriction maps res(U, V) for V inside U.

    Sections are finite rings or finite semirings; both expose ``elements``,
    ``add``, ``mul``, ``zero``, ``one`` and ``format``.
    """

    def __init__(self, site, sections, restriction, name="presheaf"):
        self.site = site
        self.sections = dict(sections)
        self._res = restriction
        self.name = name
        for U in site.opens:
            if U not in self.sections:
                raise StructuralError(f"no sections given over {sorted(U)}")

    def res(self, U, V):
        if not V <= U:
            raise DomainError(f"{sorted(V)} is not inside {sorted(U)}")
        if U == V:
            return lambda s: s
        return self._res(U, V)

    def check_functorial(self):
        rep = Report("presheaf functoriality", self.name)
        O = self.site.opens
        for U in O:
            for s in self.sections[U].elements():
                rep.check(self.res(U, U)(s) == s, "identity restriction moves a section",
                          U=sorted(U))
        for U, V, W in product(O, O, O):
            if W <= V <= U:
                f, g, h = self.res(U, V), self.res(V, W), self.res(U, W)
                for s in self.sections[U].elements():
                    if g(f(s)) != h(s):
                        rep.fail("restrictions do not compose", U=sorted(U), V=sorted(V),
                                 W=sorted(W))
                        break
        return rep

    def check_morphisms(self):
        """Every restriction is a (semi)ring morphism."""
        rep = Report("restrictions are morphisms", self.name)
        for U in self.site.opens:
            for V in self.site.opens:
                if V < U:
                    rep.merge(_morphism_report(self.sections[U], self.sections[V], self.res(U, V),
                                               f"{sorted(U)}->{sorted(V)}"))
        return rep


def _morphism_report(S, T, f, name):
    rep = Report("morphism", name)
    rep.check(f(S.zero) == T.zero, "0 not preserved", map=name)
    rep.check(f(S.one) == T.one, "1 not preserved", map=name)
    E = list(S.elements())
    for a in E:
        for b in E:
            if f(S.add(a, b)) != T.add(f(a), f(b)):
                rep.fail("sum not preserved", map=name, a=S.format(a), b=S.format(b))
                return rep
            if f(S.mul(a, b)) != T.mul(f(a), f(b)):
                rep.fail("product not preserved", map=name, a=S.format(a), b=S.format(b))
                return rep
    return rep


def residue_presheaf(site, moduli, name="rings"):
    """U -> Z/n_U with reductions; n_V must divide n_U whenever V is inside U."""
    rings = {U: ResidueRing(ZZ, moduli[U]) for U in site.opens}
    for U in site.opens:
        for V in site.opens:
            if V <= U and moduli[U] % moduli[V]:
                raise StructuralError(f"no reduction Z/{moduli[U]} -> Z/{moduli[V]}")

    def res(U, V):
        return rings[V].reduce

    return PresheafData(site, rings, res, name)


def constant_presheaf(site, s, name="constant"):
    """The same semiring on every open (the empty one included), identity restrictions."""
    return PresheafData(site, {U: s for U in site.opens}, lambda U, V: (lambda x: x), name)


def phi_presheaf(p):
    """Open-wise fgId, with fgId of the restriction maps."""
    fg = {}
    for U, R in p.sections.items():
        if not isinstance(R, ResidueRing):
            raise UnsupportedError(f"fgId of sections of type {type(R).__name__} is not supported")
        fg[U] = FgId(R).to_finite()

    def res(U, V):
        f = p.res(U, V)
        S, T = fg[U], fg[V]
        RV = p.sections[V]
        table = {}
        for i in S.elements():
            I = S.payloads[i]
            img = RV.ideal(*[f(g) for g in I.canonical])
            table[i] = T.payloads.index(img)
        return table.__getitem__

    return PresheafData(p.site, fg, res, f"fgId({p.name})")


# stalks ----------------------------------------------------------------------

class Germs:
    """Colimit of the sections over the opens containing x, by explicit classes.

    Elements are pairs (U, s); two pairs are identified when their
    restrictions agree on some smaller open around x.
    """

    def __init__(self, p, x):
        self.p = p
        self.x = x
        site = p.site
        self.opens = [U for U in site.opens if x in U]
        pairs = [(U, s) for U in self.opens for s in p.sections[U].elements()]
        parent = {q: q for q in pairs}

        def find(q):
            while parent[q] != q:
                q = parent[q]
            return q

        for (U, s), (V, t) in combinations(pairs, 2):
            W = U & V
            if p.res(U, W)(s) == p.res(V, W)(t):
                parent[find((U, s))] = find((V, t))
        classes = {}
        for q in pairs:
            classes.setdefault(find(q), []).append(q)
        self.classes = [frozenset(c) for c in classes.values()]
        self.class_of = {q: k for k, c in enumerate(self.classes) for q in c}
        self.base = site.minimal_open(x)
        self.name = f"stalk of {p.name} at {x}"

    def germ(self, U, s):
        return self.class_of[(U, s)]

    def rep(self, k):
        for U, s in self.classes[k]:
            if U == self.base:
                return s
        U, s = next(iter(self.classes[k]))
        return self.p.res(U, self.base)(s)

    def elements(self):
        return range(len(self.classes))

    def _op(self, op, a, b):
        S = self.p.sections[self.base]
        return self.germ(self.base, op(S)(self.rep(a), self.rep(b)))

    def add(self, a, b):
        return self._op(lambda S: S.add, a, b)

    def mul(self, a, b):
        return self._op(lambda S: S.mul, a, b)

    @property
    def zero(self):
        return self.germ(self.base, self.p.sections[self.base].zero)

    @property
    def one(self):
        return self.germ(self.base, self.p.sections[self.base].one)

    def format(self, a):
        return self.p.sections[self.base].format(self.rep(a))


def stalk(p, x):
    return Germs(p, x)


def _ideal_closure(R, gens):
    """Ideal of a finite ring (given by element list) generated by ``gens``, as a frozenset."""
    cur = {R.zero} | set(gens)
    E = list(R.elements())
    while True:
        nxt = set(cur)
        for a in cur:
            for r in E:
                nxt.add(R.mul(r, a))
            for b in cur:
                nxt.add(R.add(a, b))
        if nxt == cur:
            return frozenset(cur)
        cur = nxt


def stalk_commutation_check(p, x):
    """The map Phi(F)_x -> Phi(F_x), [(U, <s_i>)] -> <germs of s_i>, is a bijection.

    Phi(F)_x is the colimit of the tabulated fgId's; Phi(F_x) is the set of
    ideals of the ring of germs, generated explicitly as subsets.
    """
    rep = Report("stalks commute with fgId", f"{p.name} at {x}")
    ring_germs = Germs(p, x)
    phi = phi_presheaf(p)
    semi_germs = Germs(phi, x)
    image = {}
    for k, cls in enumerate(semi_germs.classes):
        vals = set()
        for U, i in cls:
            I = phi.sections[U].payloads[i]
            gens = [ring_germs.germ(U, g) for g in I.canonical]
            vals.add(_ideal_closure(ring_germs, gens))
        rep.check(len(vals) == 1, "map not well defined on a class", germ=semi_germs.format(k))
        image[k] = next(iter(vals))
    all_ideals = {_ideal_closure(ring_germs, [a]) for a in ring_germs.elements()}
    # every ideal of a finite ring is a finite sum of principal ones
    changed = True
    while changed:
        changed = False
        for I, J in combinations(list(all_ideals), 2):
            K = _ideal_closure(ring_germs, I | J)
            if K not in all_ideals:
                all_ideals.add(K)
                changed = True
    values = list(image.values())
    rep.check(len(set(values)) == len(values), "map not injective")
    rep.check(set(values) == all_ideals, "map not surjective")
    rep.details.update({"point": x, "phi_stalk": len(semi_germs.classes),
                        "fgid_of_stalk": len(all_ideals), "ring_stalk": len(ring_germs.classes)})
    return rep


# sheafification ------------------------------------------------------------

class SheafSections:
    """Compatible germ families over U, with pointwise operations."""

    def __init__(self, p, U, families):
        self.p = p
        self.U = U
        self.pts = sorted(U)
        self.families = families
        self.index = {f: i for i, f in enumerate(families)}
        self.name = f"{p.name}#({_key(U)})"

    def elements(self):
        return self.families

    def _pointwise(self, op, a, b):
        out = []
        for x, ga, gb in zip(self.pts, a, b):
            S = self.p.sections[self.p.site.minimal_open(x)]
            out.append(op(S)(ga, gb))
        return tuple(out)

    def add(self, a, b):
        return self._pointwise(lambda S: S.add, a, b)

    def mul(self, a, b):
        return self._pointwise(lambda S: S.mul, a, b)

    @property
    def zero(self):
        return tuple(self.p.sections[self.p.site.minimal_open(x)].zero for x in self.pts)

    @property
    def one(self):
        return tuple(self.p.sections[self.p.site.minimal_open(x)].one for x in self.pts)

    def format(self, a):
        return "(" + ", ".join(self.p.sections[self.p.site.minimal_open(x)].format(g)
                               for x, g in zip(self.pts, a)) + ")"


def sheafify(p):
    """Sections over U: families (s_x in F(U_x))_{x in U} that are locally sections.

    On a finite site the stalk at x is F(U_x) for the minimal open U_x, and a
    family is locally a section exactly when s_y is the restriction of s_x
    for every y in U_x.
    """
    site = p.site
    mins = {x: site.minimal_open(x) for x in site.points}
    secs = {}
    for U in site.opens:
        pts = sorted(U)
        choices = [list(p.sections[mins[x]].elements()) for x in pts]
        fams = []
        for fam in product(*choices):
            s = dict(zip(pts, fam))
            if all(p.res(mins[x], mins[y])(s[x]) == s[y] for x in pts for y in mins[x]):
                fams.append(tuple(fam))
        secs[U] = SheafSections(p, U, fams)

    def res(U, V):
        keep = [i for i, x in enumerate(sorted(U)) if x in V]
        return lambda fam: tuple(fam[i] for i in keep)

    out = PresheafData(site, secs, res, f"{p.name}#")
    out.source = p
    return out


def check_sheaf_axioms(p):
    """Identity and gluing for every open and every open cover, exhaustively."""
    rep = Report("sheaf axioms", p.name)
    site = p.site
    for U in site.opens:
        S = p.sections[U]
        for cover in site.covers(U):
            restricted = {}
            for s in S.elements():
                key = tuple(p.res(U, V)(s) for V in cover)
                if key in restricted:
                    rep.fail("identity axiom fails", U=sorted(U), cover=[sorted(V) for V in cover])
                    break
                restricted[key] = s
            # compatible families over the cover
            for fam in product(*[list(p.sections[V].elements()) for V in cover]):
                ok = all(p.res(V, V & W)(a) == p.res(W, V & W)(b)
                         for (V, a), (W, b) in combinations(zip(cover, fam), 2))
                if ok and tuple(fam) not in restricted:
                    rep.fail("gluing axiom fails", U=sorted(U), cover=[sorted(V) for V in cover])
                    break
    return rep


def check_sheafification(p):
    """Axioms on p#, restrictions are morphisms, and the map p -> p# is the identity on stalks."""
    sh = sheafify(p)
    rep = Report("sheafification", p.name)
    rep.merge(check_sheaf_axioms(sh), prefix="axioms")
    rep.merge(check_morphisms_sheaf(sh), prefix="restrictions")
    site = p.site
    for U in site.opens:
        fams = sh.sections[U]
        for s in p.sections[U].elements():
            fam = tuple(p.res(U, site.minimal_open(x))(s) for x in sorted(U))
            rep.check(fam in fams.index, "section does not give a compatible family", U=sorted(U))
    rep.details.update({_key(U) or "{}": len(sh.sections[U].families) for U in site.opens})
    return rep


def check_morphisms_sheaf(sh):
    return sh.check_morphisms()


# site fixtures -------------------------------------------------------------------

def load_site(name_or_path):
    """Read a site fixture: {name, points, opens, presheaf: {open key: modulus}}."""
    from pathlib import Path
    path = Path(name_or_path)
    if not path.exists():
        path = fixtures_dir() / "sites" / f"{name_or_path}.json"
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise StructuralError(f"cannot read site {name_or_path}: {exc}") from None
    site = FiniteSite(data["points"], [set(U) for U in data["opens"]], data.get("name", path.stem))
    moduli = {}
    for key, n in data.get("presheaf", {}).items():
        U = frozenset(k for k in key.split(",") if k)
        moduli[U] = n
    p = residue_presheaf(site, moduli, name=f"{site.name} rings") if moduli else None
    return site, p


def fixture_sites():
    d = fixtures_dir() / "sites"
    return [load_site(path) for path in sorted(d.glob("*.json"))]


# basic-open sections of fgId(R) -----------------------------------------------

def structure_sections_on_basic_open(T, f):
    """T_f, the sections over D_k(f); T itself for f = 1, one element for f = 0."""
    if f.is_zero:
        return FiniteSemiring(["0"], [["0"]], [["0"]], "0", "0", name=f"{T.name}_0")
    if f.is_unit:
        return T
    return localize_semiring(T, ("away", f))


def _fraction(T, f, x):
    """A section over D_k(f) as a reduced pair (a, u)."""
    if f.is_unit:
        return (x, T.one)
    return x


def restrict_basic(T, f, g, x):
    """Restriction T_f -> T_{fg} of a section over D_k(f)."""
    target = structure_sections_on_basic_open(T, f * g)
    if isinstance(target, FiniteSemiring):
        return target.zero
    if target is T:
        return x
    return target.make(*_fraction(T, f, x))


def check_basic_open_restrictions(T, f, g, elements):
    """T -> T_f -> T_fg equals T -> T_fg on the sampled elements."""
    rep = Report("basic open restrictions", f"{T.name}, f={f!r}, g={g!r}")
    one = T.one
    for a in elements:
        via = restrict_basic(T, f, g, restrict_basic(T, one, f, a))
        direct = restrict_basic(T, one, f * g, a)
        rep.check(via == direct, "restrictions do not compose", a=repr(a))
    return rep


# symbolic stalks over Spec Z ---------------------------------------------------

def symbolic_stalk_check(p, rng, samples=40):
    """fgId(O)_p against fgId(Z_p): germs (f, <a>) with f outside p, compared in Z_p.

    Pairs with the same image in fgId(Z_p) must already agree on a smaller
    basic open D(f g h); h is built from the prime-to-p parts of a and b.
    """
    rep = Report("stalk of fgId(O) at a prime", f"<{p}>")
    Zp = LocalizedAtPrime(ZZ, p)

    def outside(x):
        return x != 0 and (p == 0 or x % p)

    germs = []
    while len(germs) < samples:
        f = rng.randint(1, 30)
        a = rng.randint(0, 200)
        if outside(f):
            germs.append((f, a))

    def image(g):
        return Zp.ideal(Zp.embed(g[1]))

    def prime_to_p(a):
        if a == 0:
            return 1
        out = 1
        for q, e in factor(ZZ, a).items():
            if q != p:
                out *= q ** e
        return out

    for g1, g2 in combinations(germs, 2):
        if image(g1) != image(g2):
            continue
        h = g1[0] * g2[0] * prime_to_p(g1[1]) * prime_to_p(g2[1])
        Zh = LocalizedAway(ZZ, h)
        same = Zh.ideal(Zh.embed(g1[1])) == Zh.ideal(Zh.embed(g2[1]))
        rep.check(same, "germs with equal images differ on every smaller open",
                  first=list(g1), second=list(g2))
    for k in range(4):
        target = Zp.ideal(Zp.embed(p ** k if p else 1))
        rep.check(image((1, p ** k if p else 1)) == target, "not surjective", k=k)
    rep.check(image((1, 0)) == Zp.zero_ideal(), "zero ideal not hit")
    return rep


# sheaves of modules -----------------------------------------------------------------

class TildeModule:
    """The sheaf N~ for N = fgMod(Z^n) (or its part below a submodule K).

    Sections over D_k(u(f)) are fractions nu/<d> with d dividing a power of f;
    the canonical form is the Hermite basis of nu over Z[1/f], scaled by 1/d.
    """

    def __init__(self, n, K=None):
        self.n = n
        self.K = K

    def section(self, f, nu, d=1):
        """Canonical form of nu/<d> over D(f)."""
        if self.K is not None and not nu <= self.K:
            raise DomainError(f"{nu!r} is not below {self.K!r}")
        Zf = LocalizedAway(ZZ, f)
        if not Zf.in_set(d):
            raise DomainError(f"{d} is not invertible on D({f})")
        inv = Zf.make(1, d)
        rows = [[Zf.mul(inv, Zf.embed(x)) for x in r] for r in nu.rows]
        return (f, hnf(Zf, rows, self.n))

    def restrict(self, section, g, nu, d=1):
        """Restriction of the section nu/<d> from D(f) to D(fg), recomputed over Z[1/fg]."""
        f, _ = section
        return self.section(f * g, nu, d)

    def act(self, f, rho_gen, rho_den, nu, d=1):
        """(rho/<rho_den>) . (nu/<d>) = (rho nu)/<rho_den d>."""
        return self.section(f, nu.scale(rho_gen), d * rho_den)

    def stalk(self, p, nu, d=1):
        """Germ at <p>: the Hermite basis over Z_<p>."""
        Zp = LocalizedAtPrime(ZZ, p)
        inv = Zp.make(1, d)
        return hnf(Zp, [[Zp.mul(inv, Zp.embed(x)) for x in r] for r in nu.rows], self.n)


def module_sheaf_tilde(n, K=None):
    return TildeModule(n, K)


def check_tilde(tilde, rng, samples=20):
    """Restriction compatibility, action square and stalk compatibility on samples."""
    rep = Report("module sheaf from fgMod", f"fgMod(Z^{tilde.n})")
    primes = [2, 3, 5, 7]
    for _ in range(samples):
        f = rng.choice([1, 2, 3, 6, 10])
        g = rng.choice([1, 2, 5, 7])
        nu = Submodule(ZZ, tilde.n, [[rng.randint(-9, 9) for _ in range(tilde.n)]
                                     for _ in range(rng.randint(1, 2))])
        if tilde.K is not None:
            nu = tilde.K.scale(rng.randint(1, 5))
        d = f ** rng.randint(0, 2)
        s = tilde.section(f, nu, d)
        # equal fractions have equal canonical forms
        rep.check(tilde.section(f, nu.scale(f), d * f) == s, "fraction form not canonical",
                  f=f, d=d)
        # restriction computed directly equals restriction of the canonical form
        r1 = tilde.restrict(s, g, nu, d)
        Zfg = LocalizedAway(ZZ, f * g)
        r2 = (f * g, hnf(Zfg, [[Zfg.make(*x) for x in row] for row in s[1]], tilde.n))
        rep.check(r1 == r2, "restriction not compatible", f=f, g=g)
        # action square: act then restrict = restrict then act
        a = rng.randint(1, 6)
        acted = tilde.act(f, a, 1, nu, d)
        left = (f * g, hnf(Zfg, [[Zfg.make(*x) for x in row] for row in acted[1]], tilde.n))
        right = tilde.act(f * g, a, 1, nu, d)
        rep.check(left == right, "action does not commute with restriction", f=f, g=g, a=a)
        # stalks at primes in D(f) match N_p
        for p in primes:
            if f % p == 0:
                continue
            Zp = LocalizedAtPrime(ZZ, p)
            via = hnf(Zp, [[Zp.make(*x) for x in row] for row in s[1]], tilde.n)
            rep.check(via == tilde.stalk(p, nu, d), "stalk mismatch", p=p, f=f)
    return rep


# closed subschemes of a finite Spec_k --------------------------------------------

def closed_subscheme_comparison(s, ideal):
    """O/I~ against i_*(O of Spec_k(S/I)) on a finite semiring, stalk by stalk.

    O -> i_* O kills I~, so there is a natural map O/I~ -> i_* O.  At a
    prime P its stalk is S_P/I_P -> (S/I)_(P/I) when I lies in P, and a map
    between one-element semirings otherwise.  The two sheaves are isomorphic
    through this map exactly when every stalk map is bijective.  The verdict
    goes in ``details["isomorphic"]``; a "no" is a finding, not a failure.
    """
    if not isinstance(s, FiniteSemiring):
        raise UnsupportedError("closed subschemes are compared on finite semirings only")
    ideal = frozenset(s.get(a) if isinstance(a, str) else a for a in ideal)
    if not is_k_ideal(s, ideal):
        raise DomainError(f"{s.subset_labels(ideal)} is not a k-ideal of {s.name}")
    rep = Report("closed subscheme sheaves", f"{s.name}, I = {{{','.join(s.subset_labels(ideal))}}}")
    q = quotient_semiring(s, ideal)
    pi = q.projection
    primes = [P for P in enumerate_k_ideals(s) if is_prime_ideal(s, P)]
    stalks = {}
    for P in primes:
        W = [a for a in s.elements() if a not in P]
        SP = localize_semiring(s, W)
        IP = {SP.class_of[(i, w)] for i in ideal for w in W}
        A = quotient_semiring(SP, IP)
        key = "{" + ",".join(s.subset_labels(P)) + "}"
        if not ideal <= P:
            stalks[key] = {"in_V(I)": False, "quotient_stalk": len(A), "pushforward_stalk": 1,
                           "bijective": len(A) == 1}
            continue
        Wq = sorted({pi[w] for w in W})
        B = localize_semiring(q, Wq)
        image = {}
        for a in s.elements():
            for w in W:
                x = A.projection[SP.class_of[(a, w)]]
                y = B.class_of[(pi[a], pi[w])]
                if image.setdefault(x, y) != y:
                    rep.fail("natural map not well defined", prime=key, a=s.format(a),
                             w=s.format(w))
        bij = len(image) == len(A) and len(set(image.values())) == len(B) == len(image)
        stalks[key] = {"in_V(I)": True, "quotient_stalk": len(A), "pushforward_stalk": len(B),
                       "bijective": bij}
    rep.details.update({"stalks": stalks, "primes": len(primes),
                        "isomorphic": all(v["bijective"] for v in stalks.values())})
    return rep


# comparison phi ---------------------------------------------------------------

def comparison_phi(R, opens, bound=20, samples=None):
    """phi: O_{X+} -> Trop(O_X) on basic opens, by pointwise zeta.

    ``opens`` holds "generic" (the stalk at <0>), "X" or ring elements f
    (meaning D(f)).  Kernel witnesses are sections other than 1 whose image
    agrees with the image of 1 at every truncated point.
    """
    if not isinstance(R, (Integers, UniPoly, Field)):
        raise UnsupportedError("the comparison morphism is built over Z, K[x] or a field")
    rep = Report("comparison morphism phi", R.name)
    spec = speck_truncated(R, bound)
    T = FgId(R)
    kernel = []
    for U in opens:
        if U == "generic":
            data = localize_at_prime(spec.points[0])
            Tp = data.semiring_local
            secs = [Tp.make(R.ideal(a), R.ideal(b)) for a, b in _sample_pairs(R, samples)]
            one = data.zeta(Tp.one)
            for t in secs:
                if t != Tp.one and data.zeta(t) == one:
                    kernel.append({"open": "generic", "section": Tp.format(t),
                                   "image": repr(data.zeta(t))})
            if R == ZZ:
                for a, b in _sample_pairs(R, samples):
                    q = Fraction(a, b)
                    rep.check(zeta_natgcd(0, q) == data.zeta(Tp.make(R.ideal(a), R.ideal(b))),
                              "zeta disagrees with the N^gcd description", section=str(q))
            continue
        f = R.one if U == "X" else U
        name = "X" if U == "X" else f"D({R.format(f)})"
        Tf = localize_semiring(T, ("away", R.ideal(f)))
        pts = dk(R.ideal(f), spec)
        ones = _phi_family(Tf.one, pts)
        for s in _basic_sections(R, Tf, f, samples):
            fam = _phi_family(s, pts)
            for g in _refinements(R):
                Tfg = localize_semiring(T, ("away", R.ideal(R.mul(f, g))))
                sub = dk(R.ideal(R.mul(f, g)), spec)
                rep.check(_phi_family(Tfg.make(*s), sub) == {p: fam[p] for p in sub},
                          "naturality square fails", open=name, g=R.format(g),
                          section=Tf.format(s))
            if s != Tf.one and fam == ones:
                kernel.append({"open": name, "section": Tf.format(s)})
    rep.details.update({"kernel_witnesses": kernel, "kernel_nontrivial": bool(kernel),
                        "points": len(spec), "bound": bound})
    return rep


def _sample_pairs(R, samples):
    if samples is not None:
        return [(R.from_int(a) if isinstance(a, int) else a, R.from_int(b) if isinstance(b, int) else b)
                for a, b in samples]
    if isinstance(R, Field):
        return [(R.from_int(a), R.one) for a in range(0, 4)]
    return [(R.from_int(a), R.from_int(b)) for a in range(1, 8) for b in range(1, 8)] if R == ZZ \
        else [(a, b) for a in _poly_samples(R) for b in _poly_samples(R) if not R.is_zero(b)]


def _poly_samples(R):
    x = R.x()
    one = R.one
    return [R.zero, one, x, R.add(x, one), R.mul(x, x), R.mul(x, R.add(x, one))]


def _refinements(R):
    if R == ZZ:
        return [2, 3]
    if isinstance(R, UniPoly):
        return [R.x(), R.add(R.x(), R.one)]
    return []


def _basic_sections(R, Tf, f, samples):
    if isinstance(R, Field):
        return [Tf.zero, Tf.one]
    if R == ZZ:
        nums = [R.from_int(a) for a in range(0, 13)]
    else:
        nums = _poly_samples(R)
    out = set()
    for a in nums:
        for k in range(0, 2):
            out.add(Tf.make(R.ideal(a), R.ideal(R.power(f, k))))
    return sorted(out, key=repr)


def _phi_family(s, pts):
    out = {}
    for p in pts:
        data = localize_at_prime(p)
        out[p] = data.zeta(data.semiring_local.make(*s))
    return out


# gluing and Trop ----------------------------------------------------------------

class GluingData:
    """Charts R_i, overlaps D(f_ij) in chart i, and transition substitutions.

    A transition (i, j) is an isomorphism (R_i)_{f_ij} -> (R_j)_{f_ji} given by
    the images of the chart variables.
    """

    def __init__(self, charts, overlaps, transitions, name="covering"):
        self.charts = list(charts)
        self.overlaps = dict(overlaps)
        self.transitions = dict(transitions)
        self.name = name

    @classmethod
    def from_dict(cls, data):
        if "coverings" in data:
            raise StructuralError("pick one covering before building gluing data")
        charts = [parse_ring(c["ring"]) for c in data["charts"]]
        overlaps = {}
        for o in data.get("overlaps", []):
            i, j = o["i"], o["j"]
            overlaps[(i, j)] = parse_element(charts[i], o["f_i"])
            overlaps[(j, i)] = parse_element(charts[j], o["f_j"])
        locs = {}
        for (i, j), f in overlaps.items():
            locs[(i, j)] = LocalizedAway(charts[i], f)
        transitions = {}
        for t in data.get("transitions", []):
            i, j = t["i"], t["j"]
            if (i, j) not in locs or (j, i) not in locs:
                raise StructuralError(f"transition {i}->{j} has no overlap")
            src, dst = locs[(i, j)], locs[(j, i)]
            images = {v: parse_element(dst, e) for v, e in t["substitution"].items()}
            transitions[(i, j)] = _Transition(src, dst, images)
        return cls(charts, overlaps, transitions, data.get("name", "covering"))

    def loc(self, i, j):
        return LocalizedAway(self.charts[i], self.overlaps[(i, j)])


class _Transition:
    """(R_i)_f -> (R_j)_g sending the chart variable to a given element."""

    def __init__(self, src, dst, images):
        self.src = src
        self.dst = dst
        if not isinstance(src.base, UniPoly):
            raise UnsupportedError("transitions are substitutions of univariate charts")
        try:
            self.poly = substitution(src.base, dst, images)
        except DomainError as exc:
            raise StructuralError(str(exc)) from None

    def __call__(self, frac):
        num, den = frac
        return self.dst.mul(self.poly(num), self.dst.inverse(self.poly(den)))

    def ideal(self, I):
        return self.dst.ideal(*[self(g) for g in I.canonical])


def load_gluing(path, covering=None):
    from pathlib import Path
    p = Path(path)
    if not p.exists():
        p = fixtures_dir() / "gluing" / f"{path}.json"
    try:
        data = json.loads(p.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise StructuralError(f"cannot read gluing data {path}: {exc}") from None
    if "coverings" in data:
        if covering not in data["coverings"]:
            raise StructuralError(f"covering {covering!r} not in {sorted(data['coverings'])}")
        d = dict(data["coverings"][covering])
        d.setdefault("name", covering)
        return GluingData.from_dict(d)
    g = GluingData.from_dict(data)
    if covering is not None and covering != g.name:
        raise StructuralError(f"covering {covering!r} not in [{g.name!r}]")
    return g


class TropSchemeData:
    def __init__(self, gluing, bound, charts, identifications):
        self.gluing = gluing
        self.bound = bound
        self.charts = charts
        self.identifications = identifications

    def glued_points(self):
        """Chart points modulo the overlap identifications (union-find)."""
        parent = {(i, p): (i, p) for i, spec in enumerate(self.charts) for p in spec.points}

        def find(q):
            while parent[q] != q:
                q = parent[q]
            return q

        for (i, j), m in self.identifications.items():
            for p, q in m.items():
                a, b = find((i, p)), find((j, q))
                if a != b:
                    parent[a] = b
        classes = {}
        for q in parent:
            classes.setdefault(find(q), []).append(q)
        return list(classes.values())

    def to_dict(self):
        return {
            "covering": self.gluing.name,
            "bound": self.bound,
            "charts": [{"ring": s.ring.name, "points": [repr(p) for p in s.points]}
                       for s in self.charts],
            "overlaps": {f"{i}->{j}": {repr(p): repr(q) for p, q in m.items()}
                         for (i, j), m in sorted(self.identifications.items())},
            "glued_points": len(self.glued_points()),
        }


def _point_map(g, i, j, spec_i, spec_j):
    """Points of D_k(u(f_ij)) in chart i sent to chart j via fgId of the transition."""
    t = g.transitions[(i, j)]
    src, dst = t.src, t.dst
    f = g.overlaps[(i, j)]
    out = {}
    by_prime = {p.prime: p for p in spec_j.points}
    for p in dk(spec_i.ring.ideal(f), spec_i):
        ext = src.ideal(src.embed(p.prime.generator))
        # canonical generators of the localization are normal base elements over 1
        contracted = dst.base.ideal(t.ideal(ext).generator[0])
        q = by_prime.get(contracted)
        if q is None:
            raise DescentError(f"image {contracted!r} of {p!r} lies outside the truncation",
                               witness=(i, j, repr(p)))
        out[p] = q
    return out


def check_transitions(g, rng, samples=25):
    """Transitions are mutually inverse and satisfy the cocycle condition on samples."""
    rep = Report("gluing data", g.name)
    for (i, j), t in sorted(g.transitions.items()):
        back = g.transitions.get((j, i))
        if back is None:
            rep.fail("missing inverse transition", i=i, j=j)
            continue
        for _ in range(samples):
            a = t.src.random_element(rng)
            if back(t(a)) != a:
                rep.fail("transitions not mutually inverse", triple=[i, j, i],
                         element=t.src.format(a))
                break
    n = len(g.charts)
    for i, j, k in product(range(n), repeat=3):
        if len({i, j, k}) < 3 or not all(p in g.transitions for p in ((i, j), (j, k), (i, k))):
            continue
        for _ in range(samples):
            a = g.transitions[(i, j)].src.random_element(rng)
            if g.transitions[(j, k)](g.transitions[(i, j)](a)) != g.transitions[(i, k)](a):
                rep.fail("cocycle condition fails", triple=[i, j, k])
                break
    return rep


def trop_scheme(g, bound, rng=None):
    """Chart-wise truncated Spec_k(fgId(R_i)) glued along the D_k images of the overlaps."""
    import random
    rng = rng or random.Random(0)
    rep = check_transitions(g, rng)
    if not rep:
        w = rep.witnesses[0]
        raise DescentError(w["reason"], witness=w)
    charts = [speck_truncated(R, bound) for R in g.charts]
    ident = {}
    for (i, j) in g.transitions:
        ident[(i, j)] = _point_map(g, i, j, charts[i], charts[j])
    # tropical cocycle and inverse checks on points
    for (i, j), m in ident.items():
        back = ident.get((j, i), {})
        for p, q in m.items():
            if back.get(q) != p:
                raise DescentError("tropical transitions not mutually inverse",
                                   witness=(i, j, repr(p)))
    for i, j, k in product(range(len(charts)), repeat=3):
        if len({i, j, k}) < 3 or not all(x in ident for x in ((i, j), (j, k), (i, k))):
            continue
        for p, q in ident[(i, j)].items():
            if q in ident[(j, k)] and p in ident[(i, k)] and ident[(j, k)][q] != ident[(i, k)][p]:
                raise DescentError("tropical cocycle fails", witness=(i, j, k, repr(p)))
    return TropSchemeData(g, bound, charts, ident)


def check_trop_scheme(data):
    """Point counts, bijectivity of overlap identifications, closed sets carried along."""
    rep = Report("Trop of a scheme", data.gluing.name)
    g = data.gluing
    for i, spec in enumerate(data.charts):
        R = spec.ring
        nonzero = [p for p in spec.points if not p.prime.is_zero]
        if isinstance(R, UniPoly) and R.field.is_finite:
            expected = sum(1 for d in range(1, data.bound + 1)
                           for m in R.monic_polynomials(d) if R.is_irreducible(m))
            rep.check(len(nonzero) == expected, "chart point count differs from irreducible count",
                      chart=i, points=len(nonzero), irreducible=expected)
        rep.details[f"chart{i}_points"] = len(spec)
    for (i, j), m in data.identifications.items():
        spec_i, spec_j = data.charts[i], data.charts[j]
        dom = dk(spec_i.ring.ideal(g.overlaps[(i, j)]), spec_i)
        cod = dk(spec_j.ring.ideal(g.overlaps[(j, i)]), spec_j)
        rep.check(set(m) == set(dom) and set(m.values()) == set(cod) and len(set(m.values())) == len(m),
                  "overlap identification is not a bijection", i=i, j=j)
        # specialization (closure of points) is preserved: generic point to generic point
        for p, q in m.items():
            rep.check(p.prime.is_zero == q.prime.is_zero, "generic point not preserved",
                      point=repr(p))
        rep.details[f"overlap{i}{j}"] = len(m)
    rep.details["glued_points"] = len(data.glued_points())
    return rep
