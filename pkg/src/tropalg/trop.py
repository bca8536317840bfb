"""Tropicalization functors: u_R, u_M, induced morphisms, k-ideal handles.

A k-ideal of fgId(R) is infinite in general, so it is carried by a
*handle*: the ring ideal L it corresponds to.  A finitely generated ideal
beta belongs to the handle exactly when beta is contained in L.  The same
goes for k-subsemimodules of fgMod(R^n) and submodules of R^n.
"""

from .errors import DomainError
from .modules import FgMod, Submodule, module_action, u_M
from .report import Report
from .rings.algorithms import is_primary_ring_ideal, is_prime_ring_ideal, ring_radical
from .rings.base import Ideal, ZZ
from .rings.morphisms import RingMorphism, induced_ideal_map
from .semiring import BOOLEAN, NAT_GCD, FgId, FiniteSemiring


def u_R(ring, a):
    """The principal ideal <a> in canonical form."""
    return ring.ideal(a)


# valuations -----------------------------------------------------------------

class ValuationData:
    """A map from a ring to an idempotent semiring, with a catalogue name."""

    def __init__(self, source, target, fn, name):
        self.source = source
        self.target = target
        self.fn = fn
        self.name = name

    def __call__(self, a):
        return self.fn(a)

    def __repr__(self):
        return f"{self.name}: {self.source.name} -> {self.target.name}"


def universal_valuation(ring):
    return ValuationData(ring, FgId(ring), lambda a: ring.ideal(a), "u_R")


def collapse_to_boolean(ring):
    """0 goes to 0, everything else to 1."""
    B = BOOLEAN
    return ValuationData(ring, B, lambda a: B.zero if ring.is_zero(a) else B.one,
                         "collapse_to_boolean")


def nat_gcd_abs():
    """v(n) = |n| into N^gcd, i.e. u_Z followed by <n> -> n."""
    return ValuationData(ZZ, NAT_GCD, abs, "nat_gcd_abs")


def table_valuation(ring, target, table, name="table"):
    """A finite ring mapped into a finite semiring by an explicit table of labels."""
    if not isinstance(target, FiniteSemiring):
        raise DomainError("table valuations need a finite target semiring")
    values = {}
    for x in ring.elements():
        key = ring.format(x)
        if key not in table:
            raise DomainError(f"table has no value for {key}")
        values[x] = target.get(table[key])
    return ValuationData(ring, target, lambda a: values[a], name)


def tabulated_u_R(ring):
    """u_R of a finite ring as a table into the tabulated fgId(R)."""
    t = FgId(ring).to_finite()
    return table_valuation(ring, t, {ring.format(x): repr(ring.ideal(x)) for x in ring.elements()},
                           name="u_R_table")


def valuation(name, ring=None, target=None, table=None):
    """Look up a catalogued valuation by name."""
    if name == "u_R":
        return universal_valuation(ring)
    if name == "collapse_to_boolean":
        return collapse_to_boolean(ring)
    if name == "nat_gcd_abs":
        if ring is not None and ring != ZZ:
            raise DomainError("nat_gcd_abs is defined on Z only")
        return nat_gcd_abs()
    if name == "table":
        return table_valuation(ring, target, table)
    raise DomainError(f"unknown valuation {name!r}; expected u_R, collapse_to_boolean, "
                      f"nat_gcd_abs or table")


def _leq(t, a, b):
    return t.leq(a, b)


def check_seminorm(v, samples):
    """Unit, sign, submultiplicativity and subadditivity on all sample pairs.

    ``details`` records whether the map also looked multiplicative, a norm
    and integral on the samples.
    """
    R, T = v.source, v.target
    rep = Report("non-Archimedean seminorm", f"{v.name} on {R.name}")
    fmt = T.format
    rep.check(v(R.zero) == T.zero, "unit axiom: |0| != 0", value=fmt(v(R.zero)))
    rep.check(v(R.one) == T.one, "unit axiom: |1| != 1", value=fmt(v(R.one)))
    minus = R.neg(R.one)
    rep.check(v(minus) == T.one, "sign axiom: |-1| != 1", value=fmt(v(minus)))
    samples = list(samples)
    vals = [v(a) for a in samples]
    mult = norm = integral = True
    for a, va in zip(samples, vals):
        if va == T.zero and not R.is_zero(a):
            norm = False
        if not _leq(T, va, T.one):
            integral = False
    for i, a in enumerate(samples):
        for j in range(i, len(samples)):
            b = samples[j]
            va, vb = vals[i], vals[j]
            prod = T.mul(va, vb)
            vab = v(R.mul(a, b))
            if not _leq(T, vab, prod):
                rep.fail("submultiplicativity fails", a=R.format(a), b=R.format(b))
            elif vab != prod:
                mult = False
            if not _leq(T, v(R.add(a, b)), T.add(va, vb)):
                rep.fail("subadditivity fails", a=R.format(a), b=R.format(b))
    rep.details.update({"samples": len(samples), "multiplicative": mult, "norm": norm,
                        "integral": integral, "valuation": rep.passed and mult and norm})
    return rep


# semiring morphisms -----------------------------------------------------------

class SemiringMap:
    def __init__(self, source, target, fn, name):
        self.source = source
        self.target = target
        self.fn = fn
        self.name = name

    def __call__(self, x):
        return self.fn(x)

    def __repr__(self):
        return f"{self.name}: {self.source.name} -> {self.target.name}"


def check_morphism(f, elements):
    """Additivity, multiplicativity and unit preservation on all pairs of ``elements``."""
    S, T = f.source, f.target
    rep = Report("semiring morphism", f.name)
    rep.check(f(S.zero) == T.zero, "0 not preserved")
    rep.check(f(S.one) == T.one, "1 not preserved")
    elements = list(elements)
    imgs = [f(x) for x in elements]
    for i, a in enumerate(elements):
        for j in range(i, len(elements)):
            b = elements[j]
            if f(S.add(a, b)) != T.add(imgs[i], imgs[j]):
                rep.fail("sum not preserved", a=S.format(a), b=S.format(b))
            if f(S.mul(a, b)) != T.mul(imgs[i], imgs[j]):
                rep.fail("product not preserved", a=S.format(a), b=S.format(b))
    return rep


def vhat_on(v, gens):
    """sum of v(a_i) for a presentation <a_1, ..., a_m>."""
    T = v.target
    return T.sum([v(g) for g in gens])


def induced_vhat(v, samples=None):
    """The semiring morphism fgId(R) -> T induced by an integral seminorm ``v``."""
    T = v.target
    for a in samples or ():
        if not _leq(T, v(a), T.one):
            raise DomainError(f"{v.name} is not integral: value at {v.source.format(a)} "
                              f"is {T.format(v(a))}")
    return SemiringMap(FgId(v.source), T, lambda I: vhat_on(v, I.canonical), f"{v.name}^")


def alternative_presentation(ideal, rng):
    """A different generating list of the same ideal.

    The first generator g becomes the pair r*g, (r+1)*g, and later ones pick
    up a multiple of g.  Both lists generate the same ideal in any ring.
    """
    R = ideal.ring
    gens = list(ideal.canonical)
    if not gens:
        return [R.zero, R.zero]
    g = gens[0]
    r = R.random_element(rng)
    out = [R.mul(r, g), R.mul(R.add(r, R.one), g)]
    for h in gens[1:]:
        out.append(R.add(h, R.mul(R.random_element(rng), g)))
    return out


def check_vhat_well_defined(v, ideals, rng):
    rep = Report("well-defined induced morphism", v.name)
    R = v.source
    for I in ideals:
        alt = alternative_presentation(I, rng)
        if R.ideal(*alt) != I:
            rep.fail("alternative presentation changed the ideal", ideal=repr(I))
            continue
        a, b = vhat_on(v, I.canonical), vhat_on(v, alt)
        rep.check(a == b, "value depends on presentation", ideal=repr(I),
                  first=v.target.format(a), second=v.target.format(b))
    return rep


def fgid_functor(f):
    """fgId(f): fgId(R1) -> fgId(R2), I -> <f(I)>."""
    if not isinstance(f, RingMorphism):
        raise DomainError(f"{f!r} is not a catalogued ring morphism")
    return SemiringMap(FgId(f.source), FgId(f.target), lambda I: induced_ideal_map(f, I),
                       f"fgId({f.kind})")


def check_fgid_functor(f, samples):
    """fgId(f) . u_R1 = u_R2 . f on the samples."""
    F = fgid_functor(f)
    rep = Report("naturality of u_R", repr(f))
    R1, R2 = f.source, f.target
    for a in samples:
        left, right = F(R1.ideal(a)), R2.ideal(f(a))
        rep.check(left == right, "square does not commute", a=R1.format(a),
                  left=repr(left), right=repr(right))
    return rep


# universal property ---------------------------------------------------------

def check_universal_property(v, samples, ideals, rng):
    """v = v^ . u_R on samples; v^ is a morphism; any candidate that agrees with v on
    principal ideals and is additive coincides with v^ (presentation test).

    For finite fgId(R) and finite targets the uniqueness part is complete: all
    semiring morphisms fgId(R) -> T are enumerated.
    """
    rep = Report("universal property of u_R", repr(v))
    R, T = v.source, v.target
    vh = induced_vhat(v, samples)
    for a in samples:
        rep.check(v(a) == vh(R.ideal(a)), "v != v^ . u_R", a=R.format(a))
    rep.merge(check_morphism(vh, ideals), prefix="v^")
    rep.merge(check_vhat_well_defined(v, ideals, rng), prefix="presentation")
    fg = FgId(R)
    if fg.is_finite and isinstance(T, FiniteSemiring):
        morphisms = enumerate_morphisms(fg.to_finite(), T)
        elems = fg.elements()
        agreeing = [m for m in morphisms
                    if all(m[elems.index(R.ideal(x))] == v(x) for x in R.elements())]
        rep.check(len(agreeing) == 1, "factoring morphism not unique", count=len(agreeing))
        rep.details["morphisms_enumerated"] = len(morphisms)
    rep.details["samples"] = len(samples)
    return rep


def enumerate_morphisms(s, t):
    """All semiring morphisms between finite semirings, as tuples of images (by payload)."""
    n = len(s)
    out = []
    img = [None] * n
    img_fixed = {s.zero: t.zero, s.one: t.one}

    def ok(upto):
        for a in range(upto):
            for b in range(upto):
                for op_s, op_t in ((s.add, t.add), (s.mul, t.mul)):
                    c = op_s(a, b)
                    if c < upto and img[c] != op_t(img[a], img[b]):
                        return False
        return True

    def extend(i):
        if i == n:
            out.append(tuple(img))
            return
        choices = [img_fixed[i]] if i in img_fixed else list(t.elements())
        for x in choices:
            img[i] = x
            if ok(i + 1):
                extend(i + 1)
        img[i] = None

    extend(0)
    return out


# realizations -------------------------------------------------------------------

def is_realization(v, ideals, samples, pairs=(), targets=None):
    """Is ``v`` a surjective valuation with v^: fgId(R) -> T bijective?

    ``ideals`` should list fgId(R) (complete when it is finite); ``targets``
    lists the part of T the image must cover (all of T when T is finite).
    """
    R, T = v.source, v.target
    rep = Report("realization", f"{v.name} on {R.name} -> {T.name}")
    semi = check_seminorm(v, samples)
    rep.merge(semi, prefix="seminorm")
    if not semi.details["valuation"]:
        rep.fail("not a valuation on the samples")
    vh = induced_vhat(v)
    seen = {}
    for I in ideals:
        x = vh(I)
        if x in seen:
            rep.fail("v^ not injective", first=repr(seen[x]), second=repr(I), value=T.format(x))
        else:
            seen[x] = I
    if targets is None and isinstance(T, FiniteSemiring):
        targets = list(T.elements())
    for x in targets or ():
        rep.check(x in seen, "v^ not surjective", missing=T.format(x))
    for I, J in pairs:
        rep.check(vh(I + J) == T.add(vh(I), vh(J)), "sum not preserved", I=repr(I), J=repr(J))
        rep.check(vh(I * J) == T.mul(vh(I), vh(J)), "product not preserved", I=repr(I), J=repr(J))
    rep.details.update({"ideals": len(ideals), "pairs": len(pairs), "image": len(seen)})
    return rep


# module norms --------------------------------------------------------------------

class ModuleNorm:
    """A map R^n -> N into an fgId(R)-semimodule, given with the action on N."""

    def __init__(self, ring, n, target, fn, act, name, C=None):
        self.ring = ring
        self.n = n
        self.target = target
        self.fn = fn
        self.act = act
        self.name = name
        self.C = ring.unit_ideal() if C is None else C

    def __call__(self, m):
        return self.fn(m)

    def __repr__(self):
        return f"{self.name}: {self.ring.name}^{self.n} -> {self.target.name}"


def universal_module_norm(ring, n):
    M = FgMod(ring, n)
    return ModuleNorm(ring, n, M, lambda m: u_M(ring, m), module_action, "u_M")


def content_norm(ring, n):
    """m -> the ideal generated by the coordinates of m, inside fgId(R)."""
    T = FgId(ring)
    return ModuleNorm(ring, n, T, lambda m: ring.ideal(*m), lambda rho, x: rho * x, "content")


def module_norm(name, ring, n):
    if name == "u_M":
        return universal_module_norm(ring, n)
    if name == "content":
        return content_norm(ring, n)
    raise DomainError(f"unknown module norm {name!r}; expected u_M or content")


def check_module_seminorm(w, samples, scalars):
    """w(0)=0, subadditivity, and w(r m) <= C u_R(r) w(m)."""
    R, N = w.ring, w.target
    rep = Report("u_R-seminorm", repr(w))
    zero = [R.zero] * w.n
    rep.check(w(zero) == N.zero, "w(0) != 0")
    norm = True
    for m in samples:
        wm = w(m)
        if wm == N.zero and any(not R.is_zero(x) for x in m):
            norm = False
        for m2 in samples:
            s = [R.add(x, y) for x, y in zip(m, m2)]
            rep.check(N.leq(w(s), N.add(wm, w(m2))), "subadditivity fails", m=m, n=m2)
        for r in scalars:
            rm = [R.mul(r, x) for x in m]
            bound = w.act(w.C * R.ideal(r), wm)
            rep.check(N.leq(w(rm), bound), "w(r m) exceeds C u(r) w(m)", r=R.format(r), m=m)
    rep.details["norm"] = norm
    return rep


def what_on(w, vectors):
    return w.target.sum([w(m) for m in vectors])


def induced_what(w):
    """fgMod(R^n) -> N, sum of generator values."""
    return lambda sub: what_on(w, sub.rows)


def check_module_universal_property(w, samples, submodules, rng):
    """w = w^ . u_M; w^ additive, compatible with the action and presentation independent."""
    R, N = w.ring, w.target
    rep = Report("universal property of u_M", repr(w))
    wh = induced_what(w)
    for m in samples:
        rep.check(w(m) == wh(u_M(R, m)), "w != w^ . u_M", m=m)
    for a in submodules:
        for b in submodules[:5]:
            rep.check(wh(a + b) == N.add(wh(a), wh(b)), "w^ not additive", a=repr(a), b=repr(b))
        alt = _alternative_rows(a, rng)
        if Submodule(R, w.n, alt) != a:
            rep.fail("alternative presentation changed the submodule", sub=repr(a))
        rep.check(what_on(w, alt) == wh(a), "w^ depends on presentation", sub=repr(a))
        rho = R.ideal(R.random_element(rng))
        rep.check(wh(module_action(rho, a)) == w.act(rho, wh(a)), "w^ not compatible with action",
                  rho=repr(rho), sub=repr(a))
    return rep


def _alternative_rows(sub, rng):
    R = sub.ring
    rows = [list(r) for r in sub.rows]
    if not rows:
        return [[R.zero] * sub.n]
    r = R.random_element(rng)
    first = rows[0]
    out = [[R.mul(r, x) for x in first], [R.mul(R.add(r, R.one), x) for x in first]]
    for row in rows[1:]:
        c = R.random_element(rng)
        out.append([R.add(x, R.mul(c, y)) for x, y in zip(row, first)])
    return out


# k-ideal handles ---------------------------------------------------------------

class KHandle:
    """A subtractive ideal (or subsemimodule) carried by the ring-side object it corresponds to."""

    __slots__ = ("obj",)

    def __init__(self, obj):
        self.obj = obj

    @property
    def ring(self):
        return self.obj.ring

    def __contains__(self, beta):
        return beta <= self.obj

    def principal_generators(self):
        raise NotImplementedError

    def __le__(self, other):
        """Containment, tested on the principal elements that generate the handle."""
        return all(b in other for b in self.principal_generators())

    def __eq__(self, other):
        return type(other) is type(self) and self <= other and other <= self

    def __hash__(self):
        return hash(self.obj)

    def __add__(self, other):
        return type(self)(self.obj + other.obj)

    def __repr__(self):
        return f"h({self.obj!r})"


class KIdealHandle(KHandle):
    __slots__ = ()

    @property
    def semiring(self):
        return FgId(self.ring)

    def principal_generators(self):
        return [self.ring.ideal(g) for g in self.obj.canonical]

    def to_dict(self):
        return {"ring": self.ring.name,
                "generators": [self.ring.format(g) for g in self.obj.canonical]}


class KSubmoduleHandle(KHandle):
    __slots__ = ()

    @property
    def semimodule(self):
        return FgMod(self.ring, self.obj.n)

    def principal_generators(self):
        return [u_M(self.ring, r) for r in self.obj.rows]

    def to_dict(self):
        return self.obj.to_dict()


def correspondence_forward(L):
    """Ring ideal (or submodule) -> the k-ideal it corresponds to."""
    if isinstance(L, Ideal):
        return KIdealHandle(L)
    if isinstance(L, Submodule):
        return KSubmoduleHandle(L)
    raise DomainError(f"cannot send {L!r} through the correspondence")


def correspondence_backward(h):
    """Handle -> the ring-side object u^{-1}(h), rebuilt from the principal members."""
    if isinstance(h, KIdealHandle):
        return h.ring.ideal(*[beta.canonical[0] for beta in h.principal_generators()])
    if isinstance(h, KSubmoduleHandle):
        rows = [r for beta in h.principal_generators() for r in beta.rows]
        return Submodule(h.ring, h.obj.n, rows)
    raise DomainError(f"{h!r} is not a handle")


def subtractive_closure_fgid(fgid, ideals):
    """<X>_k in fgId(R): all f.g. ideals below the sum of X."""
    ideals = list(ideals)
    total = fgid.zero
    for I in ideals:
        total = total + I
    return KIdealHandle(total)


def verify_correspondence(L, rng, samples=20):
    """Round trips, and u^{-1}(forward(L)) = L tested on sampled elements."""
    rep = Report("correspondence round trip", repr(L))
    h = correspondence_forward(L)
    back = correspondence_backward(h)
    rep.check(back == L, "backward(forward(L)) != L", L=repr(L), back=repr(back))
    rep.check(correspondence_forward(back) == h, "forward(backward(h)) != h")
    R = L.ring
    if isinstance(L, Ideal):
        for _ in range(samples):
            a = R.random_element(rng)
            rep.check((a in L) == (R.ideal(a) in h), "membership disagrees", a=R.format(a))
            inside = R.sum([R.mul(R.random_element(rng), g) for g in L.canonical])
            rep.check(R.ideal(inside) in h, "element of L not in handle", a=R.format(inside))
    else:
        for _ in range(samples):
            m = FgMod(R, L.n).random_vector(rng)
            rep.check(L.contains(m) == (u_M(R, m) in h), "membership disagrees", m=m)
    return rep


def check_order(L, M):
    """L <= M iff forward(L) <= forward(M), and the same after coming back."""
    hL, hM = correspondence_forward(L), correspondence_forward(M)
    ok = (L <= M) == (hL <= hM)
    ok &= (correspondence_backward(hL) <= correspondence_backward(hM)) == (hL <= hM)
    return ok


def kideal_product(h1, h2):
    """h1 x h2: the handle of the ring-ideal product."""
    if h1.ring != h2.ring:
        raise DomainError("handles over different rings")
    return KIdealHandle(h1.obj * h2.obj)


def check_kideal_product(h1, h2, rng, samples=5):
    """Direct-definition cross-check of the handle product on sampled members."""
    rep = Report("k-ideal product", f"{h1!r} x {h2!r}")
    R = h1.ring
    prod = kideal_product(h1, h2)

    def member(h):
        return R.ideal(*[R.mul(R.random_element(rng), g) for g in h.obj.canonical])

    for _ in range(samples):
        s = R.ideal(R.zero)
        for _ in range(2):
            s = s + member(h1) * member(h2)
        rep.check(s in prod, "sum of products outside the product", value=repr(s))
    gens1 = h1.principal_generators()
    gens2 = h2.principal_generators()
    bound = R.ideal(R.zero)
    for a in gens1:
        for b in gens2:
            bound = bound + a * b
    for _ in range(samples):
        gamma = member(prod)
        rep.check(gamma <= bound, "member not below a sum of products", value=repr(gamma))
    return rep


# literal semiring-side tests on bounded witnesses ------------------------------

def handle_is_prime(h, witnesses):
    """Complement contains 1 and is closed under products (over the witnesses)."""
    R = h.ring
    if R.unit_ideal() in h:
        return False
    outside = [a for a in witnesses if a not in h]
    return all(a * b not in h for a in outside for b in outside)


def handle_is_primary(h, witnesses, max_power):
    """ab in h and a not in h force b^n in h, n <= max_power (over the witnesses)."""
    R = h.ring
    if R.unit_ideal() in h:
        return False
    for a in witnesses:
        if a in h:
            continue
        for b in witnesses:
            if a * b in h and not any(b ** n in h for n in range(1, max_power + 1)):
                return False
    return True


def handle_radical_members(h, witnesses, max_power):
    return [a for a in witnesses if any(a ** n in h for n in range(1, max_power + 1))]


def handle_is_radical(h, witnesses, max_power):
    return all(a in h for a in handle_radical_members(h, witnesses, max_power))


def integer_witnesses(n, small=12):
    """<d> for d dividing n or d <= small, plus <0>."""
    ds = {d for d in range(1, int(n ** 0.5) + 1) if n % d == 0}
    ds |= {n // d for d in ds}
    ds |= set(range(1, small + 1))
    return [ZZ.ideal(0)] + [ZZ.ideal(d) for d in sorted(ds)]


def check_primary_preservation(n, small=12):
    """Ring-side and handle-side primary/prime/radical status agree for <n> in Z."""
    L = ZZ.ideal(n)
    h = correspondence_forward(L)
    W = integer_witnesses(n, small)
    p = max(1, n.bit_length())
    ring = {"primary": is_primary_ring_ideal(L), "prime": is_prime_ring_ideal(L),
            "radical": ring_radical(L) == L}
    semi = {"primary": handle_is_primary(h, W, p), "prime": handle_is_prime(h, W),
            "radical": handle_is_radical(h, W, p)}
    rep = Report("primary, prime and radical preservation", f"<{n}>")
    for k in ring:
        rep.check(ring[k] == semi[k], f"{k} status differs", ring=ring[k], handle=semi[k])
    rad = correspondence_forward(ring_radical(L))
    lit = handle_radical_members(h, W, p)
    rep.check(all(a in rad for a in lit) and rad.principal_generators()[0] in lit,
              "radical handle differs from the literal radical on witnesses")
    rep.details.update({"ring": ring, "handle": semi})
    return rep
