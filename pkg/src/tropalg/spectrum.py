"""Truncated prime spectra Spec_k(fgId(R)), localization at primes, radicals.

Spectra of Z or K[x] are infinite, so every spectrum here carries the bound
it was built with.  Closed sets are computed on the truncation only; checks
that could be affected by the cut-off say so in their report details.
"""

from fractions import Fraction

from .errors import DomainError, UnsupportedError
from .ideals import enumerate_k_ideals, is_prime_ideal
from .report import Report
from .rings.algorithms import factor, ring_radical, spec_truncated
from .rings.base import Field, Integers, ZZ
from .rings.localization import LocalizedAtPrime
from .rings.multivariate import MultiPoly
from .rings.univariate import ResidueRing, UniPoly
from .semiring import FgId, FiniteSemiring, RationalGcd, localize_semiring
from .trop import KIdealHandle, check_seminorm, correspondence_forward, ValuationData


class SpectrumPoint:
    """A prime ideal of R together with the prime k-ideal of fgId(R) it corresponds to."""

    __slots__ = ("prime", "handle")

    def __init__(self, prime):
        self.prime = prime
        self.handle = correspondence_forward(prime)

    def __eq__(self, other):
        return isinstance(other, SpectrumPoint) and other.prime == self.prime

    def __hash__(self):
        return hash(self.prime)

    def __repr__(self):
        return repr(self.prime)

    def to_dict(self):
        return {"ring": repr(self.prime), "handle": self.handle.to_dict()}


class TruncatedSpectrum:
    def __init__(self, ring, bound, points):
        self.ring = ring
        self.bound = bound
        self.points = tuple(points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def vk(self, h):
        return vk(h, self)

    def dk(self, f):
        return dk(f, self)

    def to_dict(self):
        return {"ring": self.ring.name, "bound": self.bound,
                "points": [p.to_dict() for p in self.points]}


def speck_truncated(ring, bound):
    if isinstance(ring, MultiPoly):
        raise UnsupportedError("truncated spectra need Z, K[x], a residue ring or a localization")
    return TruncatedSpectrum(ring, bound, [SpectrumPoint(p) for p in spec_truncated(ring, bound)])


def _as_handle(h):
    return h if isinstance(h, KIdealHandle) else correspondence_forward(h)


def vk(h, spec):
    """V_k(h): points whose prime k-ideal contains the handle."""
    h = _as_handle(h)
    return frozenset(p for p in spec.points if h <= p.handle)


def dk(f, spec):
    """D_k(f) for f in fgId(R): points whose prime k-ideal does not contain f."""
    return frozenset(p for p in spec.points if f not in p.handle)


def v_ring(ideal, spec):
    """Ring-side V(I), computed by ideal containment."""
    return frozenset(p for p in spec.points if ideal <= p.prime)


def d_ring(f, spec):
    return frozenset(p for p in spec.points if f not in p.prime)


def check_topology_laws(spec, pairs, families):
    """V_k(I) u V_k(J) = V_k(I x J) and the intersection of V_k(I_l) = V_k(sum I_l)."""
    rep = Report("closed sets of Spec_k", f"{spec.ring.name} (bound {spec.bound})")
    for I, J in pairs:
        hI, hJ = _as_handle(I), _as_handle(J)
        left = vk(hI, spec) | vk(hJ, spec)
        right = vk(KIdealHandle(hI.obj * hJ.obj), spec)
        rep.check(left == right, "union law fails", I=repr(hI), J=repr(hJ))
    for fam in families:
        hs = [_as_handle(I) for I in fam]
        inter = frozenset(spec.points)
        total = spec.ring.zero_ideal()
        for h in hs:
            inter &= vk(h, spec)
            total = total + h.obj
        rep.check(inter == vk(KIdealHandle(total), spec), "intersection law fails",
                  family=[repr(h) for h in hs])
    rep.check(vk(KIdealHandle(spec.ring.zero_ideal()), spec) == frozenset(spec.points),
              "V_k(0) is not everything")
    rep.check(not vk(KIdealHandle(spec.ring.unit_ideal()), spec), "V_k(1) is not empty")
    rep.details.update({"points": len(spec), "pairs": len(pairs), "families": len(families)})
    return rep


def check_homeomorphism(spec, ideals, elements):
    """Image of V(I) is V_k(h(I)); D(f) matches D_k(u(f))."""
    rep = Report("Spec(R) and Spec_k(fgId(R))", f"{spec.ring.name} (bound {spec.bound})")
    R = spec.ring
    for I in ideals:
        rep.check(v_ring(I, spec) == vk(correspondence_forward(I), spec), "V(I) differs",
                  I=repr(I))
    for f in elements:
        rep.check(d_ring(f, spec) == dk(R.ideal(f), spec), "D(f) differs", f=R.format(f))
    return rep


# N^gcd picture ------------------------------------------------------------------

class NatPrime:
    """<0> = {0} or <p>^dagger = {m : p | m} as a set of natural numbers."""

    def __init__(self, p):
        self.p = p

    def __contains__(self, m):
        return m == 0 if self.p == 0 else m % self.p == 0

    def __repr__(self):
        return "<0>" if self.p == 0 else f"<{self.p}>+"


def speck_natgcd(bound):
    """Points of Spec_k(N^gcd) up to ``bound``, transported from the Z-spectrum."""
    spec = speck_truncated(ZZ, bound)
    return [NatPrime(pt.prime.generator) for pt in spec.points]


def nat_membership(point, m):
    """m in the point, read through the correspondence: <m> lies in the handle."""
    return ZZ.ideal(m) in correspondence_forward(ZZ.ideal(point.p))


# localization at a prime ---------------------------------------------------

class LocalizedData:
    """R_p, T_p = fgId(R)_p, mu: R_p -> T_p and zeta: T_p -> fgId(R_p)."""

    def __init__(self, point):
        self.point = point
        R = point.prime.ring
        self.ring = R
        g = point.prime.generator
        if isinstance(R, Field):
            self.ring_local = R
        else:
            self.ring_local = LocalizedAtPrime(R, g)
        T = FgId(R)
        self.semiring = T
        if R.is_zero(g):
            self.semiring_local = localize_semiring(T, "nonzero")
        else:
            self.semiring_local = localize_semiring(T, ("prime", g))

    def in_w(self, a):
        """a in W = R minus p."""
        return a not in self.point.prime

    def mu(self, x):
        """a/b -> <a>/<b>."""
        R, Tp = self.ring, self.semiring_local
        if self.ring_local is R:
            num, den = x, R.one
        else:
            num, den = x
        if R.is_zero(den):
            raise DomainError("zero denominator")
        return Tp.make(R.ideal(num), R.ideal(den))

    def zeta(self, t):
        """t/u -> <iota(t)> * <iota(u)>^-1; the second factor is the unit ideal."""
        Rp = self.ring_local
        num, den = t
        if not self.in_w(den.generator):
            raise DomainError(f"{den!r} is not in the multiplicative set")
        return Rp.ideal(self._embed(num.generator))

    def _embed(self, a):
        Rp = self.ring_local
        return a if Rp is self.ring else Rp.embed(a)

    def u_local(self, x):
        return self.ring_local.ideal(x)

    def sample_local(self, rng, n):
        Rp = self.ring_local
        return [Rp.random_element(rng) for _ in range(n)]

    def mu_valuation(self):
        Tp = self.semiring_local
        return ValuationData(self.ring_local, Tp, self.mu, "mu")

    def primes_of_localization(self, spec):
        """Primes of R_p from the truncation (those inside p), pushed forward."""
        Rp = self.ring_local
        inside = [q for q in spec.points if q.prime <= self.point.prime]
        return {q: Rp.ideal(self._embed(q.prime.generator)) for q in inside}


def localize_at_prime(point):
    return LocalizedData(point)


def check_localization(data, spec, rng, samples=30):
    """mu is a seminorm, zeta . mu = u on R_p, equal fractions have equal zeta,
    and primes of R_p correspond to the truncation primes inside p."""
    rep = Report("localization at a prime", repr(data.point))
    xs = data.sample_local(rng, samples)
    rep.merge(check_seminorm(data.mu_valuation(), xs), prefix="mu")
    Tp = data.semiring_local
    for x in xs:
        left = data.zeta(data.mu(x))
        rep.check(left == data.u_local(x), "zeta . mu != u", x=data.ring_local.format(x))
    R = data.ring
    for _ in range(samples):
        a, c = R.random_element(rng), R.random_element(rng)
        if not data.in_w(c):
            continue
        t = (R.ideal(a), R.ideal(R.one))
        t2 = (R.ideal(R.mul(a, c)), R.ideal(c))
        rep.check(Tp.make(*t) == Tp.make(*t2), "fractions not reduced consistently")
        rep.check(data.zeta(Tp.make(*t)) == data.zeta(Tp.make(*t2)), "zeta not well defined",
                  a=R.format(a), c=R.format(c))
    pushed = data.primes_of_localization(spec)
    local_primes = set(spec_truncated(data.ring_local, spec.bound)) \
        if data.ring_local is not R else {R.zero_ideal()}
    rep.check(set(pushed.values()) == local_primes, "prime bijection fails",
              pushed=sorted(map(repr, pushed.values())), local=sorted(map(repr, local_primes)))
    rep.check(len(set(pushed.values())) == len(pushed), "prime map not injective")
    return rep


def zeta(point, t):
    return localize_at_prime(point).zeta(t)


# N^gcd localizations read as rationals ------------------------------------------

def natgcd_localization(p):
    """N^gcd localized at the complement of <p>^dagger (all of N minus 0 for p = 0)."""
    return RationalGcd() if p == 0 else RationalGcd(avoid=p)


def zeta_natgcd(p, q):
    """zeta_<p>: N^gcd_p -> fgId(Z_<p>), a/b -> <a>."""
    Rp = LocalizedAtPrime(ZZ, p)
    q = Fraction(q)
    if p and q.denominator % p == 0:
        raise DomainError(f"{q} is not in the localization at <{p}>")
    return Rp.ideal(Rp.embed(q.numerator))


def zeta_kernel_probe(p, samples):
    """Fractions x != 1 with zeta(x) = zeta(1): witnesses for a nontrivial kernel."""
    rep = Report("kernel of zeta", f"<{p}>")
    one = zeta_natgcd(p, 1)
    kernel = sorted({Fraction(q) for q in samples if Fraction(q) != 1 and zeta_natgcd(p, q) == one})
    images = {zeta_natgcd(p, q) for q in samples} | {zeta_natgcd(p, 0)}
    target = LocalizedAtPrime(ZZ, p)
    full = {target.zero_ideal(), target.unit_ideal()}
    rep.details.update({"kernel_witnesses": [str(q) for q in kernel],
                        "image": sorted(map(repr, images))})
    rep.check(bool(kernel), "no kernel witness among the samples")
    if p == 0:
        rep.check(images == full, "zeta_<0> is not onto the Boolean semiring",
                  image=sorted(map(repr, images)))
    return rep


# residue semifields ----------------------------------------------------------------

class ResidueSemifield:
    """kappa(p) = T_p modulo the congruence generated by the localized prime.

    Normal form of t/u: 0 when t lies in p, otherwise (t + p)/(u + p) in T_p,
    using that x ~ x + a for every a in the prime.
    """

    def __init__(self, point):
        self.point = point
        self.local = localize_at_prime(point)
        self.T = self.local.semiring
        self.Tp = self.local.semiring_local
        self.name = f"kappa({point!r})"

    @property
    def prime(self):
        return self.point.prime

    def nf(self, x):
        t, u = x
        P = self.prime
        if t in self.point.handle:
            return self.Tp.zero
        return self.Tp.make(t + P, u + P)

    @property
    def zero(self):
        return self.nf(self.Tp.zero)

    @property
    def one(self):
        return self.nf(self.Tp.one)

    def add(self, x, y):
        return self.nf(self.Tp.add(x, y))

    def mul(self, x, y):
        return self.nf(self.Tp.mul(x, y))

    def inverse(self, x):
        return self.nf(self.Tp.inverse(x))

    def format(self, x):
        return self.Tp.format(x)

    def sample(self, rng, n):
        return [self.nf(x) for x in self.Tp.sample(rng, n)]


def residue_semifield(point):
    return ResidueSemifield(point)


def check_residue_semifield(k, rng, samples=40):
    rep = Report("residue semifield", k.name)
    rep.check(k.one != k.zero, "1 = 0 in the residue semifield")
    xs = k.sample(rng, samples)
    values = set()
    for x in xs:
        values.add(x)
        if x == k.zero:
            continue
        y = k.inverse(x)
        rep.check(k.mul(x, y) == k.one, "element without inverse", x=k.format(x))
    rep.details["distinct_sampled_values"] = len(values)
    return rep


# radicals ----------------------------------------------------------------

def radical_handle(h):
    if isinstance(h.ring, MultiPoly):
        raise UnsupportedError("radicals are computed over PIDs and residue rings only")
    return correspondence_forward(ring_radical(h.obj))


def is_radical(h):
    return radical_handle(h) == h


def _intersection(ring, ideals):
    """Intersection of principal ideals in a PID: the lcm of the generators."""
    g = ring.one
    for I in ideals:
        x = I.generator
        if ring.is_zero(x):
            return ring.zero_ideal()
        g = ring.quo(ring.mul(g, x), ring.gcd(g, x))
    return ring.ideal(g)


def radical_cross_check(h, spec):
    """sqrt(I) against the intersection of the truncated V_k(I)."""
    rep = Report("radical as intersection of primes", repr(h))
    R = spec.ring
    rad = radical_handle(h)
    pts = vk(h, spec)
    g = h.obj.generator
    complete = True
    if not R.is_zero(g) and not h.obj.is_unit:
        needed = set(factor(R, R.normal(g)))
        have = {p.prime.generator for p in spec.points}
        complete = needed <= have
    if h.obj.is_unit:
        rep.details["note"] = "I is the whole ring; no prime contains it"
    elif h.obj.is_zero:
        rep.details["note"] = "radical of <0> is <0> in a domain; the truncation cannot see this"
        rep.check(rad.obj == h.obj, "radical of zero ideal is not zero")
    elif complete:
        inter = _intersection(R, [p.prime for p in pts if not p.prime.is_zero])
        rep.check(correspondence_forward(inter) == rad, "intersection differs from radical",
                  intersection=repr(inter), radical=repr(rad))
    rep.details.update({"truncation_sufficient": complete,
                        "primes": sorted(map(repr, pts)), "radical": repr(rad)})
    if not complete:
        rep.details["note"] = "inconclusive beyond bound"
    return rep


# quotient diagram -----------------------------------------------------------

def _quotient_by_handle(R, L):
    """T/I for I = h(L) in T = fgId(R), with R/L finite: classes beta + L."""
    Q = ResidueRing(R, L.generator)
    reps = sorted({R.ideal(Q.generator_divisor(J)) + L for J in Q.all_ideals()}, key=repr)

    def cls(J):
        return J + L

    return FiniteSemiring.from_operations(
        reps, lambda a, b: cls(a + b), lambda a, b: cls(a * b), cls(R.zero_ideal()),
        cls(R.unit_ideal()), label=repr, name=f"fgId({R.name})/h({L!r})")


def _closed_family(points, closed_sets):
    return frozenset(frozenset(c) & frozenset(points) for c in closed_sets)


def quotient_diagram_check(R, L):
    """The bottom row Spec_k(fgId(R/L)) -> Spec(R/L) -> V(L) -> V_k(h(L)) -> Spec_k(T/h(L)).

    Each map is a bijection on points and carries closed sets onto closed
    sets.  Spaces are indexed by the primes of R containing L.
    """
    rep = Report("quotient diagram", f"{R.name}/{L!r}")
    if L.is_zero:
        raise DomainError("the quotient diagram check needs a nonzero ideal")
    if not isinstance(R, (Integers, UniPoly)):
        raise UnsupportedError("quotient diagrams are built over Z or K[x]")
    g = L.generator
    Q = ResidueRing(R, g)
    # (B) Spec(R/L) and its closed sets V(J)
    B = spec_truncated(Q, 0)
    B_closed = [frozenset(P for P in B if J <= P) for J in Q.all_ideals()]
    # (A) Spec_k(fgId(R/L)) by literal enumeration on the tabulated semiring
    FQ = FgId(Q).to_finite()
    kA = enumerate_k_ideals(FQ)
    A = [K for K in kA if is_prime_ideal(FQ, K)]
    A_closed = [frozenset(P for P in A if K <= P) for K in kA]

    def a_to_b(K):
        members = [FQ.payloads[i] for i in K]
        total = Q.zero_ideal()
        for m in members:
            total = total + m
        return total

    # (C) V(L) in Spec(R): primes dividing the generator
    if R.is_zero(g) or R.is_unit(g):
        primes_R = []
    else:
        primes_R = [R.ideal(p) for p in factor(R, R.normal(g))]
    divisors_L = [R.ideal(Q.generator_divisor(J)) for J in Q.all_ideals()]
    C = primes_R
    C_closed = [frozenset(P for P in C if J <= P) for J in divisors_L]

    def b_to_c(P):
        return R.ideal(Q.generator_divisor(P), g)

    # (D) V_k(h(L)) among handles
    D = [correspondence_forward(P) for P in C]
    hL = correspondence_forward(L)
    rep.check(all(hL <= d for d in D), "V_k(h(L)) point does not contain h(L)")
    D_closed = [frozenset(d for d in D if correspondence_forward(J) <= d) for J in divisors_L]

    # (E) Spec_k(T/h(L)) by literal enumeration
    TQ = _quotient_by_handle(R, L)
    kE = enumerate_k_ideals(TQ)
    E = [K for K in kE if is_prime_ideal(TQ, K)]
    E_closed = [frozenset(P for P in E if K <= P) for K in kE]

    def d_to_e(d):
        return frozenset(i for i, J in enumerate(TQ.payloads) if J in d)

    spaces = {"Spec_k(fgId(R/I))": (A, A_closed), "Spec(R/I)": (B, B_closed),
              "V(I)": (C, C_closed), "V_k(I)": (D, D_closed), "Spec_k(T/I)": (E, E_closed)}
    maps = [("Spec_k(fgId(R/I))", "Spec(R/I)", a_to_b), ("Spec(R/I)", "V(I)", b_to_c),
            ("V(I)", "V_k(I)", correspondence_forward), ("V_k(I)", "Spec_k(T/I)", d_to_e)]
    for src, dst, f in maps:
        pts, closed = spaces[src]
        tpts, tclosed = spaces[dst]
        img = [f(p) for p in pts]
        rep.check(len(set(img)) == len(pts) and set(img) == set(tpts), "not a bijection",
                  source=src, target=dst)
        moved = _closed_family(tpts, [[f(p) for p in c] for c in closed])
        rep.check(moved == _closed_family(tpts, tclosed), "closed sets differ",
                  source=src, target=dst)
    fmt = {"Spec_k(fgId(R/I))": FQ.subset_labels, "Spec_k(T/I)": TQ.subset_labels}
    rep.details.update({name: sorted(str(fmt[name](p)) if name in fmt else repr(p) for p in pts)
                        for name, (pts, _) in spaces.items()})
    rep.details["points"] = len(C)
    return rep
