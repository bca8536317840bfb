"""Localizations of a PID, stored as reduced fractions.

Elements are pairs ``(num, den)`` of base payloads with ``den`` normal,
``gcd(num, den) = 1`` and ``den`` in the multiplicative set.  Reduced form is
unique in a PID, so payload equality is ring equality.
"""

from ..errors import DomainError
from .base import PID


class Localization(PID):
    """Base class; subclasses say which normal elements are inverted."""

    def __init__(self, base):
        if not base.is_pid:
            raise DomainError(f"{base} is not a supported PID")
        self.base = base

    def __eq__(self, other):
        return type(other) is type(self) and other._key() == self._key()

    def __hash__(self):
        return hash((type(self).__name__,) + self._key())

    def _key(self):
        return (self.base,)

    # which factors become units --------------------------------------------
    def split(self, a):
        """Write a nonzero normal base element as ``(unit_part, rest)`` with unit_part in S."""
        raise NotImplementedError

    def in_set(self, s):
        b = self.base
        return not b.is_zero(s) and b.is_unit(self.split(b.normal(s))[1])

    # element plumbing -----------------------------------------------------
    def make(self, num, den=None):
        b = self.base
        if den is None:
            den = b.one
        if b.is_zero(den):
            raise DomainError("zero denominator")
        if b.is_zero(num):
            return (b.zero, b.one)
        g = b.gcd(num, den)
        num, den = b.quo(num, g), b.quo(den, g)
        nd = b.normal(den)
        if nd != den:
            u = b.quo(den, nd)
            num = b.mul(num, b.inverse(u))
            den = nd
        if not self.in_set(den):
            raise DomainError(f"{b.format(den)} is not invertible in {self}")
        return (num, den)

    def embed(self, a):
        return (a, self.base.one) if not self.base.is_zero(a) else (self.base.zero, self.base.one)

    @property
    def zero(self):
        return (self.base.zero, self.base.one)

    @property
    def one(self):
        return (self.base.one, self.base.one)

    def validate(self, a):
        if type(a) is not tuple or len(a) != 2:
            raise DomainError(f"{a!r} is not an element of {self}")
        self.base.validate(a[0])
        self.base.validate(a[1])
        if self.make(*a) != a:
            raise DomainError(f"{a!r} is not in reduced form in {self}")

    def add(self, a, b):
        r = self.base
        return self.make(r.add(r.mul(a[0], b[1]), r.mul(b[0], a[1])), r.mul(a[1], b[1]))

    def neg(self, a):
        return (self.base.neg(a[0]), a[1])

    def mul(self, a, b):
        r = self.base
        return self.make(r.mul(a[0], b[0]), r.mul(a[1], b[1]))

    def from_int(self, n):
        return self.embed(self.base.from_int(n))

    def variable(self, name):
        return self.embed(self.base.variable(name))

    def is_zero(self, a):
        return self.base.is_zero(a[0])

    def is_unit(self, a):
        return self.in_set(a[0])

    def inverse(self, a):
        if not self.is_unit(a):
            raise ArithmeticError(f"{self.format(a)} is not a unit in {self}")
        return self.make(a[1], a[0])

    def format(self, a):
        b = self.base
        num = b.format(a[0])
        if b.is_unit(a[1]) and a[1] == b.one:
            return num
        wrap = lambda s: s if s.lstrip("-").isalnum() else f"({s})"
        return f"{wrap(num)}/{wrap(b.format(a[1]))}"

    # PID structure ---------------------------------------------------------
    def normal(self, a):
        b = self.base
        if b.is_zero(a[0]):
            return self.zero
        return (self.split(b.normal(a[0]))[1], b.one)

    def gcdex(self, a, c):
        b = self.base
        g0, s, t = b.gcdex(a[0], c[0])
        if b.is_zero(g0):
            return self.zero, self.zero, self.zero
        unit, rest = self.split(g0)
        s = self.make(b.mul(s, a[1]), unit)
        t = self.make(b.mul(t, c[1]), unit)
        return (rest, b.one), s, t

    def rem(self, a, d):
        b = self.base
        if self.is_zero(d):
            return a
        dn = d[0]
        if b.is_unit(dn):
            return self.zero
        inv = ResidueInverse(b, dn)(a[1])
        return self.embed(b.rem(b.mul(a[0], inv), dn))

    def quo(self, a, d):
        if self.is_zero(d):
            if self.is_zero(a):
                return self.zero
            raise ArithmeticError("division by zero")
        b = self.base
        try:
            return self.make(b.mul(a[0], d[1]), b.mul(a[1], d[0]))
        except DomainError:
            raise ArithmeticError(f"{self.format(d)} does not divide {self.format(a)}") from None

    def canonical_ideal(self, gens):
        g = self.zero
        for x in gens:
            g = self.gcd(g, x)
        return (self.normal(g),)

    def random_element(self, rng, **kw):
        b = self.base
        num = b.random_element(rng, **kw)
        den = self.split(b.normal(b.random_element(rng, **kw)) or b.one)[0] if rng.random() < 0.5 else b.one
        if b.is_zero(den):
            den = b.one
        return self.make(num, den)


class ResidueInverse:
    """Inverse modulo a normal element of a PID."""

    def __init__(self, base, modulus):
        self.base = base
        self.modulus = modulus

    def __call__(self, s):
        b = self.base
        g, x, _ = b.gcdex(s, self.modulus)
        if not b.is_unit(g):
            raise ArithmeticError("element not invertible modulo the given modulus")
        return b.rem(b.mul(x, b.inverse(g)), self.modulus)


class LocalizedAway(Localization):
    """R_f = R[1/f]: every factor sharing a prime with ``f`` becomes a unit."""

    def __init__(self, base, f):
        super().__init__(base)
        f = base.normal(f)
        if base.is_zero(f):
            raise DomainError("cannot invert zero")
        self.f = f
        self.name = f"{base.name}_({base.format(f)})"

    def _key(self):
        return (self.base, self.f)

    def split(self, a):
        b = self.base
        unit, rest = b.one, a
        while True:
            g = b.gcd(rest, self.f)
            if b.is_unit(g):
                return unit, rest
            rest = b.quo(rest, g)
            unit = b.mul(unit, g)


class LocalizedAtPrime(Localization):
    """R_p for a prime element ``p`` (``p = 0`` gives the fraction field)."""

    def __init__(self, base, p):
        super().__init__(base)
        p = base.normal(p)
        self.p = p
        self.name = f"{base.name}_<{base.format(p)}>"
        if base.is_zero(p):
            self.is_field = True

    def _key(self):
        return (self.base, self.p)

    def split(self, a):
        b = self.base
        if b.is_zero(self.p):
            return a, b.one
        rest = b.one
        while b.divides(self.p, a):
            a = b.quo(a, self.p)
            rest = b.mul(rest, self.p)
        return a, rest

    def valuation(self, a):
        """Order of ``p`` in a nonzero element."""
        b = self.base
        n = 0
        num = a[0]
        if b.is_zero(num):
            raise DomainError("valuation of zero")
        while b.divides(self.p, num):
            num = b.quo(num, self.p)
            n += 1
        return n


def FractionField(base):
    return LocalizedAtPrime(base, base.zero)


def Laurent(field, var="x"):
    """K[x, 1/x]."""
    from .univariate import UniPoly
    r = UniPoly(field, var)
    return LocalizedAway(r, r.x())
