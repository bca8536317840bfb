"""Ring descriptors, PIDs, fields and finitely generated ideals.

A ring descriptor does arithmetic on plain Python payloads (``int``,
``Fraction``, coefficient tuples, ...).  Payloads are always stored in
canonical form, so ``==`` on payloads is ring equality.
"""

from fractions import Fraction
from math import gcd as _igcd

from ..errors import DomainError, UnsupportedError


class Ring:
    name = "ring"
    is_field = False
    is_domain = True
    is_pid = False
    is_finite = False

    def __repr__(self):
        return self.name

    # arithmetic -----------------------------------------------------------
    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def power(self, a, n):
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def sum(self, items):
        total = self.zero
        for x in items:
            total = self.add(total, x)
        return total

    def from_int(self, n):
        raise NotImplementedError

    def is_zero(self, a):
        return a == self.zero

    def is_unit(self, a):
        raise NotImplementedError

    def inverse(self, a):
        raise NotImplementedError

    def div(self, a, b):
        """Exact division; only defined when ``b`` is a unit (subclasses may widen)."""
        if not self.is_unit(b):
            raise ArithmeticError(f"{self.format(b)} is not a unit in {self}")
        return self.mul(a, self.inverse(b))

    def variable(self, name):
        raise DomainError(f"{self} has no variable {name!r}")

    def validate(self, a):
        """Raise DomainError unless ``a`` is a canonical payload of this ring."""

    def format(self, a):
        return str(a)

    def parse(self, text):
        from .parsing import parse_element
        return parse_element(self, text)

    # ideals ---------------------------------------------------------------
    def canonical_ideal(self, gens):
        raise NotImplementedError

    def ideal_contains(self, canonical, f):
        raise NotImplementedError

    def ideal(self, *gens):
        return Ideal(self, gens)

    def unit_ideal(self):
        return Ideal(self, (self.one,))

    def zero_ideal(self):
        return Ideal(self, (self.zero,))


class PID(Ring):
    """Principal ideal domain with a computable unit-normal form."""

    is_pid = True

    def normal(self, a):
        """Canonical associate of ``a``."""
        raise NotImplementedError

    def gcdex(self, a, b):
        """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` normal."""
        raise NotImplementedError

    def rem(self, a, d):
        """Canonical representative of ``a`` modulo the normal element ``d``."""
        raise NotImplementedError

    def quo(self, a, d):
        """Exact quotient ``a / d``; raises ArithmeticError if ``d`` does not divide ``a``."""
        raise NotImplementedError

    def gcd(self, a, b):
        return self.gcdex(a, b)[0]

    def divides(self, d, a):
        if self.is_zero(d):
            return self.is_zero(a)
        return self.is_zero(self.rem(a, self.normal(d)))

    def canonical_ideal(self, gens):
        g = self.zero
        for x in gens:
            g = self.gcd(g, x)
        return (self.normal(g),)

    def ideal_contains(self, canonical, f):
        return self.divides(canonical[0], f)


class Ideal:
    """A finitely generated ideal.

    Keeps the generators it was built from (``generators``) next to the
    canonical generating set (``canonical``); equality and hashing only look
    at the canonical form.
    """

    __slots__ = ("ring", "generators", "canonical")

    def __init__(self, ring, generators):
        gens = tuple(generators)
        if not gens:
            gens = (ring.zero,)
        for g in gens:
            ring.validate(g)
        self.ring = ring
        self.generators = gens
        self.canonical = ring.canonical_ideal(gens)

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.ring == other.ring
                and self.canonical == other.canonical)

    def __hash__(self):
        return hash((self.ring, self.canonical))

    def __repr__(self):
        return f"<{', '.join(self.ring.format(g) for g in self.canonical) or '0'}>"

    def _same_ring(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise DomainError(f"ideals over different rings: {self.ring} and "
                              f"{getattr(other, 'ring', other)}")

    def __contains__(self, f):
        self.ring.validate(f)
        return self.ring.ideal_contains(self.canonical, f)

    def __le__(self, other):
        self._same_ring(other)
        return all(other.ring.ideal_contains(other.canonical, g) for g in self.canonical)

    def __ge__(self, other):
        return other <= self

    def __lt__(self, other):
        return self <= other and self != other

    def __add__(self, other):
        self._same_ring(other)
        return Ideal(self.ring, self.canonical + other.canonical)

    def __mul__(self, other):
        self._same_ring(other)
        r = self.ring
        return Ideal(r, [r.mul(a, b) for a in self.canonical for b in other.canonical])

    def __pow__(self, n):
        result = self.ring.unit_ideal()
        for _ in range(n):
            result = result * self
        return result

    @property
    def is_zero(self):
        return all(self.ring.is_zero(g) for g in self.canonical)

    @property
    def is_unit(self):
        return self.ring.ideal_contains(self.canonical, self.ring.one)

    @property
    def generator(self):
        """The single canonical generator (principal ideal rings only)."""
        if len(self.canonical) != 1:
            raise UnsupportedError(f"{self} has no single canonical generator")
        return self.canonical[0]

    def to_dict(self):
        return {
            "ring": self.ring.name,
            "generators": [self.ring.format(g) for g in self.generators],
            "canonical": [self.ring.format(g) for g in self.canonical],
        }


def ideal_canonicalize(ring, gens):
    gens = list(gens)
    if not gens:
        raise DomainError("an ideal needs at least one generator")
    return Ideal(ring, gens)


def ideal_membership(f, ideal):
    return f in ideal


def ideal_sum(i, j):
    return i + j


def ideal_product(i, j):
    return i * j


# integers -----------------------------------------------------------------

class Integers(PID):
    name = "Z"

    def __eq__(self, other):
        return type(other) is Integers

    def __hash__(self):
        return hash("Z")

    zero = 0
    one = 1

    def validate(self, a):
        if type(a) is not int:
            raise DomainError(f"{a!r} is not an element of Z")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return int(n)

    def is_unit(self, a):
        return a in (1, -1)

    def inverse(self, a):
        if a not in (1, -1):
            raise ArithmeticError(f"{a} is not a unit in Z")
        return a

    def normal(self, a):
        return abs(a)

    def gcdex(self, a, b):
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        return old_r, old_s, old_t

    def gcd(self, a, b):
        return _igcd(a, b)

    def rem(self, a, d):
        return a % d if d else a

    def quo(self, a, d):
        if d == 0:
            if a == 0:
                return 0
            raise ArithmeticError("division by zero")
        q, r = divmod(a, d)
        if r:
            raise ArithmeticError(f"{d} does not divide {a}")
        return q

    def format(self, a):
        return str(a)

    def random_element(self, rng, bound=100):
        return rng.randint(-bound, bound)


# fields -------------------------------------------------------------------

class Field(PID):
    is_field = True

    def all_ideals(self):
        return [self.zero_ideal(), self.unit_ideal()]

    def is_unit(self, a):
        return not self.is_zero(a)

    def normal(self, a):
        return self.zero if self.is_zero(a) else self.one

    def gcdex(self, a, b):
        if not self.is_zero(a):
            return self.one, self.inverse(a), self.zero
        if not self.is_zero(b):
            return self.one, self.zero, self.inverse(b)
        return self.zero, self.zero, self.zero

    def rem(self, a, d):
        return a if self.is_zero(d) else self.zero

    def quo(self, a, d):
        if self.is_zero(d):
            if self.is_zero(a):
                return self.zero
            raise ArithmeticError("division by zero")
        return self.mul(a, self.inverse(d))


class Rationals(Field):
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def __eq__(self, other):
        return type(other) is Rationals

    def __hash__(self):
        return hash("Q")

    def validate(self, a):
        if type(a) is not Fraction:
            raise DomainError(f"{a!r} is not an element of Q")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return Fraction(n)

    def inverse(self, a):
        if a == 0:
            raise ArithmeticError("division by zero")
        return 1 / a

    def format(self, a):
        return str(a)

    def random_element(self, rng, bound=10):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField(Field):
    is_finite = True

    def __init__(self, p):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"

    def __eq__(self, other):
        return type(other) is PrimeField and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    zero = 0
    one = 1

    def validate(self, a):
        if type(a) is not int or not 0 <= a < self.p:
            raise DomainError(f"{a!r} is not an element of {self}")

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def from_int(self, n):
        return int(n) % self.p

    def inverse(self, a):
        if a % self.p == 0:
            raise ArithmeticError("division by zero")
        return pow(a, -1, self.p)

    def elements(self):
        return list(range(self.p))

    def random_element(self, rng, bound=None):
        return rng.randrange(self.p)


ZZ = Integers()
QQ = Rationals()
