"""Univariate polynomial rings K[x] and residue rings R/(g) of a PID."""

from itertools import product

from ..errors import DomainError
from .base import PID, Ring


class UniPoly(PID):
    """K[x]; payloads are coefficient tuples, lowest degree first, no trailing zeros."""

    def __init__(self, field, var="x"):
        if not field.is_field:
            raise DomainError(f"coefficient ring {field} is not a field")
        self.field = field
        self.var = var
        self.name = f"{field.name}[{var}]"
        self.is_finite = False

    def __eq__(self, other):
        return type(other) is UniPoly and other.field == self.field and other.var == self.var

    def __hash__(self):
        return hash(("UniPoly", self.field, self.var))

    zero = ()

    @property
    def one(self):
        return (self.field.one,)

    def _trim(self, coeffs):
        k = self.field
        coeffs = list(coeffs)
        while coeffs and k.is_zero(coeffs[-1]):
            coeffs.pop()
        return tuple(coeffs)

    def make(self, coeffs):
        k = self.field
        return self._trim(k.from_int(c) if isinstance(c, int) else c for c in coeffs)

    def validate(self, a):
        if type(a) is not tuple or (a and self.field.is_zero(a[-1])):
            raise DomainError(f"{a!r} is not a canonical element of {self}")
        for c in a:
            self.field.validate(c)

    def degree(self, a):
        return len(a) - 1

    def lc(self, a):
        return a[-1] if a else self.field.zero

    def constant(self, c):
        return self._trim((c,))

    def x(self):
        return (self.field.zero, self.field.one)

    def variable(self, name):
        if name != self.var:
            raise DomainError(f"{self} has no variable {name!r}")
        return self.x()

    def add(self, a, b):
        k = self.field
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = k.add(out[i], c)
        return self._trim(out)

    def neg(self, a):
        return tuple(self.field.neg(c) for c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        k = self.field
        out = [k.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if k.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = k.add(out[i + j], k.mul(x, y))
        return self._trim(out)

    def scale(self, c, a):
        return self._trim(self.field.mul(c, x) for x in a)

    def from_int(self, n):
        return self.constant(self.field.from_int(n))

    def is_unit(self, a):
        return len(a) == 1

    def inverse(self, a):
        if len(a) != 1:
            raise ArithmeticError(f"{self.format(a)} is not a unit in {self}")
        return (self.field.inverse(a[0]),)

    def divmod(self, a, b):
        if not b:
            raise ArithmeticError("polynomial division by zero")
        k = self.field
        inv = k.inverse(b[-1])
        rem = list(a)
        db = len(b) - 1
        quo = [k.zero] * max(len(a) - db, 0)
        while len(rem) - 1 >= db and rem:
            shift = len(rem) - 1 - db
            c = k.mul(rem[-1], inv)
            quo[shift] = c
            for i, y in enumerate(b):
                rem[shift + i] = k.sub(rem[shift + i], k.mul(c, y))
            rem = list(self._trim(rem))
        return self._trim(quo), self._trim(rem)

    def normal(self, a):
        if not a:
            return a
        return self.scale(self.field.inverse(a[-1]), a)

    def gcdex(self, a, b):
        old_r, r = a, b
        old_s, s = self.one, self.zero
        old_t, t = self.zero, self.one
        while r:
            q, rem = self.divmod(old_r, r)
            old_r, r = r, rem
            old_s, s = s, self.sub(old_s, self.mul(q, s))
            old_t, t = t, self.sub(old_t, self.mul(q, t))
        if old_r:
            inv = self.field.inverse(old_r[-1])
            old_r, old_s, old_t = (self.scale(inv, old_r), self.scale(inv, old_s),
                                   self.scale(inv, old_t))
        return old_r, old_s, old_t

    def gcd(self, a, b):
        while b:
            a, b = b, self.divmod(a, b)[1]
        return self.normal(a)

    def rem(self, a, d):
        return self.divmod(a, d)[1] if d else a

    def quo(self, a, d):
        if not d:
            if not a:
                return ()
            raise ArithmeticError("division by zero")
        q, r = self.divmod(a, d)
        if r:
            raise ArithmeticError(f"{self.format(d)} does not divide {self.format(a)}")
        return q

    def evaluate(self, a, point):
        k = self.field
        acc = k.zero
        for c in reversed(a):
            acc = k.add(k.mul(acc, point), c)
        return acc

    def compose(self, a, b, target=None):
        """Substitute the polynomial ``b`` (an element of ``target``) for the variable."""
        target = target or self
        acc = target.zero
        for c in reversed(a):
            acc = target.add(target.mul(acc, b), target.from_coefficient(c))
        return acc

    def from_coefficient(self, c):
        return self.constant(c)

    def derivative(self, a):
        k = self.field
        return self._trim(k.mul(k.from_int(i), c) for i, c in enumerate(a) if i)

    def format(self, a):
        if not a:
            return "0"
        terms = []
        k = self.field
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if k.is_zero(c):
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            cs = k.format(c)
            if not mono:
                term = cs
            elif c == k.one:
                term = mono
            elif k.neg(c) == k.one and not k.is_finite:
                term = "-" + mono
            else:
                term = f"{cs}*{mono}" if "/" not in cs and "-" not in cs[1:] else f"({cs})*{mono}"
            terms.append(term)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def monic_polynomials(self, degree):
        """All monic polynomials of the given degree (finite coefficient fields only)."""
        k = self.field
        for tail in product(k.elements(), repeat=degree):
            yield tuple(tail) + (k.one,)

    def is_irreducible(self, a):
        """Irreducibility test: brute-force over finite fields, rational roots over Q (degree <= 3)."""
        d = self.degree(a)
        if d < 1:
            return False
        if d == 1:
            return True
        k = self.field
        if k.is_finite:
            for e in range(1, d // 2 + 1):
                for m in self.monic_polynomials(e):
                    if not self.divmod(a, m)[1]:
                        return False
            return True
        if d <= 3:
            return not _has_rational_root(self.normal(a))
        from ..errors import UnsupportedError
        raise UnsupportedError("irreducibility over Q is only decided up to degree 3")

    def random_element(self, rng, degree=3, bound=5):
        k = self.field
        d = rng.randint(0, degree)
        if k.is_finite:
            return self._trim(k.random_element(rng) for _ in range(d + 1))
        return self._trim(k.from_int(rng.randint(-bound, bound)) for _ in range(d + 1))


def _has_rational_root(monic):
    from fractions import Fraction
    from math import lcm
    den = 1
    for c in monic:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in monic]
    if ints[0] == 0:
        return True
    a0, an = abs(ints[0]), abs(ints[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                acc = Fraction(0)
                for c in reversed(monic):
                    acc = acc * cand + c
                if acc == 0:
                    return True
    return False


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


class ResidueRing(Ring):
    """R/(g) for a PID R and a normal element g; g a unit gives the zero ring."""

    is_domain = False

    def __init__(self, base, modulus):
        if not base.is_pid:
            raise DomainError(f"{base} is not a supported PID")
        modulus = base.normal(modulus)
        if base.is_zero(modulus):
            raise DomainError("modulus must be nonzero")
        self.base = base
        self.modulus = modulus
        self.name = f"{base.name}/({base.format(modulus)})"
        self.is_zero_ring = base.is_unit(modulus)
        self.is_finite = base.is_finite or getattr(base, "field", None) is not None and base.field.is_finite \
            or base.__class__.__name__ == "Integers"

    def __eq__(self, other):
        return type(other) is ResidueRing and other.base == self.base and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Residue", self.base, self.modulus))

    def reduce(self, a):
        return self.base.rem(a, self.modulus)

    @property
    def zero(self):
        return self.base.zero

    @property
    def one(self):
        return self.reduce(self.base.one)

    def validate(self, a):
        self.base.validate(a)
        if self.reduce(a) != a:
            raise DomainError(f"{a!r} is not reduced modulo {self.base.format(self.modulus)}")

    def add(self, a, b):
        return self.reduce(self.base.add(a, b))

    def neg(self, a):
        return self.reduce(self.base.neg(a))

    def mul(self, a, b):
        return self.reduce(self.base.mul(a, b))

    def from_int(self, n):
        return self.reduce(self.base.from_int(n))

    def variable(self, name):
        return self.reduce(self.base.variable(name))

    def lift(self, a):
        return a

    def is_unit(self, a):
        return self.base.is_unit(self.base.gcd(a, self.modulus))

    def inverse(self, a):
        g, s, _ = self.base.gcdex(a, self.modulus)
        if not self.base.is_unit(g):
            raise ArithmeticError(f"{self.format(a)} is not a unit in {self}")
        return self.reduce(self.base.mul(s, self.base.inverse(g)))

    def format(self, a):
        return self.base.format(a)

    def canonical_ideal(self, gens):
        b = self.base
        g = self.modulus
        for x in gens:
            g = b.gcd(g, x)
        return (self.reduce(g),)

    def ideal_contains(self, canonical, f):
        d = canonical[0]
        if self.base.is_zero(d):
            d = self.modulus
        return self.base.divides(d, f)

    def generator_divisor(self, ideal):
        """The normal divisor of the modulus generating ``ideal`` (modulus for the zero ideal)."""
        d = ideal.canonical[0]
        return self.modulus if self.base.is_zero(d) else d

    def elements(self):
        b = self.base
        if b.__class__.__name__ == "Integers":
            return list(range(self.modulus))
        if isinstance(b, UniPoly) and b.field.is_finite:
            k = b.field
            deg = b.degree(self.modulus)
            return [b._trim(c) for c in product(k.elements(), repeat=deg)]
        raise DomainError(f"{self} is not finite")

    def all_ideals(self):
        """Every ideal, one per normal divisor of the modulus."""
        return [self.ideal(self.reduce(d)) for d in divisors(self.base, self.modulus)]

    def random_element(self, rng, **kw):
        return self.reduce(self.base.random_element(rng, **kw))


def divisors(ring, a):
    """Normal divisors of a nonzero element of Z or of F_p[x]."""
    if ring.__class__.__name__ == "Integers":
        n = abs(a)
        return [d for d in range(1, n + 1) if n % d == 0]
    if isinstance(ring, UniPoly) and ring.field.is_finite:
        out = [ring.one]
        for deg in range(1, ring.degree(a) + 1):
            out.extend(m for m in ring.monic_polynomials(deg) if not ring.divmod(a, m)[1])
        return out
    raise DomainError(f"divisor enumeration unsupported over {ring}")


def IntegersModN(n):
    from .base import ZZ
    if n < 1:
        raise DomainError("n must be positive")
    return ResidueRing(ZZ, n)
