"""Semirings: finite tables, the Boolean semiring, N^gcd, fgId(R) and fractions.

Every semiring here is a descriptor acting on plain payloads, in the same way
as the ring backends.  ``SemiringElement`` wraps a payload together with its
descriptor when operator syntax or mixed-structure checks are wanted.
"""

import json
from fractions import Fraction
from itertools import product
from math import gcd
from pathlib import Path

from .errors import DomainError, StructuralError
from .report import Report


class Semiring:
    name = "semiring"
    is_finite = False

    def __repr__(self):
        return self.name

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sum(self, items):
        total = self.zero
        for x in items:
            total = self.add(total, x)
        return total

    def power(self, a, n):
        out = self.one
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def leq(self, a, b):
        """Natural order of an idempotent semiring: a <= b iff a + b = b."""
        return self.add(a, b) == b

    def validate(self, a):
        pass

    def format(self, a):
        return str(a)

    def element(self, a):
        self.validate(a)
        return SemiringElement(self, a)

    def sample(self, rng, n):
        """``n`` pseudo-random payloads (used for sampled property checks)."""
        raise NotImplementedError


class SemiringElement:
    __slots__ = ("semiring", "value")

    def __init__(self, semiring, value):
        self.semiring = semiring
        self.value = value

    def _check(self, other):
        if not isinstance(other, SemiringElement) or other.semiring != self.semiring:
            raise DomainError(f"elements of different semirings: {self.semiring} and "
                              f"{getattr(other, 'semiring', type(other).__name__)}")

    def __add__(self, other):
        self._check(other)
        return SemiringElement(self.semiring, self.semiring.add(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return SemiringElement(self.semiring, self.semiring.mul(self.value, other.value))

    def __eq__(self, other):
        return (isinstance(other, SemiringElement) and other.semiring == self.semiring
                and other.value == self.value)

    def __hash__(self):
        return hash((self.semiring, self.value))

    def __le__(self, other):
        return natural_leq(self, other)

    def __repr__(self):
        return self.semiring.format(self.value)


def natural_leq(a, b):
    a._check(b)
    return a.semiring.leq(a.value, b.value)


# finite tables ------------------------------------------------------------

class FiniteSemiring(Semiring):
    """A semiring given by explicit tables over a labelled carrier.

    Payloads are carrier indices.  The constructor only checks the tables are
    well formed; ``check_semiring_axioms`` decides whether they define a
    semiring.
    """

    is_finite = True

    def __init__(self, carrier, add, mul, zero, one, name="finite"):
        carrier = [str(c) for c in carrier]
        if not carrier:
            raise StructuralError("carrier must be nonempty")
        if len(set(carrier)) != len(carrier):
            raise StructuralError("carrier labels must be distinct")
        self.carrier = tuple(carrier)
        self.index = {c: i for i, c in enumerate(carrier)}
        self.add_table = self._table(add, "add")
        self.mul_table = self._table(mul, "mul")
        self.zero = self._label_index(zero, "zero")
        self.one = self._label_index(one, "one")
        self.name = name

    def _label_index(self, x, what):
        if str(x) not in self.index:
            raise StructuralError(f"{what}: unknown label {x!r}")
        return self.index[str(x)]

    def _table(self, rows, what):
        n = len(self.carrier)
        if not isinstance(rows, (list, tuple)) or len(rows) != n:
            raise StructuralError(f"{what} table must have {n} rows")
        out = []
        for r in rows:
            if not isinstance(r, (list, tuple)) or len(r) != n:
                raise StructuralError(f"{what} table is ragged")
            out.append(tuple(self._label_index(x, what) for x in r))
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, FiniteSemiring) and other.carrier == self.carrier
                and other.add_table == self.add_table and other.mul_table == self.mul_table
                and other.zero == self.zero and other.one == self.one)

    def __hash__(self):
        return hash((self.carrier, self.add_table, self.mul_table))

    def __len__(self):
        return len(self.carrier)

    def elements(self):
        return range(len(self.carrier))

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def validate(self, a):
        if not (isinstance(a, int) and 0 <= a < len(self.carrier)):
            raise DomainError(f"{a!r} is not an element of {self.name}")

    def format(self, a):
        return self.carrier[a]

    def get(self, label):
        """Payload for a carrier label."""
        if label not in self.index:
            raise DomainError(f"{label!r} is not in the carrier of {self.name}")
        return self.index[label]

    def sample(self, rng, n):
        return [rng.randrange(len(self.carrier)) for _ in range(n)]

    def subset_labels(self, subset):
        return sorted(self.carrier[i] for i in subset)

    def to_dict(self):
        c = self.carrier
        return {
            "name": self.name,
            "carrier": list(c),
            "add": [[c[x] for x in row] for row in self.add_table],
            "mul": [[c[x] for x in row] for row in self.mul_table],
            "zero": c[self.zero],
            "one": c[self.one],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data, name=None):
        if not isinstance(data, dict):
            raise StructuralError("semiring JSON must be an object")
        missing = {"carrier", "add", "mul", "zero", "one"} - set(data)
        if missing:
            raise StructuralError(f"semiring JSON is missing {sorted(missing)}")
        return cls(data["carrier"], data["add"], data["mul"], data["zero"], data["one"],
                   name=name or data.get("name", "finite"))

    @classmethod
    def from_json(cls, text, name=None):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise StructuralError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data, name=name)

    @classmethod
    def load(cls, path):
        path = Path(path)
        return cls.from_json(path.read_text(), name=None)

    @classmethod
    def from_operations(cls, elements, add, mul, zero, one, label=str, name="finite"):
        """Tabulate a finite structure given by payloads and operations."""
        elements = list(elements)
        pos = {e: i for i, e in enumerate(elements)}

        def find(x):
            if x not in pos:
                raise StructuralError(f"operation leaves the carrier: {label(x)}")
            return pos[x]

        labels = [label(e) for e in elements]
        addt = [[labels[find(add(a, b))] for b in elements] for a in elements]
        mult = [[labels[find(mul(a, b))] for b in elements] for a in elements]
        s = cls(labels, addt, mult, labels[find(zero)], labels[find(one)], name=name)
        s.payloads = tuple(elements)
        return s


def check_semiring_axioms(s):
    """Exhaustively test every semiring axiom; each violation is recorded with a witness."""
    rep = Report("semiring axioms", s.name)
    E = list(s.elements())
    f = s.format
    A, M = s.add, s.mul
    z, o = s.zero, s.one
    for a, b in product(E, E):
        if A(a, b) != A(b, a):
            rep.fail("add not commutative", a=f(a), b=f(b))
        if M(a, b) != M(b, a):
            rep.fail("mul not commutative", a=f(a), b=f(b))
    for a, b, c in product(E, E, E):
        if A(A(a, b), c) != A(a, A(b, c)):
            rep.fail("add not associative", a=f(a), b=f(b), c=f(c))
        if M(M(a, b), c) != M(a, M(b, c)):
            rep.fail("mul not associative", a=f(a), b=f(b), c=f(c))
        if M(a, A(b, c)) != A(M(a, b), M(a, c)):
            rep.fail("mul does not distribute over add", a=f(a), b=f(b), c=f(c))
    for a in E:
        if A(a, z) != a:
            rep.fail("zero is not an additive identity", a=f(a))
        if M(a, z) != z:
            rep.fail("zero is not absorbing", a=f(a))
        if M(a, o) != a:
            rep.fail("one is not a multiplicative identity", a=f(a))
    return rep


def _elements_for_check(s, rng=None, n=200):
    if s.is_finite:
        return list(s.elements())
    import random
    rng = rng or random.Random(0)
    return s.sample(rng, n) + [s.zero, s.one]


def is_idempotent(s, rng=None):
    """Exact on finite semirings; sampled (``n=200``) on symbolic ones."""
    return all(s.add(a, a) == a for a in _elements_for_check(s, rng))


def is_simple(s, rng=None):
    return all(s.add(a, s.one) == s.one for a in _elements_for_check(s, rng))


def glb(s, a, b):
    """Greatest lower bound of two elements of a finite idempotent semiring, or None."""
    lower = [c for c in s.elements() if s.leq(c, a) and s.leq(c, b)]
    for c in lower:
        if all(s.leq(d, c) for d in lower):
            return c
    return None


def is_lo_semiring(s):
    if not (is_idempotent(s) and is_simple(s)):
        return False
    E = list(s.elements())
    return all(glb(s, a, b) is not None for a in E for b in E)


def units(s):
    """Invertible elements of a finite semiring."""
    return [a for a in s.elements() if any(s.mul(a, b) == s.one for b in s.elements())]


def check_partial_order(s):
    rep = Report("natural order is a partial order", s.name)
    E = list(s.elements())
    for a in E:
        rep.check(s.leq(a, a), "not reflexive", a=s.format(a))
    for a, b in product(E, E):
        if a != b and s.leq(a, b) and s.leq(b, a):
            rep.fail("not antisymmetric", a=s.format(a), b=s.format(b))
    for a, b, c in product(E, E, E):
        if s.leq(a, b) and s.leq(b, c) and not s.leq(a, c):
            rep.fail("not transitive", a=s.format(a), b=s.format(b), c=s.format(c))
    return rep


# built-in semirings -----------------------------------------------------

BOOLEAN = FiniteSemiring(["0", "1"], [["0", "1"], ["1", "1"]], [["0", "0"], ["0", "1"]],
                         "0", "1", name="B")


def chain(n, name=None):
    """Chain 0 < a1 < ... < 1 with max as sum and min as product."""
    mid = ["a"] if n == 3 else [f"a{i}" for i in range(1, n - 1)]
    labels = ["0"] + mid + ["1"]
    add = [[labels[max(i, j)] for j in range(n)] for i in range(n)]
    mul = [[labels[min(i, j)] for j in range(n)] for i in range(n)]
    return FiniteSemiring(labels, add, mul, "0", "1", name=name or f"chain{n}")


def product_semiring(s, t, name=None):
    pairs = [(a, b) for a in s.elements() for b in t.elements()]
    return FiniteSemiring.from_operations(
        pairs,
        lambda x, y: (s.add(x[0], y[0]), t.add(x[1], y[1])),
        lambda x, y: (s.mul(x[0], y[0]), t.mul(x[1], y[1])),
        (s.zero, t.zero), (s.one, t.one),
        label=lambda x: f"({s.format(x[0])},{t.format(x[1])})",
        name=name or f"{s.name}x{t.name}")


class NatGcd(Semiring):
    """Nonnegative integers with gcd as sum and the usual product."""

    name = "N^gcd"
    zero = 0
    one = 1

    def __eq__(self, other):
        return type(other) is NatGcd

    def __hash__(self):
        return hash("N^gcd")

    def validate(self, a):
        if type(a) is not int or a < 0:
            raise DomainError(f"{a!r} is not an element of N^gcd")

    def add(self, a, b):
        return gcd(a, b)

    def mul(self, a, b):
        return a * b

    def quo(self, a, d):
        return a // d

    def sample(self, rng, n):
        return [rng.choice((0, rng.randint(1, 60), rng.randint(1, 10_000))) for _ in range(n)]


NAT_GCD = NatGcd()


class FgId(Semiring):
    """Finitely generated ideals of a ring under ideal sum and product."""

    def __init__(self, ring):
        self.ring = ring
        self.name = f"fgId({ring.name})"
        self.is_finite = hasattr(ring, "all_ideals") and bool(ring.is_finite or ring.is_field)

    def __eq__(self, other):
        return type(other) is FgId and other.ring == self.ring

    def __hash__(self):
        return hash(("fgId", self.ring))

    @property
    def zero(self):
        return self.ring.zero_ideal()

    @property
    def one(self):
        return self.ring.unit_ideal()

    def validate(self, a):
        from .rings.base import Ideal
        if not isinstance(a, Ideal) or a.ring != self.ring:
            raise DomainError(f"{a!r} is not an element of {self}")

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def leq(self, a, b):
        return a <= b

    def quo(self, a, d):
        """Exact quotient of principal ideals (PID backends)."""
        r = self.ring
        return r.ideal(r.quo(a.generator, d.generator))

    def format(self, a):
        return repr(a)

    def principal(self, x):
        return self.ring.ideal(x)

    def elements(self):
        if not self.is_finite:
            raise DomainError(f"{self} is infinite")
        return self.ring.all_ideals()

    def sample(self, rng, n):
        r = self.ring
        out = []
        for _ in range(n):
            k = rng.randint(1, 2)
            out.append(r.ideal(*[r.random_element(rng) for _ in range(k)]))
        return out

    def to_finite(self):
        """Tabulate fgId of a finite ring."""
        return FiniteSemiring.from_operations(self.elements(), self.add, self.mul, self.zero,
                                              self.one, label=repr, name=self.name)


# fractions ----------------------------------------------------------------

class FractionSemiring(Semiring):
    """V^{-1}T for a gcd-monoid semiring T (N^gcd or fgId of a PID).

    ``in_v`` decides membership of a nonzero element in the saturated
    multiplicative set V.  Since T is cancellative and has gcds (its sum),
    every fraction has a unique reduced form ``(a, u)``.
    """

    def __init__(self, base, in_v, name):
        self.base = base
        self.in_v = in_v
        self.name = name

    def __eq__(self, other):
        return type(other) is FractionSemiring and other.name == self.name and other.base == self.base

    def __hash__(self):
        return hash(("frac", self.name))

    def make(self, a, u):
        T = self.base
        if u == T.zero or not self.in_v(u):
            raise DomainError(f"{T.format(u)} is not in the multiplicative set of {self}")
        if a == T.zero:
            return (T.zero, T.one)
        g = T.add(a, u)
        return (T.quo(a, g), T.quo(u, g))

    def embed(self, a):
        return self.make(a, self.base.one)

    @property
    def zero(self):
        return (self.base.zero, self.base.one)

    @property
    def one(self):
        return (self.base.one, self.base.one)

    def validate(self, a):
        if type(a) is not tuple or len(a) != 2 or self.make(*a) != a:
            raise DomainError(f"{a!r} is not a reduced fraction of {self}")

    def add(self, x, y):
        T = self.base
        return self.make(T.add(T.mul(x[0], y[1]), T.mul(y[0], x[1])), T.mul(x[1], y[1]))

    def mul(self, x, y):
        T = self.base
        return self.make(T.mul(x[0], y[0]), T.mul(x[1], y[1]))

    def inverse(self, x):
        if not self.in_v(x[0]):
            raise DomainError(f"{self.format(x)} is not invertible in {self}")
        return self.make(x[1], x[0])

    def format(self, x):
        T = self.base
        if x[1] == T.one:
            return T.format(x[0])
        return f"{T.format(x[0])}/{T.format(x[1])}"

    def sample(self, rng, n):
        T = self.base
        out = []
        while len(out) < n:
            a, u = T.sample(rng, 2)
            if u != T.zero and self.in_v(u):
                out.append(self.make(a, u))
        return out


class RationalGcd(Semiring):
    """Localization of N^gcd as nonnegative rationals, sum = gcd of fractions.

    ``primes=None`` inverts every nonzero integer; otherwise only integers
    whose prime factors lie in ``primes``; ``avoid=p`` inverts integers prime
    to ``p``.  Implemented on ``Fraction`` directly as an independent check of
    ``FractionSemiring``.
    """

    zero = Fraction(0)
    one = Fraction(1)

    def __init__(self, primes=None, avoid=None, name=None):
        self.primes = None if primes is None else frozenset(primes)
        self.avoid = avoid
        if name is None:
            if avoid is not None:
                name = f"N^gcd_<{avoid}>"
            elif self.primes is None:
                name = "Q>0^gcd"
            else:
                name = "N^gcd[1/" + "*".join(map(str, sorted(self.primes))) + "]" if self.primes else "N^gcd"
        self.name = name

    def __eq__(self, other):
        return type(other) is RationalGcd and (other.primes, other.avoid) == (self.primes, self.avoid)

    def __hash__(self):
        return hash(("Qgcd", self.primes, self.avoid))

    def denominator_ok(self, d):
        if self.avoid is not None:
            return d % self.avoid != 0
        if self.primes is None:
            return True
        for p in self.primes:
            while d % p == 0:
                d //= p
        return d == 1

    def validate(self, a):
        if type(a) is not Fraction or a < 0 or not self.denominator_ok(a.denominator):
            raise DomainError(f"{a!r} is not an element of {self.name}")

    def add(self, a, b):
        return Fraction(gcd(a.numerator * b.denominator, b.numerator * a.denominator),
                        a.denominator * b.denominator)

    def mul(self, a, b):
        return a * b

    def inverse(self, a):
        if a == 0 or not self.denominator_ok(a.numerator):
            raise DomainError(f"{a} is not invertible in {self.name}")
        return 1 / a

    def sample(self, rng, n):
        out = []
        while len(out) < n:
            a = Fraction(rng.randint(0, 50), rng.randint(1, 50))
            if self.denominator_ok(a.denominator):
                out.append(a)
        return out


def _prime_set(n):
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def localize_semiring(s, v):
    """Localization of ``s`` at the multiplicative set ``v``.

    Finite semirings take ``v`` as a collection of carrier labels (or
    payloads).  N^gcd and fgId of a PID take ``v`` as ``"one"``,
    ``"nonzero"``, ``("away", f)``, ``("prime", p)`` or a finite explicitly
    closed set.
    """
    if isinstance(s, FiniteSemiring):
        return _localize_finite(s, v)
    if isinstance(s, NatGcd):
        kind, arg = _symbolic_set(s, v)
        if kind == "one":
            return RationalGcd(primes=(), name="N^gcd")
        if kind == "nonzero":
            return RationalGcd()
        if kind == "away":
            return RationalGcd(primes=_prime_set(arg))
        return RationalGcd(avoid=arg)
    if isinstance(s, FgId) and s.ring.is_pid:
        ring = s.ring
        kind, arg = _symbolic_set(s, v)
        if kind == "one":
            return FractionSemiring(s, lambda u: u == s.one, f"{s.name}")
        if kind == "nonzero":
            return FractionSemiring(s, lambda u: not u.is_zero, f"Frac({s.name})")
        g = arg.generator if hasattr(arg, "generator") else arg
        if kind == "away":
            def in_v(u, g=g):
                x = u.generator
                while not ring.is_unit(ring.gcd(x, g)):
                    x = ring.quo(x, ring.gcd(x, g))
                return ring.is_unit(x)
            return FractionSemiring(s, in_v, f"{s.name}_{ring.format(g)}")
        return FractionSemiring(s, lambda u, g=g: not u.is_zero and not ring.divides(g, u.generator),
                                f"{s.name}_<{ring.format(g)}>")
    raise DomainError(f"localization of {s} is not supported")


def _symbolic_set(s, v):
    if isinstance(v, str):
        if v in ("one", "nonzero"):
            return v, None
        raise DomainError(f"unknown multiplicative set {v!r}")
    if isinstance(v, tuple) and len(v) == 2 and v[0] in ("away", "prime"):
        if v[1] == s.zero:
            raise DomainError("cannot invert zero")
        return v
    items = list(v)
    if not items:
        raise DomainError("multiplicative set is empty")
    if s.one not in items:
        raise DomainError("multiplicative set must contain 1")
    for a in items:
        for b in items:
            if s.mul(a, b) not in items:
                raise DomainError(f"multiplicative set not closed: {s.format(a)}*{s.format(b)}")
    if any(a == s.zero for a in items):
        raise DomainError("localizing at a set containing 0 gives the zero semiring; "
                          "use a finite semiring for that case")
    return "one", None


def _localize_finite(s, v):
    v = [s.get(x) if isinstance(x, str) else x for x in v]
    if not v:
        raise DomainError("multiplicative set is empty")
    v = sorted(set(v))
    for x in v:
        s.validate(x)
    if s.one not in v:
        raise DomainError("multiplicative set must contain 1")
    vs = set(v)
    for a in v:
        for b in v:
            if s.mul(a, b) not in vs:
                raise DomainError(f"multiplicative set not closed: "
                                  f"{s.format(a)}*{s.format(b)} = {s.format(s.mul(a, b))}")
    # pairs with denominator 1 come first so they label their classes
    pairs = [(a, u) for u in sorted(v, key=lambda u: u != s.one) for a in s.elements()]
    M = s.mul

    def related(p, q):
        (a, u), (b, w) = p, q
        return any(M(t, M(w, a)) == M(t, M(u, b)) for t in v)

    # the relation is an equivalence for commutative semirings; group by it
    classes = []
    cls_of = {}
    for p in pairs:
        for k, rep in enumerate(classes):
            if related(p, rep):
                cls_of[p] = k
                break
        else:
            cls_of[p] = len(classes)
            classes.append(p)
    A = s.add

    def fadd(p, q):
        return (A(M(p[0], q[1]), M(q[0], p[1])), M(p[1], q[1]))

    def fmul(p, q):
        return (M(p[0], q[0]), M(p[1], q[1]))

    def label(p):
        a, u = p
        return s.format(a) if u == s.one else f"{s.format(a)}/{s.format(u)}"

    n = len(classes)
    lab = [label(p) for p in classes]
    add = [[lab[cls_of[fadd(classes[i], classes[j])]] for j in range(n)] for i in range(n)]
    mul = [[lab[cls_of[fmul(classes[i], classes[j])]] for j in range(n)] for i in range(n)]
    out = FiniteSemiring(lab, add, mul, lab[cls_of[(s.zero, s.one)]],
                         lab[cls_of[(s.one, s.one)]],
                         name=f"{s.name}[{','.join(s.format(x) for x in v)}]^-1")
    out.class_of = {p: cls_of[p] for p in pairs}
    return out


# N^gcd versus fgId(Z) -------------------------------------------------------

def nat_to_fgid(n):
    from .rings.base import ZZ
    return ZZ.ideal(n)


def fgid_to_nat(ideal):
    return ideal.generator


def check_natgcd_isomorphism(pairs):
    """Check that n -> <n> respects sum and product and inverts ``fgid_to_nat`` on the given pairs."""
    rep = Report("N^gcd isomorphic to fgId(Z)", "N^gcd")
    for a, b in pairs:
        ia, ib = nat_to_fgid(a), nat_to_fgid(b)
        rep.check(fgid_to_nat(ia) == a, "round trip failed", n=a)
        rep.check(nat_to_fgid(gcd(a, b)) == ia + ib, "sum mismatch", a=a, b=b)
        rep.check(nat_to_fgid(a * b) == ia * ib, "product mismatch", a=a, b=b)
    return rep


# fixtures --------------------------------------------------------------------

def fixtures_dir():
    import os
    env = os.environ.get("TROPALG_FIXTURES")
    return Path(env) if env else Path(__file__).with_name("fixtures")


def load_semiring(name_or_path):
    """Load a semiring fixture by file path or by bare fixture name."""
    p = Path(name_or_path)
    if not p.exists():
        cand = fixtures_dir() / "semirings" / f"{name_or_path}.json"
        if not cand.exists():
            raise StructuralError(f"no semiring fixture {name_or_path!r}")
        p = cand
    try:
        return FiniteSemiring.from_json(p.read_text(), name=p.stem)
    except OSError as exc:
        raise StructuralError(str(exc)) from None


def fixture_semirings():
    d = fixtures_dir() / "semirings"
    return [load_semiring(p) for p in sorted(d.glob("*.json"))]
