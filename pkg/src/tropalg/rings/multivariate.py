"""Multivariate polynomials over Q with Buchberger's algorithm.

A polynomial is a tuple of ``(exponents, coefficient)`` terms sorted by the
ring's monomial order, largest first, with nonzero ``Fraction``
coefficients.  Ideals are stored as reduced Groebner bases.
"""

from fractions import Fraction
from itertools import combinations

from ..errors import DomainError
from .base import QQ, Ring


def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e):
    return e


ORDERS = {"grevlex": grevlex_key, "lex": lex_key}


class MultiPoly(Ring):
    """Q[x1, ..., xn] with a fixed monomial order (grevlex or lex)."""

    def __init__(self, variables, order="grevlex"):
        variables = tuple(variables)
        if not variables or len(set(variables)) != len(variables):
            raise DomainError("need a nonempty list of distinct variable names")
        if order not in ORDERS:
            raise DomainError(f"unknown monomial order {order!r}")
        self.field = QQ
        self.variables = variables
        self.order = order
        self.key = ORDERS[order]
        self.nvars = len(variables)
        self.name = f"Q[{','.join(variables)}]"

    def __eq__(self, other):
        return (type(other) is MultiPoly and other.variables == self.variables
                and other.order == self.order)

    def __hash__(self):
        return hash(("MultiPoly", self.variables, self.order))

    zero = ()

    @property
    def one(self):
        return (((0,) * self.nvars, Fraction(1)),)

    def _from_dict(self, d):
        key = self.key
        return tuple(sorted(((e, c) for e, c in d.items() if c), key=lambda t: key(t[0]),
                            reverse=True))

    def from_terms(self, terms):
        d = {}
        for e, c in terms:
            e = tuple(e)
            d[e] = d.get(e, 0) + Fraction(c)
        return self._from_dict(d)

    def validate(self, a):
        if type(a) is not tuple:
            raise DomainError(f"{a!r} is not an element of {self}")
        for t in a:
            if (type(t) is not tuple or len(t) != 2 or len(t[0]) != self.nvars
                    or type(t[1]) is not Fraction or t[1] == 0):
                raise DomainError(f"{a!r} is not an element of {self}")
        if self._from_dict(dict(a)) != a:
            raise DomainError(f"{a!r} is not sorted in {self.order} order")

    def variable(self, name):
        if name not in self.variables:
            raise DomainError(f"{self} has no variable {name!r}")
        e = [0] * self.nvars
        e[self.variables.index(name)] = 1
        return ((tuple(e), Fraction(1)),)

    def constant(self, c):
        c = Fraction(c)
        return (((0,) * self.nvars, c),) if c else ()

    def from_int(self, n):
        return self.constant(n)

    def from_coefficient(self, c):
        return self.constant(c)

    def add(self, a, b):
        d = dict(a)
        for e, c in b:
            d[e] = d.get(e, 0) + c
        return self._from_dict(d)

    def neg(self, a):
        return tuple((e, -c) for e, c in a)

    def mul(self, a, b):
        d = {}
        for e1, c1 in a:
            for e2, c2 in b:
                e = tuple(x + y for x, y in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return self._from_dict(d)

    def mul_term(self, a, e, c):
        return tuple((tuple(x + y for x, y in zip(e1, e)), c1 * c) for e1, c1 in a)

    def is_unit(self, a):
        return len(a) == 1 and not any(a[0][0])

    def inverse(self, a):
        if not self.is_unit(a):
            raise ArithmeticError(f"{self.format(a)} is not a unit in {self}")
        return self.constant(1 / a[0][1])

    def monic(self, a):
        if not a:
            return a
        inv = 1 / a[0][1]
        return tuple((e, c * inv) for e, c in a)

    def degree(self, a):
        return max((sum(e) for e, _ in a), default=-1)

    def evaluate(self, a, point):
        total = Fraction(0)
        for e, c in a:
            term = c
            for x, k in zip(point, e):
                term *= Fraction(x) ** k
            total += term
        return total

    def format(self, a):
        if not a:
            return "0"
        parts = []
        for e, c in a:
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def random_element(self, rng, degree=4, terms=3, bound=5):
        d = {}
        for _ in range(rng.randint(1, terms)):
            total = rng.randint(0, degree)
            e = [0] * self.nvars
            for _ in range(total):
                e[rng.randrange(self.nvars)] += 1
            d[tuple(e)] = d.get(tuple(e), 0) + Fraction(rng.randint(-bound, bound))
        return self._from_dict(d)

    # Groebner machinery ---------------------------------------------------
    def reduce(self, f, basis):
        """Full normal form of ``f`` modulo ``basis`` (list of monic polynomials)."""
        key = self.key
        d = dict(f)
        out = {}
        while d:
            lead = max(d, key=key)
            c = d[lead]
            for g in basis:
                ge = g[0][0]
                if all(x >= y for x, y in zip(lead, ge)):
                    shift = tuple(x - y for x, y in zip(lead, ge))
                    for e, gc in g:
                        m = tuple(x + y for x, y in zip(e, shift))
                        v = d.get(m, 0) - c * gc
                        if v:
                            d[m] = v
                        else:
                            d.pop(m, None)
                    break
            else:
                out[lead] = c
                del d[lead]
        return self._from_dict(out)

    def spoly(self, f, g):
        lf, lg = f[0][0], g[0][0]
        lcm = tuple(max(x, y) for x, y in zip(lf, lg))
        a = self.mul_term(f, tuple(x - y for x, y in zip(lcm, lf)), 1 / f[0][1])
        b = self.mul_term(g, tuple(x - y for x, y in zip(lcm, lg)), 1 / g[0][1])
        return self.add(a, self.neg(b))

    def groebner(self, gens):
        """Reduced Groebner basis of the ideal spanned by ``gens`` (``()`` for the zero ideal).

        Buchberger with the normal selection strategy (smallest lcm first)
        and both of Buchberger's criteria.
        """
        basis = [self.monic(g) for g in gens if g]
        if not basis:
            return ()
        key = self.key

        def lcm(i, j):
            return tuple(max(x, y) for x, y in zip(basis[i][0][0], basis[j][0][0]))

        pairs = {(i, j): lcm(i, j) for i, j in combinations(range(len(basis)), 2)}
        while pairs:
            (i, j), m = min(pairs.items(), key=lambda kv: key(kv[1]))
            del pairs[(i, j)]
            li, lj = basis[i][0][0], basis[j][0][0]
            # coprime leading monomials: the S-polynomial reduces to zero
            if all(x == 0 or y == 0 for x, y in zip(li, lj)):
                continue
            # chain criterion: some lt(g_k) divides the lcm and both other pairs are done
            if any(k not in (i, j) and all(x >= y for x, y in zip(m, basis[k][0][0]))
                   and (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs
                   for k in range(len(basis))):
                continue
            r = self.reduce(self.spoly(basis[i], basis[j]), basis)
            if r:
                basis.append(self.monic(r))
                n = len(basis) - 1
                for k in range(n):
                    pairs[(k, n)] = lcm(k, n)
        return self.interreduce(basis)

    def interreduce(self, basis):
        basis = [b for b in basis if b]
        # drop generators whose leading monomial is divisible by another's
        minimal = []
        for i, g in enumerate(basis):
            lg = g[0][0]
            redundant = False
            for j, h in enumerate(basis):
                if i == j:
                    continue
                lh = h[0][0]
                if all(x >= y for x, y in zip(lg, lh)) and (lh != lg or j < i):
                    redundant = True
                    break
            if not redundant:
                minimal.append(g)
        reduced = []
        for i, g in enumerate(minimal):
            others = minimal[:i] + minimal[i + 1:]
            head = g[:1]
            tail = self.reduce(g[1:], others)
            reduced.append(self.monic(self.add(head, tail)))
        return tuple(sorted(reduced, key=lambda p: self.key(p[0][0]), reverse=True))

    def canonical_ideal(self, gens):
        return self.groebner(gens)

    def ideal_contains(self, canonical, f):
        return not self.reduce(f, canonical)

    def is_reduced_groebner(self, basis):
        """Independent check: monic, no leading term divides another term, S-pairs reduce to zero."""
        basis = list(basis)
        for g in basis:
            if not g or g[0][1] != 1:
                return False
        for i, g in enumerate(basis):
            for j, h in enumerate(basis):
                if i == j:
                    continue
                lh = h[0][0]
                for e, _ in g:
                    if all(x >= y for x, y in zip(e, lh)):
                        return False
        for f, g in combinations(basis, 2):
            if self.reduce(self.spoly(f, g), basis):
                return False
        return True
