"""Finitely generated submodules of R^n over a PID, kept in Hermite normal form.

Rows are the basis; pivots are normal (positive over Z, monic over K[x])
and every entry above a pivot is reduced modulo it.  Two submodules are
equal exactly when their HNF rows agree.
"""

from .errors import DomainError


def hnf(ring, rows, n):
    """Row-style Hermite normal form of the span of ``rows`` in ring^n."""
    a = [list(r) for r in rows]
    for r in a:
        if len(r) != n:
            raise DomainError(f"vector {r} does not have length {n}")
        for x in r:
            ring.validate(x)
    out = []
    col = 0
    while a and col < n:
        nz = [r for r in a if not ring.is_zero(r[col])]
        if not nz:
            col += 1
            continue
        piv = nz[0]
        rest = [r for r in a if r is not piv]
        for i, r in enumerate(rest):
            if ring.is_zero(r[col]):
                continue
            p, q = piv[col], r[col]
            g, s, t = ring.gcdex(p, q)
            pg, qg = ring.quo(p, g), ring.quo(q, g)
            new_piv = [ring.add(ring.mul(s, x), ring.mul(t, y)) for x, y in zip(piv, r)]
            rest[i] = [ring.sub(ring.mul(pg, y), ring.mul(qg, x)) for x, y in zip(piv, r)]
            piv = new_piv
        u = ring.quo(ring.normal(piv[col]), piv[col])
        piv = [ring.mul(u, x) for x in piv]
        out.append((col, piv))
        a = [r for r in rest if any(not ring.is_zero(x) for x in r)]
        col += 1
    # reduce entries above each pivot
    for k in range(len(out)):
        c, prow = out[k]
        d = prow[c]
        for j in range(k):
            cj, row = out[j]
            e = row[c]
            q = ring.quo(ring.sub(e, ring.rem(e, d)), d)
            if not ring.is_zero(q):
                out[j] = (cj, [ring.sub(x, ring.mul(q, y)) for x, y in zip(row, prow)])
    return tuple(tuple(r) for _, r in out)


class Submodule:
    """A finitely generated submodule of ring^n."""

    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring, n, gens=()):
        if not getattr(ring, "is_pid", False):
            raise DomainError(f"submodules need a PID, got {ring}")
        self.ring = ring
        self.n = n
        self.rows = hnf(ring, gens, n)

    def _same(self, other):
        if not isinstance(other, Submodule) or other.ring != self.ring or other.n != self.n:
            raise DomainError("submodules live in different ambient modules")

    def __eq__(self, other):
        return isinstance(other, Submodule) and (other.ring, other.n, other.rows) == \
            (self.ring, self.n, self.rows)

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        R = self.ring
        if not self.rows:
            return "0"
        return " + ".join(R.name + "*(" + ", ".join(R.format(x) for x in r) + ")" for r in self.rows)

    def contains(self, v):
        """Membership of a vector, by reduction against the echelon rows."""
        R = self.ring
        v = list(v)
        for row in self.rows:
            c = next(i for i, x in enumerate(row) if not R.is_zero(x))
            if R.is_zero(v[c]):
                continue
            try:
                q = R.quo(v[c], row[c])
            except ArithmeticError:
                return False
            v = [R.sub(x, R.mul(q, y)) for x, y in zip(v, row)]
        return all(R.is_zero(x) for x in v)

    def __contains__(self, v):
        return self.contains(v)

    def __le__(self, other):
        self._same(other)
        return all(other.contains(r) for r in self.rows)

    def __ge__(self, other):
        return other <= self

    def __add__(self, other):
        self._same(other)
        return Submodule(self.ring, self.n, self.rows + other.rows)

    def is_zero(self):
        return not self.rows

    def scale(self, r):
        R = self.ring
        return Submodule(R, self.n, [[R.mul(r, x) for x in row] for row in self.rows])

    def to_dict(self):
        R = self.ring
        return {"ring": R.name, "rank": self.n,
                "rows": [[R.format(x) for x in r] for r in self.rows]}


class FgMod:
    """The idempotent monoid fgMod(R^n) with its fgId(R)-action."""

    def __init__(self, ring, n):
        self.ring = ring
        self.n = n
        self.name = f"fgMod({ring.name}^{n})"

    def __eq__(self, other):
        return isinstance(other, FgMod) and (other.ring, other.n) == (self.ring, self.n)

    def __hash__(self):
        return hash(("fgMod", self.ring, self.n))

    def __repr__(self):
        return self.name

    @property
    def zero(self):
        return Submodule(self.ring, self.n)

    def full(self):
        R = self.ring
        return Submodule(R, self.n, [[R.one if i == j else R.zero for j in range(self.n)]
                                     for i in range(self.n)])

    def span(self, *vectors):
        return Submodule(self.ring, self.n, vectors)

    def add(self, a, b):
        return a + b

    def leq(self, a, b):
        return a <= b

    def sum(self, items):
        total = self.zero
        for x in items:
            total = total + x
        return total

    def format(self, a):
        return repr(a)

    def act(self, ideal, sub):
        return module_action(ideal, sub)

    def random_vector(self, rng, bound=50):
        R = self.ring
        if R.name == "Z":
            return [rng.randint(-bound, bound) for _ in range(self.n)]
        return [R.random_element(rng) for _ in range(self.n)]

    def random_element(self, rng, gens=2, bound=50):
        return self.span(*[self.random_vector(rng, bound) for _ in range(rng.randint(1, gens))])


def u_M(ring, vector):
    """The cyclic submodule R*m."""
    return Submodule(ring, len(vector), [vector])


def module_action(ideal, sub):
    """rho . nu: span of the products of ideal generators with submodule rows."""
    R = sub.ring
    if ideal.ring != R:
        raise DomainError(f"ideal of {ideal.ring} cannot act on a submodule over {R}")
    return Submodule(R, sub.n, [[R.mul(g, x) for x in row]
                                for g in ideal.canonical for row in sub.rows])


def action_by_presentation(ideal_gens, sub_gens, ring, n):
    """The same action computed from arbitrary generator lists (presentation check)."""
    return Submodule(ring, n, [[ring.mul(g, x) for x in v] for g in ideal_gens for v in sub_gens])
