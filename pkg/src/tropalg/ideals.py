"""Ideals, k-ideals and congruences of finite semirings, and the two retractions.

Subsets of a ``FiniteSemiring`` carrier are ``frozenset``s of payload
indices; congruences are stored as restricted-growth block labels.
"""

from itertools import combinations, product

from .errors import DomainError, ResourceError
from .report import Report
from .semiring import FgId, FiniteSemiring, check_semiring_axioms

MAX_CARRIER = 8


def _bound(s, bound):
    if not isinstance(s, FiniteSemiring):
        raise DomainError(f"{s} is not a finite semiring")
    bound = MAX_CARRIER if bound is None else bound
    if len(s) > bound:
        raise ResourceError(f"{s.name} has {len(s)} elements; enumeration bound is {bound}")


def _subset(s, x):
    return frozenset(s.get(a) if isinstance(a, str) else a for a in x)


def labels(s, subset):
    return s.subset_labels(subset)


# ideals ------------------------------------------------------------------

def ideal_closure(s, x):
    """Smallest ideal containing ``x``."""
    cur = set(_subset(s, x)) | {s.zero}
    E = list(s.elements())
    changed = True
    while changed:
        changed = False
        for a in list(cur):
            for c in E:
                m = s.mul(a, c)
                if m not in cur:
                    cur.add(m)
                    changed = True
        for a, b in product(list(cur), repeat=2):
            t = s.add(a, b)
            if t not in cur:
                cur.add(t)
                changed = True
    return frozenset(cur)


def is_ideal(s, subset):
    subset = _subset(s, subset)
    if s.zero not in subset:
        return False
    for a in subset:
        for b in subset:
            if s.add(a, b) not in subset:
                return False
        for c in s.elements():
            if s.mul(a, c) not in subset:
                return False
    return True


def is_subtractive(s, subset):
    """Literal test: a + c = b with a, b in the set forces c into the set."""
    subset = _subset(s, subset)
    return all(c in subset for a in subset for c in s.elements() if s.add(a, c) in subset)


def is_k_ideal(s, subset):
    return is_ideal(s, subset) and is_subtractive(s, subset)


def is_downward_closed(s, subset):
    subset = _subset(s, subset)
    return all(c in subset for b in subset for c in s.elements() if s.leq(c, b))


def is_prime_ideal(s, subset):
    """Ideal whose complement contains 1 and is closed under products."""
    subset = _subset(s, subset)
    if not is_ideal(s, subset) or s.one in subset:
        return False
    comp = [a for a in s.elements() if a not in subset]
    return all(s.mul(a, b) not in subset for a in comp for b in comp)


def subtractive_closure(s, x):
    """Smallest k-ideal containing ``x``.

    Alternates ideal closure with adding every ``c`` such that ``a + c = b``
    for ``a, b`` already in the set, until nothing changes.  On idempotent
    semirings one round is enough, and the result is the down-set of the
    generated ideal.

    For fgId(R) the result is a handle (see ``tropalg.trop``): the k-ideal of
    all f.g. ideals contained in the sum of ``x``.
    """
    if isinstance(s, FgId):
        from .trop import subtractive_closure_fgid
        return subtractive_closure_fgid(s, x)
    cur = ideal_closure(s, x)
    E = list(s.elements())
    while True:
        extra = {c for a in cur for c in E if s.add(a, c) in cur}
        nxt = ideal_closure(s, cur | extra)
        if nxt == cur:
            return cur
        cur = nxt


def enumerate_ideals(s, bound=None):
    _bound(s, bound)
    n = len(s)
    found = set()
    for mask in range(1 << n):
        seed = [i for i in range(n) if mask >> i & 1]
        found.add(ideal_closure(s, seed))
    return sorted(found, key=lambda I: (len(I), sorted(I)))


def enumerate_k_ideals(s, bound=None):
    return [I for I in enumerate_ideals(s, bound) if is_subtractive(s, I)]


# congruences ------------------------------------------------------------------

class Congruence:
    """An equivalence relation stored as restricted-growth block labels."""

    __slots__ = ("semiring", "blocks")

    def __init__(self, semiring, labels_):
        self.semiring = semiring
        self.blocks = _rgs(labels_)

    @classmethod
    def from_partition(cls, s, partition):
        lab = [None] * len(s)
        for k, block in enumerate(partition):
            for a in _subset(s, block):
                if lab[a] is not None:
                    raise DomainError("blocks overlap")
                lab[a] = k
        if None in lab:
            raise DomainError("blocks do not cover the carrier")
        return cls(s, lab)

    def __eq__(self, other):
        return isinstance(other, Congruence) and other.blocks == self.blocks \
            and other.semiring == self.semiring

    def __hash__(self):
        return hash(self.blocks)

    def related(self, a, b):
        return self.blocks[a] == self.blocks[b]

    def __le__(self, other):
        """Inclusion of relations: every block refines a block of ``other``."""
        return all(other.blocks[a] == other.blocks[b]
                   for a in range(len(self.blocks)) for b in range(a)
                   if self.blocks[a] == self.blocks[b])

    def partition(self):
        out = {}
        for a, k in enumerate(self.blocks):
            out.setdefault(k, []).append(a)
        return [frozenset(v) for _, v in sorted(out.items())]

    def is_stable(self):
        s = self.semiring
        return _stable(s, self.blocks, range(len(self.blocks)))

    def labels(self):
        return [labels(self.semiring, b) for b in self.partition()]

    def __repr__(self):
        return "{" + ", ".join("{" + ",".join(b) + "}" for b in self.labels()) + "}"


def _rgs(lab):
    seen = {}
    out = []
    for x in lab:
        if x not in seen:
            seen[x] = len(seen)
        out.append(seen[x])
    return tuple(out)


def _stable(s, lab, assigned):
    """Compatibility with + and x among the assigned elements."""
    assigned = list(assigned)
    n = len(lab)
    for a, a2 in product(assigned, repeat=2):
        if a2 < a or lab[a] != lab[a2]:
            continue
        for b in assigned:
            for op in (s.add, s.mul):
                x, y = op(a, b), op(a2, b)
                if x < n and y < n and lab[x] is not None and lab[y] is not None \
                        and lab[x] != lab[y]:
                    return False
    return True


def enumerate_congruences(s, bound=None):
    """All congruences, by restricted-growth strings with pruning on stability."""
    _bound(s, bound)
    n = len(s)
    out = []
    lab = [None] * n

    def extend(i, nblocks):
        if i == n:
            out.append(Congruence(s, list(lab)))
            return
        for k in range(nblocks + 1):
            lab[i] = k
            if _stable(s, lab, range(i + 1)):
                extend(i + 1, max(nblocks, k + 1))
        lab[i] = None

    extend(0, 0)
    return out


def identity_congruence(s):
    return Congruence(s, list(range(len(s))))


def total_congruence(s):
    return Congruence(s, [0] * len(s))


def congruence_generated(s, pairs):
    """Least congruence containing the given pairs (union-find plus translation closure)."""
    n = len(s)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    for a, b in pairs:
        a = s.get(a) if isinstance(a, str) else a
        b = s.get(b) if isinstance(b, str) else b
        union(a, b)
    E = list(s.elements())
    changed = True
    while changed:
        changed = False
        for x in E:
            for y in E:
                if x < y and find(x) == find(y):
                    for z in E:
                        if union(s.add(x, z), s.add(y, z)):
                            changed = True
                        if union(s.mul(x, z), s.mul(y, z)):
                            changed = True
    return Congruence(s, [find(x) for x in E])


def map_c(s, ideal):
    return congruence_generated(s, [(a, s.zero) for a in _subset(s, ideal)])


def map_r(s, cong):
    return frozenset(a for a in s.elements() if cong.related(a, s.zero))


def map_j(s, ideal):
    return subtractive_closure(s, ideal)


# poset topologies ------------------------------------------------------------

class PosetSpace:
    """A finite poset with its coarse lower (or upper) topology.

    Lower: closed subbasis = principal up-sets U(x).  Upper: principal
    down-sets.  On a finite poset the closed sets are then exactly the
    up-sets (resp. down-sets), which is what ``is_closed`` tests;
    ``closed_sets`` generates the topology from the subbasis instead.
    """

    def __init__(self, points, leq, topology="lower"):
        if topology not in ("lower", "upper"):
            raise DomainError("topology must be 'lower' or 'upper'")
        self.points = list(points)
        self.leq = leq
        self.topology = topology
        self.index = {p: i for i, p in enumerate(self.points)}

    def __len__(self):
        return len(self.points)

    def check_order(self):
        rep = Report("partial order", "poset")
        P = self.points
        for p in P:
            rep.check(self.leq(p, p), "not reflexive", p=p)
        for p, q in product(P, P):
            if p != q and self.leq(p, q) and self.leq(q, p):
                rep.fail("not antisymmetric", p=p, q=q)
        for p, q, r in product(P, P, P):
            if self.leq(p, q) and self.leq(q, r) and not self.leq(p, r):
                rep.fail("not transitive", p=p, q=q, r=r)
        return rep

    def up(self, x):
        return frozenset(y for y in self.points if self.leq(x, y))

    def down(self, x):
        return frozenset(y for y in self.points if self.leq(y, x))

    def subbasis(self):
        f = self.up if self.topology == "lower" else self.down
        return [f(x) for x in self.points]

    def is_closed(self, subset):
        subset = frozenset(subset)
        if self.topology == "lower":
            return all(y in subset for x in subset for y in self.up(x))
        return all(y in subset for x in subset for y in self.down(x))

    def closed_sets(self):
        """Closed sets generated from the subbasis by finite unions and intersections."""
        whole = frozenset(self.points)
        base = {whole}
        sub = list(set(self.subbasis()))
        for k in range(1, len(sub) + 1):
            for combo in combinations(sub, k):
                acc = whole
                for c in combo:
                    acc = acc & c
                base.add(acc)
        closed = {frozenset()}
        frontier = set(base)
        closed |= frontier
        while frontier:
            new = set()
            for a in frontier:
                for b in base:
                    u = a | b
                    if u not in closed:
                        new.add(u)
            closed |= new
            frontier = new
        return closed

    # lattice structure --------------------------------------------------------
    def join(self, a, b):
        ubs = [c for c in self.points if self.leq(a, c) and self.leq(b, c)]
        least = [c for c in ubs if all(self.leq(c, d) for d in ubs)]
        return least[0] if least else None

    def meet(self, a, b):
        lbs = [c for c in self.points if self.leq(c, a) and self.leq(c, b)]
        most = [c for c in lbs if all(self.leq(d, c) for d in lbs)]
        return most[0] if most else None

    def lattice_report(self):
        rep = Report("lattice", "poset")
        for a, b in combinations(self.points, 2):
            if self.join(a, b) is None:
                rep.fail("missing join", a=a, b=b)
            if self.meet(a, b) is None:
                rep.fail("missing meet", a=a, b=b)
        return rep


def continuity_violations(f, source, target):
    """Subbasic closed sets of ``target`` whose preimage under ``f`` is not closed."""
    bad = []
    for closed in target.subbasis():
        pre = frozenset(p for p in source.points if f(p) in closed)
        if not source.is_closed(pre):
            bad.append(closed)
    return bad


def _incl(a, b):
    return a <= b


def kideal_space(s, topology="lower"):
    return PosetSpace(enumerate_k_ideals(s), _incl, topology)


def ideal_space(s, topology="upper"):
    return PosetSpace(enumerate_ideals(s), _incl, topology)


def congruence_space(s, topology="lower"):
    return PosetSpace(enumerate_congruences(s), lambda y, z: y <= z, topology)


# retraction theorems ---------------------------------------------------------

def verify_retraction_congruences(s):
    """r . c = id on k-ideals, c . r below id on congruences, continuity of r and c."""
    rep = Report("retraction for k-ideals and congruences", s.name)
    K = kideal_space(s, "lower")
    C = congruence_space(s, "lower")
    cmap = {I: map_c(s, I) for I in K.points}
    for I in K.points:
        rep.check(map_r(s, cmap[I]) == I, "r(c(I)) != I", I=labels(s, I))
    for Y in C.points:
        rep.check(map_c(s, map_r(s, Y)) <= Y, "c(r(Y)) not contained in Y", Y=repr(Y))
        rep.check(map_r(s, Y) in K.index, "r(Y) is not a k-ideal", Y=repr(Y))
    for a, b in product(K.points, K.points):
        if (a <= b) != (cmap[a] <= cmap[b]):
            rep.fail("c does not reflect inclusion", I=labels(s, a), J=labels(s, b))
    for closed in continuity_violations(lambda Y: map_r(s, Y), C, K):
        rep.fail("r not continuous", closed=[labels(s, I) for I in closed])
    for closed in continuity_violations(lambda I: cmap[I], K, C):
        rep.fail("c not continuous", closed=[repr(Y) for Y in closed])
    image = {cmap[I] for I in K.points}
    rep.details.update({
        "k_ideals": len(K), "congruences": len(C), "c_image": len(image),
        "c_injective": len(image) == len(K),
    })
    return rep


def verify_retraction_ideals(s):
    """j . i = id on k-ideals; j inflationary, monotone, idempotent; continuity of i and j."""
    rep = Report("retraction for ideals and k-ideals", s.name)
    K = kideal_space(s, "upper")
    Id = ideal_space(s, "upper")
    jmap = {I: map_j(s, I) for I in Id.points}
    for I in K.points:
        rep.check(jmap[I] == I, "j(i(I)) != I", I=labels(s, I))
    for I in Id.points:
        J = jmap[I]
        rep.check(J in K.index, "j(I) is not a k-ideal", I=labels(s, I))
        rep.check(I <= J, "j not inflationary", I=labels(s, I))
        rep.check(map_j(s, J) == J, "j not idempotent", I=labels(s, I))
    for a, b in product(Id.points, Id.points):
        if a <= b and not jmap[a] <= jmap[b]:
            rep.fail("j not monotone", I=labels(s, a), J=labels(s, b))
    for closed in continuity_violations(lambda I: jmap[I], Id, K):
        rep.fail("j not continuous", closed=[labels(s, I) for I in closed])
    for closed in continuity_violations(lambda I: I, K, Id):
        rep.fail("i not continuous", closed=[labels(s, I) for I in closed])
    rep.details.update({"ideals": len(Id), "k_ideals": len(K)})
    return rep


# quotients ---------------------------------------------------------------------

def quotient_by_congruence(s, cong, name=None):
    blocks = cong.partition()
    rep_of = {a: min(b) for b in blocks for a in b}
    reps = sorted(set(rep_of.values()))

    def label(a):
        return s.format(a)

    q = FiniteSemiring.from_operations(
        reps, lambda a, b: rep_of[s.add(a, b)], lambda a, b: rep_of[s.mul(a, b)],
        rep_of[s.zero], rep_of[s.one], label=label, name=name or f"{s.name}/~")
    pos = {r: i for i, r in enumerate(reps)}
    q.projection = {a: pos[rep_of[a]] for a in s.elements()}
    return q


def quotient_semiring(s, ideal):
    """S/I, i.e. the quotient by the congruence generated by I x {0}."""
    ideal = _subset(s, ideal)
    cong = map_c(s, ideal)
    _check_well_defined(s, cong)
    return quotient_by_congruence(s, cong, name=f"{s.name}/{{{','.join(labels(s, ideal))}}}")


def _check_well_defined(s, cong):
    if not cong.is_stable():
        raise DomainError("relation is not stable under the operations")


def quotient_kideal_bijection_check(s, ideal):
    """k-ideals above I correspond to k-ideals of S/I through the projection, primes to primes."""
    ideal = _subset(s, ideal)
    rep = Report("k-ideals of a quotient", s.name)
    if not is_k_ideal(s, ideal):
        rep.fail("input is not a k-ideal", I=labels(s, ideal))
        return rep
    q = quotient_semiring(s, ideal)
    rep.merge(check_semiring_axioms(q), prefix="quotient")
    pi = q.projection
    above = [J for J in enumerate_k_ideals(s) if ideal <= J]
    below = enumerate_k_ideals(q)
    image = {}
    for J in above:
        K = frozenset(pi[a] for a in J)
        image[J] = K
        rep.check(K in below, "image is not a k-ideal of the quotient", J=labels(s, J))
        back = frozenset(a for a in s.elements() if pi[a] in K)
        rep.check(back == J, "preimage of image differs", J=labels(s, J))
        rep.check(is_prime_ideal(s, J) == is_prime_ideal(q, K), "primality not preserved",
                  J=labels(s, J))
    for K in below:
        back = frozenset(a for a in s.elements() if pi[a] in K)
        rep.check(back in image and image[back] == K, "k-ideal of quotient not hit",
                  K=labels(q, K))
    rep.check(len(set(image.values())) == len(above) == len(below), "sizes differ")
    rep.details.update({"above": len(above), "quotient_k_ideals": len(below),
                        "quotient_size": len(q)})
    return rep


# lattice-ordered structure ---------------------------------------------------

def kideal_semiring(s):
    """Id_k(S) with sum = k-closure of the union and product = k-closure of the ideal product."""
    K = enumerate_k_ideals(s)

    def add(I, J):
        return subtractive_closure(s, I | J)

    def mul(I, J):
        return subtractive_closure(s, {s.mul(a, b) for a in I for b in J})

    return FiniteSemiring.from_operations(
        K, add, mul, frozenset([s.zero]), frozenset(s.elements()),
        label=lambda I: "{" + ",".join(labels(s, I)) + "}", name=f"Id_k({s.name})")


def natural_poset(s, topology="lower"):
    return PosetSpace(list(s.elements()), s.leq, topology)


def compact_elements(p):
    """Compact elements of a finite lattice.

    ``c`` is compact when ``c <= join(X)`` forces ``c <= join(F)`` for a
    finite ``F`` inside ``X``.  Every subset of a finite poset is finite, so
    taking ``F = X`` shows each element is compact; elements are only dropped
    when some join they need does not exist.
    """
    pts = p.points
    return [c for c in pts if all(p.join(c, d) is not None for d in pts)]


def _join_all(p, X):
    bottom = [c for c in p.points if all(p.leq(c, d) for d in p.points)]
    acc = bottom[0] if bottom else None
    for x in X:
        acc = x if acc is None else p.join(acc, x)
        if acc is None:
            return None
    return acc


def lo_semigroup_report(s):
    """LO-semigroup test on a finite semiring, or lattice test on a bare poset."""
    if isinstance(s, PosetSpace):
        rep = s.lattice_report()
        rep.theorem = "LO-semigroup"
        return rep
    rep = Report("LO-semigroup", s.name)
    if not all(s.add(a, a) == a for a in s.elements()):
        rep.fail("not idempotent")
        return rep
    p = natural_poset(s)
    rep.merge(p.lattice_report())
    if not rep:
        return rep
    for a in s.elements():
        rep.check(s.add(a, s.one) == s.one, "not simple", a=s.format(a))
    for a, b in product(s.elements(), repeat=2):
        m = p.meet(a, b)
        if m is not None and not s.leq(s.mul(a, b), m):
            rep.fail("product not below meet", a=s.format(a), b=s.format(b))
    comp = set(compact_elements(p))
    rep.check(s.one in comp and s.zero in comp, "compact elements miss 0 or 1")
    for a, b in product(comp, comp):
        rep.check(s.mul(a, b) in comp, "compact elements not closed under product",
                  a=s.format(a), b=s.format(b))
    for a in s.elements():
        below = [c for c in comp if s.leq(c, a)]
        rep.check(_join_all(p, below) == a, "not algebraic", a=s.format(a))
    return rep


def is_lo_semigroup(s):
    return bool(lo_semigroup_report(s))
