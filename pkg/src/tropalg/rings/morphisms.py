"""A closed catalogue of ring morphisms and the induced maps on ideals."""

from ..errors import DomainError
from .base import Field
from .localization import Localization
from .multivariate import MultiPoly
from .univariate import ResidueRing, UniPoly


class RingMorphism:
    def __init__(self, source, target, fn, kind, params=None):
        self.source = source
        self.target = target
        self.fn = fn
        self.kind = kind
        self.params = params or {}

    def __call__(self, a):
        return self.fn(a)

    def __repr__(self):
        return f"{self.kind}: {self.source} -> {self.target}"

    def then(self, other):
        if other.source != self.target:
            raise DomainError(f"cannot compose {self} with {other}")
        return RingMorphism(self.source, other.target, lambda a: other(self(a)),
                            "composite", {"first": self, "second": other})


def coefficient(target, c):
    """Image of a coefficient-field element in ``target``."""
    if isinstance(target, Field):
        return c
    if isinstance(target, (UniPoly, MultiPoly)):
        return target.from_coefficient(c)
    if isinstance(target, ResidueRing):
        return target.reduce(coefficient(target.base, c))
    if isinstance(target, Localization):
        return target.embed(coefficient(target.base, c))
    raise DomainError(f"no coefficient embedding into {target}")


def identity(ring):
    return RingMorphism(ring, ring, lambda a: a, "identity")


def reduction(source, target):
    """R -> R/(g), or R/(n) -> R/(m) for m dividing n."""
    if not isinstance(target, ResidueRing):
        raise DomainError(f"{target} is not a residue ring")
    if source == target.base:
        return RingMorphism(source, target, target.reduce, "reduction")
    if isinstance(source, ResidueRing) and source.base == target.base \
            and target.base.divides(target.modulus, source.modulus):
        return RingMorphism(source, target, target.reduce, "reduction")
    raise DomainError(f"no reduction map {source} -> {target}")


def localization(source, target):
    """The canonical inclusion R -> S^{-1}R."""
    if not isinstance(target, Localization) or target.base != source:
        raise DomainError(f"{target} is not a localization of {source}")
    return RingMorphism(source, target, target.embed, "localization")


def substitution(source, target, images):
    """K[x] or Q[x1..xn] -> target, sending each variable to the given target element."""
    if isinstance(source, UniPoly):
        names = [source.var]
    elif isinstance(source, MultiPoly):
        names = list(source.variables)
    else:
        raise DomainError(f"substitution needs a polynomial source, got {source}")
    if set(images) != set(names):
        raise DomainError(f"images must be given for exactly {names}")
    vals = [images[v] for v in names]
    for v in vals:
        target.validate(v)

    if isinstance(source, UniPoly):
        x = vals[0]

        def fn(a):
            acc = target.zero
            for c in reversed(a):
                acc = target.add(target.mul(acc, x), coefficient(target, c))
            return acc
    else:
        def fn(a):
            acc = target.zero
            for e, c in a:
                term = coefficient(target, c)
                for v, k in zip(vals, e):
                    term = target.mul(term, target.power(v, k))
                acc = target.add(acc, term)
            return acc
    return RingMorphism(source, target, fn, "substitution",
                        {"images": {k: target.format(v) for k, v in images.items()}})


def evaluation(source, point):
    """K[x] -> K (or Q[x..] -> Q) at a point given per variable."""
    k = source.field
    if not isinstance(point, dict):
        names = [source.var] if isinstance(source, UniPoly) else list(source.variables)
        point = dict(zip(names, point if isinstance(point, (list, tuple)) else [point]))
    images = {v: (k.from_int(c) if isinstance(c, int) else c) for v, c in point.items()}
    m = substitution(source, k, images)
    m.kind = "evaluation"
    return m


CATALOGUE = {
    "identity": lambda source, target=None, **kw: identity(source),
    "reduction": lambda source, target, **kw: reduction(source, target),
    "localization": lambda source, target, **kw: localization(source, target),
    "substitution": lambda source, target, images, **kw: substitution(source, target, images),
    "evaluation": lambda source, target=None, point=None, **kw: evaluation(source, point),
}


def morphism(kind, source, target=None, **params):
    if kind not in CATALOGUE:
        raise DomainError(f"unsupported morphism kind {kind!r}; expected one of {sorted(CATALOGUE)}")
    return CATALOGUE[kind](source, target, **params)


def induced_ideal_map(f, ideal):
    """The ideal of the target generated by the images of the canonical generators."""
    if not isinstance(f, RingMorphism):
        raise DomainError(f"{f!r} is not a catalogued ring morphism")
    if ideal.ring != f.source:
        raise DomainError(f"ideal lives in {ideal.ring}, morphism starts at {f.source}")
    gens = [f(g) for g in ideal.canonical] or [f.target.zero]
    return f.target.ideal(*gens)
