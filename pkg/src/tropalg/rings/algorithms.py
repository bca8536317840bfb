"""Radicals, primality tests and truncated prime spectra for PID-like backends."""

from ..errors import DomainError, UnsupportedError
from .base import Field, Integers, is_prime
from .localization import LocalizedAtPrime, LocalizedAway
from .multivariate import MultiPoly
from .univariate import ResidueRing, UniPoly


def _check_supported(ring):
    if isinstance(ring, MultiPoly):
        raise UnsupportedError("radicals and primary tests need a PID or a residue ring")


def factor(ring, a):
    """Prime factorisation ``{normal prime: exponent}`` of a nonzero normal element.

    Supported for Z, F_p[x], and Q[x] up to degree 3.
    """
    if ring.is_zero(a):
        raise DomainError("cannot factor zero")
    out = {}
    if isinstance(ring, Integers):
        n, p = abs(a), 2
        while p * p <= n:
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
            p += 1
        if n > 1:
            out[n] = out.get(n, 0) + 1
        return out
    if isinstance(ring, UniPoly):
        f = ring.normal(a)
        if ring.field.is_finite:
            deg = 1
            while ring.degree(f) >= 2 * deg:
                for m in ring.monic_polynomials(deg):
                    while ring.degree(f) >= deg and not ring.divmod(f, m)[1]:
                        out[m] = out.get(m, 0) + 1
                        f = ring.quo(f, m)
                deg += 1
            if ring.degree(f) > 0:
                out[f] = out.get(f, 0) + 1
            return out
        return _factor_rational(ring, f)
    if isinstance(ring, Field):
        return {}
    raise UnsupportedError(f"factorisation unsupported over {ring}")


def _factor_rational(ring, f):
    from fractions import Fraction
    out = {}
    while ring.degree(f) > 0:
        root = _rational_root(f)
        if root is None:
            if ring.degree(f) > 3:
                raise UnsupportedError("factorisation over Q is limited to degree 3 here")
            out[f] = out.get(f, 0) + 1
            break
        lin = ring.make((-root, Fraction(1)))
        out[lin] = out.get(lin, 0) + 1
        f = ring.quo(f, lin)
    return out


def _rational_root(monic):
    from fractions import Fraction
    from math import lcm
    den = 1
    for c in monic:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in monic]
    if ints[0] == 0:
        return Fraction(0)
    a0, an = abs(ints[0]), abs(ints[-1])
    for p in range(1, a0 + 1):
        if a0 % p:
            continue
        for q in range(1, an + 1):
            if an % q:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                acc = Fraction(0)
                for c in reversed(monic):
                    acc = acc * cand + c
                if acc == 0:
                    return cand
    return None


def _generator(ideal):
    """(base ring, normal generator) describing a principal ideal; residue rings lift."""
    ring = ideal.ring
    if isinstance(ring, ResidueRing):
        return ring.base, ring.generator_divisor(ideal)
    if isinstance(ring, (LocalizedAtPrime, LocalizedAway)):
        return ring.base, ideal.generator[0]
    return ring, ideal.generator


def squarefree_part(ring, a):
    if ring.is_zero(a):
        return a
    out = ring.one
    for p in factor(ring, a):
        out = ring.mul(out, p)
    return ring.normal(out)


def ring_radical(ideal):
    """Radical of an ideal in Z, K[x], a local/away localization of those, or a residue ring."""
    ring = ideal.ring
    _check_supported(ring)
    base, g = _generator(ideal)
    if base.is_zero(g):
        return ideal
    r = squarefree_part(base, g)
    if isinstance(ring, ResidueRing):
        return ring.ideal(ring.reduce(r))
    if isinstance(ring, (LocalizedAtPrime, LocalizedAway)):
        return ring.ideal(ring.embed(r))
    return ring.ideal(r)


def is_prime_ring_ideal(ideal):
    ring = ideal.ring
    _check_supported(ring)
    base, g = _generator(ideal)
    if base.is_zero(g):
        return True
    if base.is_unit(g):
        return False
    f = factor(base, g)
    return len(f) == 1 and max(f.values()) == 1


def is_primary_ring_ideal(ideal):
    ring = ideal.ring
    _check_supported(ring)
    base, g = _generator(ideal)
    if base.is_zero(g):
        return True
    if base.is_unit(g):
        return False
    return len(factor(base, g)) == 1


def is_radical_ring_ideal(ideal):
    return ring_radical(ideal) == ideal


# irreducible catalogue over Q -------------------------------------------------

def rational_catalogue(ring, degree):
    """Monic irreducibles of degree <= min(degree, 3) with coefficients in {-1, 0, 1}.

    The catalogue is closed under taking reciprocal polynomials (for degree >= 1
    with nonzero constant term), which keeps chart transitions x -> 1/x inside it.
    """
    from itertools import product
    from fractions import Fraction
    out = []
    for d in range(1, min(degree, 3) + 1):
        for tail in product((-1, 0, 1), repeat=d):
            f = tuple(Fraction(c) for c in tail) + (Fraction(1),)
            if ring.is_irreducible(f):
                out.append(f)
    return out


def spec_truncated(ring, bound):
    """Primes of ``ring`` within ``bound``, in canonical form, ``<0>`` first for domains."""
    _check_supported(ring)
    if isinstance(ring, Integers):
        return [ring.ideal(0)] + [ring.ideal(p) for p in range(2, bound + 1) if is_prime(p)]
    if isinstance(ring, Field):
        return [ring.zero_ideal()]
    if isinstance(ring, UniPoly):
        pts = [ring.zero_ideal()]
        if ring.field.is_finite:
            for d in range(1, bound + 1):
                pts.extend(ring.ideal(m) for m in ring.monic_polynomials(d) if ring.is_irreducible(m))
        else:
            pts.extend(ring.ideal(f) for f in rational_catalogue(ring, bound))
        return pts
    if isinstance(ring, ResidueRing):
        if ring.is_zero_ring:
            return []
        return [ring.ideal(ring.reduce(p)) for p in factor(ring.base, ring.modulus)]
    if isinstance(ring, LocalizedAtPrime):
        pts = [ring.zero_ideal()]
        if not ring.base.is_zero(ring.p):
            pts.append(ring.ideal(ring.embed(ring.p)))
        return pts
    if isinstance(ring, LocalizedAway):
        return [ring.ideal(ring.embed(p.generator)) for p in spec_truncated(ring.base, bound)
                if ring.base.is_zero(p.generator) or not ring.in_set(p.generator)]
    raise UnsupportedError(f"no truncated spectrum for {ring}")
