"""Exact ring backends and finitely generated ideals."""

from .algorithms import (factor, is_primary_ring_ideal, is_prime_ring_ideal,
                         is_radical_ring_ideal, rational_catalogue, ring_radical,
                         spec_truncated, squarefree_part)
from .base import (PID, QQ, ZZ, Field, Ideal, Integers, PrimeField, Rationals, Ring,
                   ideal_canonicalize, ideal_membership, ideal_product, ideal_sum, is_prime)
from .localization import FractionField, Laurent, LocalizedAtPrime, LocalizedAway
from .morphisms import (RingMorphism, evaluation, identity, induced_ideal_map, localization,
                        morphism, reduction, substitution)
from .multivariate import MultiPoly
from .parsing import parse_element, parse_ring
from .univariate import IntegersModN, ResidueRing, UniPoly, divisors

__all__ = [
    "factor", "is_primary_ring_ideal", "is_prime_ring_ideal", "is_radical_ring_ideal",
    "rational_catalogue", "ring_radical", "spec_truncated", "squarefree_part",
    "PID", "QQ", "ZZ", "Field", "Ideal", "Integers", "PrimeField", "Rationals", "Ring",
    "ideal_canonicalize", "ideal_membership", "ideal_product", "ideal_sum", "is_prime",
    "FractionField", "Laurent", "LocalizedAtPrime", "LocalizedAway",
    "RingMorphism", "evaluation", "identity", "induced_ideal_map", "localization", "morphism",
    "reduction", "substitution", "MultiPoly", "parse_element", "parse_ring",
    "IntegersModN", "ResidueRing", "UniPoly", "divisors",
]
