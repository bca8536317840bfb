"""
The integers seen through their ideals
======================================

Finitely generated ideals of Z add by gcd and multiply as numbers, so
fgId(Z) is the gcd semiring on N.  This script walks through that picture
and the prime k-ideals it produces.
"""

from fractions import Fraction

from tropalg.rings import ZZ
from tropalg.semiring import NAT_GCD, FgId
from tropalg.spectrum import speck_natgcd, zeta_kernel_probe
from tropalg.trop import correspondence_forward, is_realization, nat_gcd_abs

# sum and product of ideals, next to gcd and product of generators
T = FgId(ZZ)
I, J = ZZ.ideal(12), ZZ.ideal(18)
print("<12> + <18> =", T.add(I, J), "  gcd:", NAT_GCD.add(12, 18))
print("<12> * <18> =", T.mul(I, J), "  product:", NAT_GCD.mul(12, 18))

# |n| is a valuation whose induced map fgId(Z) -> N^gcd is a bijection
ideals = [ZZ.ideal(n) for n in range(200)]
rep = is_realization(nat_gcd_abs(), ideals, list(range(-20, 21)), targets=range(200))
print("realization on generators below 200:", rep.passed)

# a k-ideal is carried by the ring ideal it corresponds to
h = correspondence_forward(ZZ.ideal(6))
print("<12> in h(<6>):", ZZ.ideal(12) in h, "  <4> in h(<6>):", ZZ.ideal(4) in h)

# prime k-ideals of N^gcd: {0} and the multiples of each prime
pts = speck_natgcd(30)
print("Spec_k(N^gcd) up to 30:", pts)

# localizing at <0> and mapping to fgId(Q) = B forgets everything but zero
rep = zeta_kernel_probe(0, [Fraction(a, b) for a in range(1, 5) for b in range(1, 5)])
print("fractions sent to 1:", rep.details["kernel_witnesses"])
