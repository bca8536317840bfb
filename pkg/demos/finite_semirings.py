"""
Ideals and congruences of small semirings
=========================================

Every finite semiring in the fixture corpus is small enough to enumerate.
The k-ideals then sit inside the congruences as a retract.
"""

from tropalg.ideals import (enumerate_congruences, enumerate_ideals, enumerate_k_ideals, map_c,
                            map_r, quotient_semiring, verify_retraction_congruences)
from tropalg.semiring import fixture_semirings, load_semiring

# counts across the corpus
for s in fixture_semirings():
    print(f"{s.name:18} size {len(s)}  ideals {len(enumerate_ideals(s))}"
          f"  k-ideals {len(enumerate_k_ideals(s))}  congruences {len(enumerate_congruences(s))}")

# a truncated copy of N has an ideal that is not subtractive
s = load_semiring("nat_trunc3")
for I in enumerate_ideals(s):
    print(s.subset_labels(I), "k-ideal" if I in enumerate_k_ideals(s) else "not subtractive")

# each k-ideal is recovered from the congruence it generates
s = load_semiring("chain4")
for I in enumerate_k_ideals(s):
    Y = map_c(s, I)
    print(s.subset_labels(I), "->", Y.partition(), "->", s.subset_labels(map_r(s, Y)))
print(verify_retraction_congruences(s).to_json())

# quotients by k-ideals are again semirings
q = quotient_semiring(s, enumerate_k_ideals(s)[1])
print(q.name, "has", len(q), "elements")
