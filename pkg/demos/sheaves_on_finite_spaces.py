"""
Stalks and sheafification on finite spaces
==========================================

On a finite space each point has a smallest open neighbourhood, and the
stalk is simply the value there.  Applying fgId section by section commutes
with taking stalks.
"""

from tropalg.semiring import BOOLEAN, load_semiring
from tropalg.sheaves import (check_sheaf_axioms, closed_subscheme_comparison, constant_presheaf,
                             load_site, phi_presheaf, sheafify, stalk_commutation_check)

site, rings = load_site("sierpinski")
phi = phi_presheaf(rings)
for U in site.opens:
    print(sorted(U), rings.sections[U].name, "fgId has", len(phi.sections[U]), "elements")

for x in site.points:
    print(stalk_commutation_check(rings, x).details)

# a constant presheaf with two values on the empty set is not a sheaf
site, _ = load_site("discrete2")
p = constant_presheaf(site, BOOLEAN)
print("constant presheaf a sheaf?", check_sheaf_axioms(p).passed)
sh = sheafify(p)
print({",".join(sorted(U)) or "{}": len(sh.sections[U].families) for U in site.opens})

# the closed piece cut out by a k-ideal, seen in two ways, compared stalk by stalk
s = load_semiring("fgid_z12")
for I in [{"<0>"}, {"<0>", "<4>"}, {"<0>", "<6>", "<4>", "<2>"}]:
    print(sorted(I), closed_subscheme_comparison(s, I).details["isomorphic"])
