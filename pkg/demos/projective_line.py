"""
The projective line over F2, chart by chart
===========================================

Two affine charts F2[x] and F2[y] are glued along x = 1/y.  Each chart
contributes its truncated prime k-ideals and the overlap identifies the
points away from <x> and <y>.
"""

import random

from tropalg.semiring import fixtures_dir
from tropalg.sheaves import check_trop_scheme, load_gluing, trop_scheme
from tropalg.errors import DescentError

gluing = fixtures_dir() / "gluing"

g = load_gluing(str(gluing / "p1_f2.json"))
data = trop_scheme(g, bound=3, rng=random.Random(0))
print(check_trop_scheme(data).to_json())

# how a point moves between the charts
for p, q in sorted(data.identifications[(0, 1)].items(), key=repr):
    print(f"{p!r:>14}  ->  {q!r}")

# broken gluing data is refused with a witness
try:
    trop_scheme(load_gluing(str(gluing / "bad_cocycle_f2.json")), 3)
except DescentError as exc:
    print("refused:", exc, exc.witness)
