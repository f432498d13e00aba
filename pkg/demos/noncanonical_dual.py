"""
The convex hull needs the canonical dual
========================================

With phi = {e1, e1, e2, ...} and the alternate dual
psi = {i e1, (1-i) e1, e2, ...}, the symbol {2, 1, 1, ...} has hull [1, 2],
yet the multiplier has eigenvalue 1 - i, at distance 1 from that segment.
Disk enclosures that only use Bessel bounds remain valid.
"""

import numpy as np

from framespec import enclosures as en
from framespec import frames as fr
from framespec import multipliers as mu
from framespec.errors import HypothesisError
from framespec.verify import counterexample_pair

d = 6
pair, _ = counterexample_pair(d)
print("duality defect:", pair.defect, "canonical:", pair.canonical)
print(np.round(pair.psi.synthesis, 12))

m = np.r_[2.0, np.ones(d)]
ev = mu.spectrum_of(mu.assemble(m, pair.phi, pair.psi))
print("eigenvalues:", ev)

hull = en.hull_enclosure(m, pair.phi)
print("hull:", hull, "distance of 1-i:", hull.margin(1 - 1j))

try:
    en.hull_enclosure(m, pair.phi, pair.psi)
except HypothesisError as exc:
    print("refused:", exc)

for region in (en.bessel_disk(m, pair.phi, pair.psi), en.dual_disk_item1(m, pair.phi, pair.psi)):
    print(region.provenance["criterion"], region, "contains spectrum:", bool(np.all(region.contains(ev))))

# %%
# With the canonical dual the hull is an enclosure again.
C = fr.canonical_dual(pair.phi).psi
print("canonical-dual spectrum:", mu.spectrum_of(mu.assemble(m, pair.phi, C)))
