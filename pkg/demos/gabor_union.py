"""
Gabor systems as unions of Riesz bases
======================================

On Z_64 the box window of length 8 with time step 8 and frequency step 8
gives an orthonormal basis.  Halving the time step doubles the system; it
splits into two translate classes, each an orthonormal basis, so the
refined frame is tight with bound 2.
"""

import numpy as np

from framespec import enclosures as en
from framespec import frames as fr
from framespec import multipliers as mu

p = fr.GaborParams(64, time_step=8, freq_step=8)
base = fr.gabor_frame(p)
print("base:", base.count, "vectors, bounds", fr.frame_bounds(base))

refined = fr.gabor_frame(p.refine_time(2))
classes = fr.gabor_riesz_split(p, 2)
print("refined:", refined.count, "vectors, bounds", fr.frame_bounds(refined))
print("class Riesz bounds:", [fr.riesz_lower_bound(refined, I) for I in classes])

# %%
# With the canonical dual both split products equal 1/2, so a 0-1 symbol
# that takes both values on both classes certifies nothing.  A symbol that
# is 1 on the first class and small on the second opens a certified region.
rng = np.random.default_rng(3)
m = np.empty(refined.count)
m[classes[0]] = 1.0
m[classes[1]] = rng.choice([0.0, 0.2], size=classes[1].size)
psi = fr.canonical_dual(refined).psi
data = en.riesz_split_data(refined, psi, classes[0])
print("split products:", data.lower_product, data.upper_product)
ev = mu.spectrum_of(mu.assemble(m, refined, psi)).real
print(f"spectrum: [{ev.min():.4f}, {ev.max():.4f}]")
mask = en.region_scan(lambda lam: en.riesz_split_resolvent(lam, m, refined, psi, data),
                      en.default_box(m, refined, psi), 101)
print("certified grid points:", int(mask.certified.sum()), "of", mask.certified.size)
print("spectrum avoids certified points:", bool(np.all(mask.contains(ev, 1e-7))))
