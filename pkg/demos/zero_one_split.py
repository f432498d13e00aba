"""
Gap in the spectrum of a 0-1 multiplier
=======================================

A Parseval frame is built from two orthonormal bases scaled by sqrt(1-A)
and sqrt(A).  The sqrt(A) vectors form a Riesz basis with lower bound A,
and the rest is a Bessel family with bound 1-A.

For any symbol with values in {0, 1} the split criterion certifies every
real point strictly between 1-A and A, which opens a gap in [0, 1].  The
grid scan of the predicate reproduces the closed form up to one cell.
"""

import numpy as np

from framespec import enclosures as en
from framespec import multipliers as mu
from framespec import serialize as ser
from framespec.verify import random_zero_one, riesz_split_scan_agreement, zero_one_frame

A = 0.75
phi, I = zero_one_frame(64, A, seed=1)
m = random_zero_one(phi.count, np.random.default_rng(7))

data = en.riesz_split_data(phi, phi, I)
print(f"Riesz bound of the split: {data.A_phi1:.12f}, Bessel bound of the rest: {data.B_phi2:.12f}")

ev = mu.spectrum_of(mu.assemble(m, phi, phi)).real
region = en.riesz_split_region_01(A)
print("closed form:", region.intervals)
print("eigenvalues strictly inside the gap:", int(np.sum((ev > 1 - A + 1e-9) & (ev < A - 1e-9))))
print("eigenvalues sitting on 1-A or A:", int(np.sum(np.minimum(abs(ev - (1 - A)), abs(ev - A)) < 1e-9)))

# %%
# Scan the predicate on a thin box around [0, 1]; only the y = 0 row matters.
mask = en.region_scan(lambda lam: en.riesz_split_resolvent(lam, m, phi, phi, data),
                      (-0.1, 1.1, -0.1, 0.1), (2001, 3))
xs, cert = mask.real_axis_row()
print(f"certified on the real axis: [{xs[cert].min():.4f}, {xs[cert].max():.4f}]")
print("agrees with closed form:", riesz_split_scan_agreement(mask, A))

# %%
# The mask serializes as run-length rows for plotting elsewhere.
print(ser.dumps(ser.region_to_dict(mask))[:200], "...")
