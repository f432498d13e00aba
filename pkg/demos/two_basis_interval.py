"""
Spectrum of a multiplier on a union of two orthonormal bases
============================================================

Two orthonormal bases of C^64, each scaled by 1/sqrt(2), are interleaved
into a Parseval frame.  The symbol cycles through 0, 1/3, 2/3, 1, so the
first basis sees {0, 2/3} and the second sees {1/3, 1}.

The convex hull of the symbol only tells us the spectrum lies in [0, 1].
Weighting the per-basis extremes gives the sharper interval [1/6, 5/6].
"""

import numpy as np

from framespec import enclosures as en
from framespec import multipliers as mu
from framespec.verify import EX52_PATTERN, two_onb_frame

d = 64
m = mu.Symbol.periodic(EX52_PATTERN, 2 * d)

# %%
# With a random second basis the spectrum sits strictly inside.
phi = two_onb_frame(d, seed=0)
M = mu.assemble(m, phi, phi)
ev = mu.spectrum_of(M).real
print("hull of symbol:", en.hull_enclosure(m, phi))
data = en.onb_union_data(m, phi, k=2)
print("branch weights:", data.weights)
print("interval      :", en.onb_union_interval(data))
print(f"spectrum      : [{ev.min():.6f}, {ev.max():.6f}]")

# %%
# When both bases coincide the operator is diagonal with entries
# (0 + 1/3)/2 and (2/3 + 1)/2, so the interval is attained.
phi = two_onb_frame(d, aligned=True)
ev = mu.spectrum_of(mu.assemble(m, phi, phi)).real
print("aligned bases :", sorted(set(np.round(ev, 12))))
