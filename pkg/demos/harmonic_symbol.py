"""
Invertibility from a symbol that approaches zero
================================================

On the same union of two scaled orthonormal bases, take the symbol
m[2n-1] = 1/(n+1) and m[2n] = 2 - 1/(n+1).  The first branch accumulates
at 0, so the hull criterion cannot rule out 0 from the spectrum.  The
split criterion and the weighted-basis interval both certify that the
multiplier is invertible.
"""

import numpy as np

from framespec import enclosures as en
from framespec import multipliers as mu
from framespec.verify import two_onb_frame

N = 64
phi = two_onb_frame(N, seed=0)
m = mu.Symbol.harmonic_pairs(N)
M = mu.assemble(m, phi, phi)

print("hull:", en.hull_enclosure(m, phi))
interval = en.onb_union_interval(en.onb_union_data(m, phi, 2))
print(f"weighted interval: [{interval.lo:.6f}, {interval.hi:.6f}] (limit [0.75, 1.25])")

split = en.riesz_split_data(phi, phi, np.arange(1, 2 * N, 2))
print("split criterion certifies invertibility:", en.riesz_split_invertible(m, phi, phi, split))
ok, smin = mu.is_invertible(M)
print(f"smallest singular value: {smin:.6f}")
