"""
Numerical range versus spectrum
===============================

For a canonical dual pair the spectrum lies in the convex hull of the
symbol, but the numerical range need not.  A small search over frames in
C^2 finds a unit vector x with <Mx, x> outside the hull.
"""

import numpy as np

from framespec import enclosures as en
from framespec import frames as fr
from framespec import multipliers as mu
from framespec.verify import run_numrange_witness_search

res = run_numrange_witness_search(seed=0, budget=1000)
v = res.values
print("found:", v["found"], "at trial", v.get("trial"))

phi = fr.Frame(v["synthesis"])
M = mu.assemble(v["symbol"], phi, fr.canonical_dual(phi).psi)
hull = en.hull_enclosure(v["symbol"], phi)
print("frame bounds:", v["frame_bounds"])
print("symbol hull:", hull)
print("spectrum:", mu.spectrum_of(M))
print(f"witness <Mx, x> = {v['witness']:.6f}, distance outside hull {v['witness_excess']:.3e}")

# %%
# The outer polygon of the numerical range for comparison.
W = mu.numerical_range_hull(M, angles=64)
print("numerical range real extent:", min(z.real for z in W.vertices), max(z.real for z in W.vertices))

# %%
# For a Parseval frame the range collapses back into the hull.
rho = fr.canonical_parseval(phi)
W = mu.numerical_range_hull(mu.assemble(v["symbol"], rho, rho), angles=256)
print("Parseval version, max distance outside hull:", max(hull.margin(np.array(W.vertices))))
