"""Spectral localization regions for dual-frame multipliers.

Each criterion either returns a :class:`Region` known to contain the
spectrum, or is a *resolvent predicate*: a vectorized function of ``lam``
that returns ``True`` only where ``M - lam I`` is provably invertible.
Predicates demand a margin of ``STRICT_MARGIN`` in their strict
inequalities, so ties are never certified.

:func:`region_scan` rasterizes a predicate into a :class:`GridMask`.  The
mask marks *certified resolvent* points; the spectrum lies in the unmarked
complement.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from . import frames as fr
from . import numerics as nx
from .errors import CriterionVoidError, DualityError, HypothesisError, ValidationError
from .multipliers import as_symbol

STRICT_MARGIN = 1e-12
MEMBERSHIP_TOL = 1e-12
DEFAULT_RESOLUTION = 401


# ---------------------------------------------------------------------------
# Regions


def _axis(lo, hi, n):
    t = np.linspace(lo, hi, n)
    t[np.abs(t) <= 1e-14 * (hi - lo)] = 0.0
    return t


@dataclass(frozen=True, eq=False)
class Region:
    provenance: dict = field(default_factory=dict, kw_only=True)

    kind = "region"

    def margin(self, z):
        """Signed distance-like margin: negative inside, positive outside."""
        raise NotImplementedError

    def contains(self, z, tol=0.0):
        return self.margin(z) <= tol

    def bbox(self):
        """``(xmin, xmax, ymin, ymax)`` or ``None`` when unbounded."""
        return None


@dataclass(frozen=True, eq=False)
class WholePlane(Region):
    kind = "whole_plane"

    def margin(self, z):
        return np.full(np.shape(z), -np.inf) if np.ndim(z) else -np.inf


@dataclass(frozen=True, eq=False)
class Disk(Region):
    center: complex = 0j
    radius: float = 0.0

    kind = "disk"

    def __post_init__(self):
        if not self.radius >= 0:
            raise ValidationError("disk radius must be non-negative")
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))

    def margin(self, z):
        return np.abs(np.asarray(z) - self.center) - self.radius

    def bbox(self):
        c, r = self.center, self.radius
        return (c.real - r, c.real + r, c.imag - r, c.imag + r)


def _interval_margin(z, lo, hi):
    z = np.asarray(z, dtype=complex)
    x, y = z.real, np.abs(z.imag)
    excess = np.maximum(lo - x, x - hi)
    outside = np.hypot(np.maximum(excess, 0.0), y)
    return np.where(excess > 0, outside, np.maximum(excess, y))


@dataclass(frozen=True, eq=False)
class Interval(Region):
    """A closed real interval, viewed as a subset of the complex plane."""

    lo: float = 0.0
    hi: float = 0.0

    kind = "interval"

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValidationError(f"empty interval [{self.lo}, {self.hi}]")
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))

    def margin(self, z):
        return _interval_margin(z, self.lo, self.hi)

    def bbox(self):
        return (self.lo, self.hi, 0.0, 0.0)


@dataclass(frozen=True, eq=False)
class IntervalUnion(Region):
    """Disjoint sorted closed intervals; no intervals means the empty set."""

    intervals: tuple = ()

    kind = "interval_union"

    def __post_init__(self):
        ivs = tuple((float(a), float(b)) for a, b in self.intervals)
        for a, b in ivs:
            if not a <= b:
                raise ValidationError(f"empty interval [{a}, {b}]")
        for (a0, b0), (a1, b1) in zip(ivs, ivs[1:]):
            if not b0 < a1:
                raise ValidationError("intervals must be disjoint and sorted")
        object.__setattr__(self, "intervals", ivs)

    def margin(self, z):
        if not self.intervals:
            return np.full(np.shape(z), np.inf) if np.ndim(z) else np.inf
        return np.min([_interval_margin(z, a, b) for a, b in self.intervals], axis=0)

    def bbox(self):
        if not self.intervals:
            return None
        return (self.intervals[0][0], self.intervals[-1][1], 0.0, 0.0)


@dataclass(frozen=True, eq=False)
class Polygon(Region):
    polygon: nx.Polygon2D = None

    kind = "polygon"

    def margin(self, z):
        if np.ndim(z) == 0:
            return nx.dist_to_polygon(z, self.polygon)
        z = np.asarray(z)
        return np.array([nx.dist_to_polygon(w, self.polygon) for w in z.ravel()]).reshape(z.shape)

    def bbox(self):
        v = np.array(self.polygon.vertices)
        return (v.real.min(), v.real.max(), v.imag.min(), v.imag.max())


@dataclass(frozen=True, eq=False)
class GridMask(Region):
    """Grid over ``box``; ``certified[iy, ix]`` is True where the point is proven resolvent.

    The enclosure is the complement of the certified points.  ``margin(z)``
    is minus the distance from ``z`` to the nearest certified grid point,
    and ``contains(z, tol)`` fails only when a certified point lies within
    ``tol`` of ``z``.
    """

    box: tuple = (-1.0, 1.0, -1.0, 1.0)
    certified: np.ndarray = None

    kind = "grid_mask"

    def __post_init__(self):
        c = np.array(self.certified, dtype=bool, copy=True)
        if c.ndim != 2 or min(c.shape) < 2:
            raise ValidationError("grid mask needs at least 2 points per axis")
        c.flags.writeable = False
        object.__setattr__(self, "certified", c)
        object.__setattr__(self, "box", tuple(float(v) for v in self.box))

    @property
    def resolution(self):
        ny, nx_ = self.certified.shape
        return nx_, ny

    @property
    def xs(self):
        return _axis(self.box[0], self.box[1], self.certified.shape[1])

    @property
    def ys(self):
        return _axis(self.box[2], self.box[3], self.certified.shape[0])

    @property
    def points(self):
        return self.xs[None, :] + 1j * self.ys[:, None]

    @property
    def certified_points(self):
        return self.points[self.certified]

    def margin(self, z):
        cp = self.certified_points
        z = np.asarray(z, dtype=complex)
        if cp.size == 0:
            return np.full(z.shape, -np.inf) if z.ndim else -np.inf
        tree = cKDTree(np.column_stack([cp.real, cp.imag]))
        flat = z.ravel()
        d, _ = tree.query(np.column_stack([flat.real, flat.imag]))
        return -d.reshape(z.shape) if z.ndim else -float(d[0])

    def contains(self, z, tol=0.0):
        m = self.margin(z)
        return (m < -tol) if tol > 0 else (m < 0)

    def bbox(self):
        return self.box

    def real_axis_row(self):
        """``(xs, certified)`` for the row at ``y == 0``; requires the row to exist."""
        ys = self.ys
        iy = int(np.argmin(np.abs(ys)))
        if ys[iy] != 0:
            raise ValidationError("grid has no row on the real axis")
        return self.xs, self.certified[iy]


# ---------------------------------------------------------------------------
# Helpers


def _require_dual(phi, psi):
    ok, defect = fr.is_dual_pair(phi, psi)
    if not ok:
        raise DualityError(f"phi and psi are not dual frames (defect {defect:.3g})")


def _strict(lhs, rhs):
    return (np.asarray(rhs) - np.asarray(lhs)) > STRICT_MARGIN


def _sup_inf_dist(values, lam):
    """Vectorized ``(sup, inf)`` of ``|values - lam|``; uses chunks over lam for memory."""
    lam = np.asarray(lam, dtype=complex)
    flat = lam.ravel()
    if values.size == 0:
        return np.zeros(lam.shape), np.full(lam.shape, np.inf)
    sup = np.empty(flat.shape)
    inf = np.empty(flat.shape)
    step = max(1, 2_000_000 // values.size)
    for s in range(0, flat.size, step):
        D = np.abs(flat[s:s + step, None] - values[None, :])
        sup[s:s + step] = D.max(axis=1)
        inf[s:s + step] = D.min(axis=1)
    return sup.reshape(lam.shape), inf.reshape(lam.shape)


# ---------------------------------------------------------------------------
# Norm-based disks


def bessel_disk(m, phi, psi):
    """Disk about the origin with radius ``sup |m| sqrt(B_phi B_psi)``; any Bessel pair."""
    m = as_symbol(m)
    b_phi, b_psi = fr.bessel_bound(phi), fr.bessel_bound(psi)
    r = m.sup_norm * np.sqrt(b_phi * b_psi)
    return Disk(0j, r, provenance={"criterion": "bessel_disk", "B_phi": b_phi, "B_psi": b_psi, "sup_m": m.sup_norm})


def hull_enclosure(m, phi, psi=None):
    """Convex hull of the symbol values; valid when ``psi`` is the canonical dual of ``phi``.

    For a real symbol the hull is the interval ``[min m, max m]``.
    """
    m = as_symbol(m)
    if len(m) != phi.count:
        raise ValidationError(f"symbol length {len(m)} does not match family size {phi.count}")
    if psi is not None and not fr.is_canonical_dual(phi, psi):
        raise HypothesisError(
            "convex-hull enclosure needs the canonical dual; it fails for general duals "
            "(phi = {e1, e1, e2, ...}, psi = {i e1, (1-i) e1, e2, ...}, m = {2, 1, 1, ...} "
            "has eigenvalue 1-i outside [1, 2])"
        )
    prov = {"criterion": "convex_hull"}
    if m.is_real:
        return Interval(float(m.real.min()), float(m.real.max()), provenance=prov)
    return Polygon(polygon=nx.convex_hull(m.values), provenance=prov)


def dual_disk_item1(m, phi, psi, mu=None, r=None):
    """Disk ``(mu, r sqrt(B_phi B_psi))`` for a symbol inside the disk ``(mu, r)``.

    Defaults to the smallest disk enclosing the symbol values.
    """
    m = as_symbol(m)
    _require_dual(phi, psi)
    if mu is None:
        mu, r0 = nx.min_enclosing_disk(m.values)
        r = r0 if r is None else r
    elif r is None:
        r = float(np.max(np.abs(m.values - mu)))
    mu = complex(mu)
    if np.max(np.abs(m.values - mu)) > r + MEMBERSHIP_TOL * max(1.0, r):
        raise ValidationError(f"symbol is not inside the disk ({mu}, {r})")
    b_phi, b_psi = fr.bessel_bound(phi), fr.bessel_bound(psi)
    return Disk(mu, r * np.sqrt(b_phi * b_psi),
                provenance={"criterion": "dual_disk", "mu": mu, "r": float(r), "B_phi": b_phi, "B_psi": b_psi})


def dual_disk_item2(m, phi, psi):
    """Disk centred at the midrange of a real symbol, radius half-range times ``sqrt(B_phi B_psi)``."""
    m = as_symbol(m)
    if not m.is_real:
        raise ValidationError("midrange disk needs a real symbol")
    _require_dual(phi, psi)
    hi, lo = float(m.real.max()), float(m.real.min())
    b_phi, b_psi = fr.bessel_bound(phi), fr.bessel_bound(psi)
    return Disk((hi + lo) / 2, (hi - lo) / 2 * np.sqrt(b_phi * b_psi),
                provenance={"criterion": "dual_disk_midrange", "B_phi": b_phi, "B_psi": b_psi})


def _mu_candidates(values, n=9):
    c, r = nx.min_enclosing_disk(values)
    r = max(r, 1e-12)
    g = np.linspace(-r, r, n)
    grid = (c + g[None, :] + 1j * g[:, None]).ravel()
    return np.concatenate([[c], grid])


def pertII_resolvent_predicate(lam, mu, m, phi, psi):
    """True where ``||m - mu||_inf sqrt(B_phi B_psi) < |mu - lam|`` certifies ``lam`` resolvent.

    ``mu=None`` tries the symbol's Chebyshev centre and a 9 x 9 grid around it.
    """
    m = as_symbol(m)
    _require_dual(phi, psi)
    c = np.sqrt(fr.bessel_bound(phi) * fr.bessel_bound(psi))
    mus = _mu_candidates(m.values) if mu is None else [complex(mu)]
    lam = np.asarray(lam, dtype=complex)
    out = np.zeros(lam.shape, dtype=bool)
    for u in mus:
        out |= _strict(np.max(np.abs(m.values - u)) * c, np.abs(u - lam))
    return out if out.ndim else bool(out)


# ---------------------------------------------------------------------------
# Riesz-basis split


@dataclass(frozen=True, eq=False)
class RieszSplitData:
    """Bounds for a split ``N = I + complement`` where both ``phi_I`` and ``psi_I`` are Riesz bases."""

    index: np.ndarray
    complement: np.ndarray
    A_phi1: float
    A_psi1: float
    B_phi2: float
    B_psi2: float

    @property
    def lower_product(self):
        return np.sqrt(self.A_phi1 * self.A_psi1)

    @property
    def upper_product(self):
        return np.sqrt(self.B_phi2 * self.B_psi2)


def riesz_split_data(phi, psi, index):
    index = np.asarray(index, dtype=int)
    comp = fr.complement_index(phi.count, index)
    return RieszSplitData(
        index, comp,
        fr.riesz_lower_bound(phi, index), fr.riesz_lower_bound(psi, index),
        fr.bessel_bound(phi, comp), fr.bessel_bound(psi, comp),
    )


def riesz_split_invertible(m, phi, psi, data):
    """``sup_{n not in I} |m_n| sqrt(B2 B2') < inf_{n in I} |m_n| sqrt(A1 A1')`` implies M bijective.

    Duality of ``phi`` and ``psi`` is not needed here.
    """
    v = as_symbol(m).values
    lhs = (np.max(np.abs(v[data.complement])) if data.complement.size else 0.0) * data.upper_product
    rhs = np.min(np.abs(v[data.index])) * data.lower_product
    return bool(_strict(lhs, rhs))


def riesz_split_resolvent(lam, m, phi, psi, data):
    """Shifted split condition; needs ``(phi, psi)`` dual so that ``M - lam = M_{m - lam}``."""
    _require_dual(phi, psi)
    v = as_symbol(m).values
    sup, _ = _sup_inf_dist(v[data.complement], lam)
    _, inf = _sup_inf_dist(v[data.index], lam)
    out = _strict(sup * data.upper_product, inf * data.lower_product)
    return out if np.ndim(out) else bool(out)


def riesz_split_region_01(A):
    """Closed-form enclosure ``[0, 1-A] U [A, 1]`` for 0-1 symbols on a Parseval frame
    whose even-position vectors form a Riesz basis with lower bound ``A``.
    """
    if not A > 0.5:
        raise CriterionVoidError(f"the split criterion certifies nothing in [0, 1] unless A > 1/2 (A = {A})")
    if A > 1:
        raise ValidationError("a Parseval sub-family has Riesz bound at most 1")
    return IntervalUnion(((0.0, 1.0 - A), (A, 1.0)), provenance={"criterion": "riesz_split_01", "A": A})


def corollary_resolvent(lam, m, phi, index, Aprime=None):
    """Split condition for ``psi`` the canonical dual, using only the bounds of ``phi``:

    ``sup_{n not in I} |m_n - lam| (B - A')/A < inf_{n in I} |m_n - lam| A'/B``.
    """
    v = as_symbol(m).values
    index = np.asarray(index, dtype=int)
    comp = fr.complement_index(phi.count, index)
    A, B = fr.frame_bounds(phi)
    if Aprime is None:
        Aprime = fr.riesz_lower_bound(phi, index)
    sup, _ = _sup_inf_dist(v[comp], lam)
    _, inf = _sup_inf_dist(v[index], lam)
    out = _strict(sup * max(B - Aprime, 0.0) / A, inf * Aprime / B)
    return out if np.ndim(out) else bool(out)


# ---------------------------------------------------------------------------
# Unions of scaled orthonormal bases


@dataclass(frozen=True, eq=False)
class OnbUnionData:
    """Branch decomposition of a symbol on an interleaved union of ``k`` scaled ONBs."""

    k: int
    weights: np.ndarray
    branch_symbols: tuple
    ells: np.ndarray

    @property
    def alphas(self):
        """The moduli ``|alpha_j|``; ``weights`` holds their squares."""
        return np.sqrt(self.weights)


def split_branches(m, k):
    v = as_symbol(m).values
    if v.size % k:
        raise ValidationError(f"symbol length {v.size} is not a multiple of k={k}")
    return tuple(v[j::k] for j in range(k))


def onb_union_data(m, phi, k, ells=None, tol=1e-9):
    """Recover ``|alpha_j|`` from ``phi`` and check each branch is a scaled ONB.

    ``ells`` default to the Chebyshev centres of the branch symbols.
    """
    if phi.count != k * phi.dim:
        raise HypothesisError(f"frame with {phi.count} vectors is not a union of {k} bases of C^{phi.dim}")
    weights = []
    for j in range(k):
        P = phi.synthesis[:, j::k]
        G = P.conj().T @ P
        a2 = float(np.real(np.mean(np.diag(G))))
        if nx.max_abs(G - a2 * np.eye(phi.dim)) > tol * max(1.0, a2):
            raise HypothesisError(f"branch {j} is not a scaled orthonormal basis")
        weights.append(a2)
    branches = split_branches(m, k)
    if ells is None:
        ells = [nx.min_enclosing_disk(b)[0] for b in branches]
    ells = np.asarray(ells, dtype=complex)
    if ells.size != k:
        raise ValidationError(f"need {k} shift parameters")
    return OnbUnionData(k, np.array(weights), branches, ells)


def onb_union_disk(data):
    """The complement of the ``onb_union_resolvent`` certified set: a closed disk."""
    w = data.weights
    radius = float(sum(wj * np.max(np.abs(b - l)) for wj, b, l in zip(w, data.branch_symbols, data.ells)))
    center = complex(np.sum(w * data.ells))
    return Disk(center, radius, provenance={"criterion": "onb_union", "ells": data.ells.tolist()})


def onb_union_resolvent(lam, data):
    """``sum_j |a_j|^2 sup_i |m_ij - l_j| < |sum_j |a_j|^2 l_j - lam|`` certifies ``lam`` resolvent."""
    disk = onb_union_disk(data)
    out = _strict(disk.radius, np.abs(disk.center - np.asarray(lam, dtype=complex)))
    return out if np.ndim(out) else bool(out)


def onb_union_interval(data):
    """``[sum_j |a_j|^2 min_i m_ij, sum_j |a_j|^2 max_i m_ij]`` for real branch symbols."""
    if not all(np.all(b.imag == 0) for b in data.branch_symbols):
        raise ValidationError("interval form needs real branch symbols")
    w = data.weights
    lo = float(sum(wj * b.real.min() for wj, b in zip(w, data.branch_symbols)))
    hi = float(sum(wj * b.real.max() for wj, b in zip(w, data.branch_symbols)))
    return Interval(lo, hi, provenance={"criterion": "onb_union_interval", "weights": w.tolist()})


# ---------------------------------------------------------------------------
# Rasterization and intersection


def default_box(m, phi, psi, inflate=0.1, min_radius=1e-3):
    """Bessel disk bounding box, inflated; the floor keeps grid spacing well above test tolerances."""
    r = bessel_disk(m, phi, psi).radius
    r = (1 + inflate) * max(r, min_radius)
    return (-r, r, -r, r)


def _resolution(resolution):
    if np.ndim(resolution) == 0:
        return int(resolution), int(resolution)
    return int(resolution[0]), int(resolution[1])


def region_scan(predicate, box, resolution=DEFAULT_RESOLUTION, provenance=None):
    """Evaluate a vectorized resolvent predicate on a grid over ``box``."""
    nx_, ny = _resolution(resolution)
    x0, x1, y0, y1 = box
    if nx_ < 2 or ny < 2:
        raise ValidationError("resolution must be at least 2 per axis")
    if not (x0 < x1 and y0 < y1):
        raise ValidationError(f"empty scan box {box}")
    Z = _axis(x0, x1, nx_)[None, :] + 1j * _axis(y0, y1, ny)[:, None]
    mask = np.asarray(predicate(Z), dtype=bool)
    return GridMask(box=box, certified=mask, provenance=dict(provenance or {"criterion": "scan"}))


def _intersect_intervals(a, b):
    out = []
    for lo0, hi0 in a:
        for lo1, hi1 in b:
            lo, hi = max(lo0, lo1), min(hi0, hi1)
            if lo <= hi:
                out.append((lo, hi))
    out.sort()
    merged = []
    for lo, hi in out:
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(hi, merged[-1][1]))
        else:
            merged.append((lo, hi))
    return merged


def _as_intervals(r):
    return [(r.lo, r.hi)] if isinstance(r, Interval) else list(r.intervals)


def intersect(regions, resolution=DEFAULT_RESOLUTION):
    """Intersection of enclosures.

    Exact for intervals/interval unions and for nested disks; everything
    else is rasterized to a common :class:`GridMask`.
    """
    regions = [r for r in regions if not isinstance(r, WholePlane)]
    prov = {"criterion": "intersection", "parts": [r.provenance.get("criterion", r.kind) for r in regions]}
    if not regions:
        return WholePlane(provenance=prov)
    if len(regions) == 1:
        return regions[0]
    if all(isinstance(r, (Interval, IntervalUnion)) for r in regions):
        ivs = _as_intervals(regions[0])
        for r in regions[1:]:
            ivs = _intersect_intervals(ivs, _as_intervals(r))
        if len(ivs) == 1:
            return Interval(*ivs[0], provenance=prov)
        return IntervalUnion(tuple(ivs), provenance=prov)
    if all(isinstance(r, Disk) for r in regions):
        smallest = min(regions, key=lambda r: r.radius)
        if all(abs(smallest.center - r.center) + smallest.radius <= r.radius for r in regions):
            return Disk(smallest.center, smallest.radius, provenance=prov)

    boxes = [r.bbox() for r in regions if r.bbox() is not None]
    x0 = max(b[0] for b in boxes)
    x1 = min(b[1] for b in boxes)
    y0 = max(b[2] for b in boxes)
    y1 = min(b[3] for b in boxes)
    pad = 0.05 * max(x1 - x0, y1 - y0, 1e-6)
    box = (x0 - pad, x1 + pad, y0 - pad, y1 + pad)

    def outside_some(Z):
        out = np.zeros(Z.shape, dtype=bool)
        for r in regions:
            out |= ~np.asarray(r.contains(Z, MEMBERSHIP_TOL))
        return out

    return region_scan(outside_some, box, resolution, provenance=prov)
