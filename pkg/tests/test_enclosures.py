import numpy as np
import pytest

from framespec import enclosures as en
from framespec import frames as fr
from framespec import multipliers as mu
from framespec import numerics as nx
from framespec.errors import CriterionVoidError, DualityError, HypothesisError, ValidationError
from framespec.verify import EX52_PATTERN, counterexample_pair, two_onb_frame, zero_one_frame

from .conftest import random_complex


def ex52(d=8, seed=0, aligned=False):
    phi = two_onb_frame(d, seed, aligned)
    return phi, mu.Symbol.periodic(EX52_PATTERN, 2 * d)


def harmonic(pairs=16, seed=0):
    phi = two_onb_frame(pairs, seed)
    return phi, mu.Symbol.harmonic_pairs(pairs)


# --- region types -----------------------------------------------------------


def test_region_membership():
    D = en.Disk(1j, 1)
    assert D.contains(1j) and D.contains(0) and not D.contains(2)
    assert D.margin(1j + 2) == pytest.approx(1)
    with pytest.raises(ValidationError):
        en.Disk(0, -1)
    iv = en.Interval(0, 1)
    assert iv.contains(0.5) and not iv.contains(0.5 + 1e-3j) and iv.contains(0.5 + 1e-3j, 1e-2)
    assert iv.margin(2) == pytest.approx(1) and iv.margin(0.5) == 0  # segment has no interior in C
    U = en.IntervalUnion(((0, 0.25), (0.75, 1)))
    assert U.contains(0.1) and not U.contains(0.5) and U.margin(0.5) == pytest.approx(0.25)
    with pytest.raises(ValidationError):
        en.IntervalUnion(((0, 0.5), (0.4, 1)))
    assert en.WholePlane().contains(1e9)


def test_grid_mask_orientation():
    cert = np.zeros((3, 5), dtype=bool)
    cert[:, 0] = True
    G = en.GridMask(box=(0, 4, -1, 1), certified=cert)
    assert G.resolution == (5, 3)
    np.testing.assert_array_equal(G.xs, [0, 1, 2, 3, 4])
    assert not G.contains(0) and G.contains(2)
    xs, row = G.real_axis_row()
    np.testing.assert_array_equal(row, cert[1])
    with pytest.raises(ValidationError):
        en.GridMask(box=(0, 1, 0, 1), certified=np.zeros((1, 4), dtype=bool))


# --- disks and hull ---------------------------------------------------------


def test_bessel_disk_examples():
    phi, m = ex52()
    D = en.bessel_disk(m, phi, phi)
    assert D.center == 0 and D.radius == pytest.approx(1)
    assert en.bessel_disk(np.zeros(16), phi, phi).radius == 0
    A = 0.75
    F, _ = zero_one_frame(4, A, seed=1)
    assert en.bessel_disk(mu.Symbol.periodic([0, 1], 8), F, F).radius == pytest.approx(1)


def test_hull_examples():
    F = fr.Frame(random_complex(np.random.default_rng(0), 3, 4))
    r = en.hull_enclosure([0, 0.3, 1, 0.7], F)
    assert isinstance(r, en.Interval) and (r.lo, r.hi) == (0, 1)
    pair, _ = counterexample_pair(4)
    m = [2, 1, 1, 1, 1]
    seg = en.hull_enclosure(m, pair.phi)
    assert (seg.lo, seg.hi) == (1, 2)
    assert seg.margin(1 - 1j) == pytest.approx(1, abs=1e-12)
    c = en.hull_enclosure(mu.Symbol.constant(0.5, 4), F)
    assert c.lo == c.hi == 0.5
    tri = en.hull_enclosure([0, 1, 1j, 0.2 + 0.2j], F)
    assert isinstance(tri, en.Polygon) and len(tri.polygon) == 3


def test_hull_refuses_non_canonical_dual():
    pair, _ = counterexample_pair(4)
    with pytest.raises(HypothesisError, match="canonical"):
        en.hull_enclosure([2, 1, 1, 1, 1], pair.phi, pair.psi)
    en.hull_enclosure([2, 1, 1, 1, 1], pair.phi, fr.canonical_dual(pair.phi).psi)


def test_dual_disk_examples():
    phi, m = ex52()
    D = en.dual_disk_item1(m, phi, phi)
    c, r = nx.min_enclosing_disk(m.values)
    assert D.center == c and D.radius == pytest.approx(r)
    D2 = en.dual_disk_item2(m, phi, phi)
    assert D2.center == pytest.approx(0.5) and D2.radius == pytest.approx(0.5)
    D1 = en.dual_disk_item1(m, phi, phi, mu=0.5)
    assert D1.radius == pytest.approx(D2.radius)
    C = en.dual_disk_item1(mu.Symbol.constant(0.3, 16), phi, phi)
    assert C.center == pytest.approx(0.3) and C.radius == pytest.approx(0, abs=1e-15)
    with pytest.raises(ValidationError):
        en.dual_disk_item1(m, phi, phi, mu=0, r=0.5)
    with pytest.raises(DualityError):
        en.dual_disk_item1(m, phi, fr.Frame(np.hstack([np.eye(8)] * 2)))
    phi, h = harmonic()
    D = en.dual_disk_item2(h, phi, phi)
    assert D.center == pytest.approx(1) and D.radius == pytest.approx(1 - 1 / 17)


def test_pertII_predicate(rng):
    phi, m = ex52()
    assert en.pertII_resolvent_predicate(2.0, None, m, phi, phi)
    assert not en.pertII_resolvent_predicate(0.5, None, m, phi, phi)
    # ||m - 1/2|| = 1/2 against |1/2 - lam|
    assert not en.pertII_resolvent_predicate(0.9, 0.5, m, phi, phi)
    assert en.pertII_resolvent_predicate(-0.6, 0.5, m, phi, phi)
    # ||m - 0|| = 1 against |lam|
    assert not en.pertII_resolvent_predicate(-0.6, 0.0, m, phi, phi)


# --- Riesz split ------------------------------------------------------------


def test_riesz_split_data():
    F, I = zero_one_frame(6, 0.75, seed=2)
    data = en.riesz_split_data(F, F, I)
    assert data.A_phi1 == pytest.approx(0.75) and data.B_phi2 == pytest.approx(0.25)
    np.testing.assert_array_equal(data.complement, np.arange(0, 12, 2))


def test_riesz_split_invertible_examples():
    F, I = zero_one_frame(6, 0.75, seed=2)
    data = en.riesz_split_data(F, F, I)
    m = np.zeros(12)
    m[I] = 1
    assert en.riesz_split_invertible(m, F, F, data)
    assert mu.is_invertible(mu.assemble(m, F, F))[0]
    m[I[0]] = 0
    assert not en.riesz_split_invertible(m, F, F, data)
    phi, h = harmonic()
    data = en.riesz_split_data(phi, phi, np.arange(1, 32, 2))
    assert en.riesz_split_invertible(h, phi, phi, data)
    assert mu.is_invertible(mu.assemble(h, phi, phi))[0]


def test_riesz_split_invertible_needs_no_duality(rng):
    F = fr.random_riesz(4, 0.8, 1.2, seed=0)
    G = fr.random_riesz(4, 0.8, 1.2, seed=1)
    P, Q = fr.Frame(np.hstack([F.synthesis, 0.1 * random_complex(rng, 4, 3)])), \
        fr.Frame(np.hstack([G.synthesis, 0.1 * random_complex(rng, 4, 3)]))
    data = en.riesz_split_data(P, Q, np.arange(4))
    m = np.r_[np.ones(4), 0.1 * np.ones(3)]
    if en.riesz_split_invertible(m, P, Q, data):
        assert mu.is_invertible(mu.assemble(m, P, Q))[0]
    with pytest.raises(DualityError):
        en.riesz_split_resolvent(0.5, m, P, Q, data)


def test_riesz_split_region_01():
    r = en.riesz_split_region_01(0.75)
    assert r.intervals == ((0, 0.25), (0.75, 1))
    assert en.riesz_split_region_01(1.0).intervals == ((0, 0), (1, 1))
    np.testing.assert_allclose(en.riesz_split_region_01(0.6).intervals, [(0, 0.4), (0.6, 1)])
    with pytest.raises(CriterionVoidError):
        en.riesz_split_region_01(0.5)


@pytest.mark.parametrize("A", [0.6, 0.75, 0.9])
def test_riesz_split_scan_matches_closed_form(A):
    F, I = zero_one_frame(8, A, seed=3)
    m = np.zeros(16)
    m[I[::2]] = 1
    m[::4] = 1
    data = en.riesz_split_data(F, F, I)
    x = np.linspace(-0.1, 1.1, 2001)
    cert = en.riesz_split_resolvent(x + 0j, m, F, F, data)
    inside = (x > 1 - A) & (x < A)
    h = x[1] - x[0]
    near = (np.abs(x - (1 - A)) <= h) | (np.abs(x - A) <= h)
    assert np.all((cert == inside)[~near])
    ev = mu.spectrum_of(mu.assemble(m, F, F))
    assert np.all(en.riesz_split_region_01(A).contains(ev, 1e-8))


def test_corollary_resolvent():
    F, I = zero_one_frame(6, 0.75, seed=2)
    m = mu.Symbol.periodic([0, 1, 1, 0], 12)
    # Parseval: (B - A')/A = 1/4, A'/B = 3/4, same as the Riesz split
    assert en.corollary_resolvent(0.5, m, F, I)
    assert not en.corollary_resolvent(0.2, m, F, I)
    G = fr.Frame(2 * F.synthesis)
    M = mu.assemble(m, G, fr.canonical_dual(G).psi)
    x = np.linspace(-0.5, 1.5, 401) + 0j
    cert = en.corollary_resolvent(x, m, G, I)
    ev = mu.spectrum_of(M)
    assert np.min(np.abs(x[cert][:, None] - ev[None, :])) >= 1e-9


# --- unions of scaled bases -------------------------------------------------


def test_onb_union_interval_examples():
    phi, m = ex52()
    data = en.onb_union_data(m, phi, 2)
    np.testing.assert_allclose(data.weights, [0.5, 0.5])
    np.testing.assert_allclose(data.branch_symbols[0], [0, 2 / 3] * 4)
    r = en.onb_union_interval(data)
    assert (r.lo, r.hi) == pytest.approx((1 / 6, 5 / 6), abs=1e-15)
    N = 16
    phi, h = harmonic(N)
    r = en.onb_union_interval(en.onb_union_data(h, phi, 2))
    assert (r.lo, r.hi) == pytest.approx((0.5 / (N + 1) + 0.75, 1.25 - 1 / (2 * (N + 1))))
    assert 0.75 <= r.lo and r.hi <= 1.25
    phi, _ = ex52()
    r = en.onb_union_interval(en.onb_union_data(mu.Symbol.constant(0.4, 16), phi, 2))
    assert r.lo == pytest.approx(0.4) and r.hi == pytest.approx(0.4)


def test_onb_union_data_rejects_non_union():
    F = fr.Frame(random_complex(np.random.default_rng(1), 3, 6))
    with pytest.raises(HypothesisError):
        en.onb_union_data(np.ones(6), F, 2)
    with pytest.raises(HypothesisError):
        en.onb_union_data(np.ones(6), F, 3)


def test_onb_union_interval_is_limit_of_resolvent_scans():
    phi, m = ex52(d=8)
    lo_b = [b.real.min() for b in en.split_branches(m, 2)]
    hi_b = [b.real.max() for b in en.split_branches(m, 2)]
    x = np.linspace(-0.5, 1.5, 2001)
    certified = np.zeros_like(x, dtype=bool)
    for shift in (1, 10, 100):
        for ells in ([lo - shift for lo in lo_b], [hi + shift for hi in hi_b]):
            data = en.onb_union_data(m, phi, 2, ells=ells)
            certified |= en.onb_union_resolvent(x + 0j, data)
    r = en.onb_union_interval(en.onb_union_data(m, phi, 2))
    h = x[1] - x[0]
    outside = (x < r.lo - h) | (x > r.hi + h)
    assert np.all(certified[outside]) and not np.any(certified[(x > r.lo) & (x < r.hi)])


def test_onb_union_disk_equals_predicate_complement():
    phi, m = ex52()
    data = en.onb_union_data(m, phi, 2)
    D = en.onb_union_disk(data)
    z = D.center + 1.01 * D.radius
    assert en.onb_union_resolvent(z, data) and not en.onb_union_resolvent(D.center, data)


# --- scans and intersections -------------------------------------------------


def test_region_scan():
    G = en.region_scan(lambda Z: np.abs(Z) > 1, (-2, 2, -2, 2), 5)
    assert G.resolution == (5, 5)
    assert G.certified[2, 2] == False and G.certified[0, 0] == True  # noqa: E712
    assert 0 in G.ys
    with pytest.raises(ValidationError):
        en.region_scan(lambda Z: Z.real > 0, (1, 0, 0, 1), 5)
    with pytest.raises(ValidationError):
        en.region_scan(lambda Z: Z.real > 0, (0, 1, 0, 1), 1)


def test_default_box():
    phi, m = ex52()
    assert en.default_box(m, phi, phi) == pytest.approx((-1.1, 1.1, -1.1, 1.1))


def test_intersect_exact_cases():
    r = en.intersect([en.Interval(0, 1), en.IntervalUnion(((-1, 0.25), (0.75, 2)))])
    assert isinstance(r, en.IntervalUnion) and r.intervals == ((0, 0.25), (0.75, 1))
    r = en.intersect([en.Disk(0, 2), en.Disk(0.5, 0.5)])
    assert isinstance(r, en.Disk) and r.radius == 0.5
    assert isinstance(en.intersect([]), en.WholePlane)


def test_intersect_heterogeneous_is_conservative():
    regions = [en.Disk(0, 1), en.Interval(-0.5, 2)]
    G = en.intersect(regions, resolution=101)
    assert isinstance(G, en.GridMask)
    for z in G.points.ravel():
        inside_all = all(r.contains(z, 1e-12) for r in regions)
        assert G.contains(z) == inside_all


# --- soundness ---------------------------------------------------------------


def test_enclosures_contain_spectrum_on_random_dual_pairs(rng):
    for _ in range(30):
        d = int(rng.integers(2, 6))
        n = d + int(rng.integers(1, 6))
        F = fr.Frame(random_complex(rng, d, n))
        G = fr.alternate_dual(F, random_complex(rng, d, n)).psi
        m = random_complex(rng, n)
        ev = mu.spectrum_of(mu.assemble(m, F, G))
        for r in (en.bessel_disk(m, F, G), en.dual_disk_item1(m, F, G)):
            assert np.all(r.contains(ev, 1e-7))
        assert not np.any(en.pertII_resolvent_predicate(ev, None, m, F, G))
        C = fr.canonical_dual(F).psi
        ev_c = mu.spectrum_of(mu.assemble(m, F, C))
        assert np.all(en.hull_enclosure(m, F).contains(ev_c, 1e-7))
