"""Acceptance criteria, one test each.  Every test prints a single ``criterion N: PASS|FAIL`` line."""

import time

import numpy as np
import pytest

from framespec import enclosures as en
from framespec import frames as fr
from framespec import multipliers as mu
from framespec import verify as vf


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail

    return emit


def _two_basis_multiplier(d, U, pattern):
    """Direct construction: columns e_i/sqrt2 and U[:, i]/sqrt2 interleaved."""
    Phi = np.empty((d, 2 * d), dtype=complex)
    Phi[:, 0::2] = np.eye(d) / np.sqrt(2)
    Phi[:, 1::2] = U / np.sqrt(2)
    m = np.tile(pattern, d // 2 + 1)[: 2 * d]
    return Phi @ np.diag(m) @ Phi.conj().T


def test_criterion_01_two_basis_interval(report):
    t0 = time.perf_counter()
    worst_out = worst_imag = 0.0
    endpoint_err = None
    for aligned in (True, False):
        res = vf.run_onb_union_interval(64, seed=0, aligned=aligned)
        ev = res.eigenvalues
        worst_imag = max(worst_imag, float(np.max(np.abs(ev.imag))))
        worst_out = max(worst_out, float(np.max(np.maximum(1 / 6 - ev.real, ev.real - 5 / 6))))
        # oracle: Hermitian solver on an independently assembled matrix
        U = np.eye(64) if aligned else fr.random_unitary(64, 0)
        ref = np.linalg.eigvalsh(_two_basis_multiplier(64, U, vf.EX52_PATTERN))
        assert vf.matching_error(ev, ref) <= 1e-10
        if aligned:
            endpoint_err = max(abs(ev.real.min() - 1 / 6), abs(ev.real.max() - 5 / 6))
        phi = vf.two_onb_frame(64, 0, aligned)
        iv = en.onb_union_interval(en.onb_union_data(mu.Symbol.periodic(vf.EX52_PATTERN, 128), phi, 2))
        assert abs(iv.lo - 1 / 6) <= 1e-15 and abs(iv.hi - 5 / 6) <= 1e-15
    dt = time.perf_counter() - t0
    ok = worst_imag <= 1e-8 and worst_out <= 1e-8 and endpoint_err <= 1e-12 and dt < 1
    report(1, ok, f"imag {worst_imag:.1e}, outside {worst_out:.1e}, endpoint error {endpoint_err:.1e}, {dt:.2f}s")


def test_criterion_02_zero_one_symbols(report):
    t0 = time.perf_counter()
    worst_split = worst_unit = -np.inf
    for A in (0.6, 0.75, 0.9):
        phi, I = vf.zero_one_frame(64, A, seed=int(A * 100))
        rng = np.random.default_rng(int(A * 1000))
        for _ in range(20):
            m = vf.random_zero_one(128, rng)
            # Parseval, self-dual: M is Hermitian, so eigvalsh is a valid oracle
            ev = np.linalg.eigvalsh((phi.synthesis * m) @ phi.synthesis.conj().T)
            worst_split = max(worst_split, float(np.max(en.riesz_split_region_01(A).margin(ev))))
            worst_unit = max(worst_unit, float(np.max(np.maximum(-ev, ev - 1))))
    dt = time.perf_counter() - t0
    ok = worst_split <= 1e-8 and worst_unit <= 1e-8 and dt < 5
    report(2, ok, f"worst margin split {worst_split:.1e}, [0,1] {worst_unit:.1e}, {dt:.2f}s")


def test_criterion_03_harmonic_symbol(report):
    t0 = time.perf_counter()
    N = 64
    phi = vf.two_onb_frame(N, 0)
    m = mu.Symbol.harmonic_pairs(N)
    M = mu.assemble(m, phi, phi)
    ev = np.linalg.eigvalsh(M.matrix)
    smin = float(np.linalg.svd(M.matrix, compute_uv=False).min())
    split = en.riesz_split_data(phi, phi, np.arange(1, 2 * N, 2))
    inv = en.riesz_split_invertible(m, phi, phi, split)
    onb = en.onb_union_resolvent(0.0, en.onb_union_data(m, phi, 2))
    dt = time.perf_counter() - t0
    inside = ev.min() >= 0.75 - 1e-8 and ev.max() <= 1.25 + 1e-8
    ok = inside and smin >= 0.75 - 1e-8 and inv and onb and dt < 1
    report(3, ok, f"spectrum [{ev.min():.4f}, {ev.max():.4f}], sigma_min {smin:.4f}, "
                  f"split {inv}, onb-union {onb}, {dt:.2f}s")


def test_criterion_04_noncanonical_counterexample(report):
    d = 64
    pair, _ = vf.counterexample_pair(d)
    m = np.r_[2.0, np.ones(d)]
    ev = mu.spectrum_of(mu.assemble(m, pair.phi, pair.psi))
    # oracle for the defect: the two products computed by hand
    P, Q = pair.phi.synthesis, pair.psi.synthesis
    defect = max(np.abs(Q @ P.conj().T - np.eye(d)).max(), np.abs(P @ Q.conj().T - np.eye(d)).max())
    err = float(np.min(np.abs(ev - (1 - 1j))))
    dist = float(en.hull_enclosure(m, pair.phi).margin(1 - 1j))
    ok = defect <= 1e-12 and err <= 1e-10 and abs(dist - 1) <= 1e-10
    report(4, ok, f"defect {defect:.1e}, |ev - (1-i)| {err:.1e}, distance to [1,2] {dist:.12f}")


def test_criterion_05_riesz_basis_spectrum(report):
    rng = np.random.default_rng(2024)
    worst = 0.0
    for t in range(100):
        d = int(rng.integers(2, 33))
        lo, hi = np.sort(rng.uniform(0.1, 3, 2))
        F = fr.random_riesz(d, lo, hi, seed=rng)
        m = rng.uniform(-2, 2, d) + 1j * rng.uniform(-2, 2, d) * (t % 2)
        M = mu.assemble(m, F, fr.canonical_dual(F).psi)
        worst = max(worst, vf.matching_error(mu.spectrum_of(M), m))
    report(5, worst <= 1e-7, f"worst spectrum/symbol mismatch {worst:.1e} over 100 bases")


@pytest.fixture(scope="module")
def soundness_run():
    t0 = time.perf_counter()
    results = vf.run_random_soundness(vf.TrialConfig(seed=0, trials=1000))
    return results, time.perf_counter() - t0


def test_criterion_06_master_soundness(report, soundness_run):
    results, dt = soundness_run
    s = vf.soundness_summary(results)
    dims = max(r.dim for r in results)
    ok = s["violations"] == 0 and s["trials"] == 1000 and dt < 60 and dims <= 64
    report(6, ok, f"{s['violations']} violations in {s['trials']} trials, {len(s['families'])} "
                  f"frame/symbol family pairs, max dim {dims}, {dt:.1f}s")


def test_criterion_07_norm_bound(report, soundness_run):
    results, _ = soundness_run
    excess = max(r.values["norm"] - r.values["norm_bound"] for r in results)
    report(7, excess <= 1e-9, f"max(norm - bound) = {excess:.1e} over {len(results)} trials")


def test_criterion_08_similarity(report):
    rng = np.random.default_rng(8)
    worst_gap = worst_imag = 0.0
    worst_neg = 0.0
    for t in range(100):
        d = int(rng.integers(2, 17))
        n = d + int(rng.integers(0, d + 1))
        F = fr.Frame(rng.standard_normal((d, n)) + 1j * rng.standard_normal((d, n)))
        m = rng.uniform(0, 2, n) if t % 2 else rng.uniform(-1, 1, n)
        A, B = mu.similarity_reduce(m, F)
        ea, eb = mu.spectrum_of(A), mu.spectrum_of(B)
        # oracle: the Parseval form is Hermitian
        ref = np.linalg.eigvalsh(B.matrix)
        worst_gap = max(worst_gap, float(np.max(np.abs(ea - eb))), vf.matching_error(ea, ref))
        worst_imag = max(worst_imag, float(np.max(np.abs(ea.imag))))
        if t % 2:
            worst_neg = min(worst_neg, float(ea.real.min()))
    ok = worst_gap <= 1e-7 and worst_imag <= 1e-8 and worst_neg >= -1e-9
    report(8, ok, f"spectral gap {worst_gap:.1e}, imag {worst_imag:.1e}, min eigenvalue (m >= 0) {worst_neg:.1e}")


def test_criterion_09_scan_matches_closed_form(report):
    worst_bad = 0
    all_ok = True
    for A in (0.6, 0.75, 0.9):
        for seed in range(3):
            phi, I = vf.zero_one_frame(32, A, seed=seed)
            m = vf.random_zero_one(64, np.random.default_rng([seed, 9]))
            data = en.riesz_split_data(phi, phi, I)
            mask = en.region_scan(lambda lam: en.riesz_split_resolvent(lam, m, phi, phi, data),
                                  (-0.1, 1.1, -0.1, 0.1), (2001, 3))
            ok, n_bad = vf.riesz_split_scan_agreement(mask, A)
            all_ok &= ok
            worst_bad = max(worst_bad, n_bad)
    report(9, all_ok, f"boundary-cell mismatches at most {worst_bad} per scan (9 scans, resolution 2001)")


def test_criterion_10_gabor_union(report):
    p = fr.GaborParams(64, 8, 8)
    base = fr.gabor_frame(p)
    # oracle: Gram matrix of the base system is the identity
    G = base.synthesis.conj().T @ base.synthesis
    gram_err = float(np.abs(G - np.eye(64)).max())
    lo, hi = fr.frame_bounds(base)
    refined = fr.gabor_frame(p.refine_time(2))
    lowers = [fr.riesz_lower_bound(refined, I) for I in fr.gabor_riesz_split(p, 2)]
    ok = (abs(lo - 1) <= 1e-10 and abs(hi - 1) <= 1e-10 and gram_err <= 1e-10
          and len(lowers) == 2 and all(abs(x - 1) <= 1e-10 for x in lowers))
    report(10, ok, f"base bounds ({lo:.12f}, {hi:.12f}), refined class Riesz bounds "
                   f"{[round(x, 12) for x in lowers]}, refined frame bounds {tuple(round(x, 12) for x in fr.frame_bounds(refined))}")
