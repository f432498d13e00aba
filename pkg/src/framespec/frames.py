"""Finite frames in C^d.

A family of ``N`` vectors in ``C^d`` is stored as its ``d x N`` synthesis
matrix (column ``n`` is the ``n``-th vector).  Indices are zero-based
throughout: the conventional "even positions" ``2, 4, 6, ...`` of a 1-based
sequence are columns ``1, 3, 5, ...`` here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np
import scipy.stats

from . import numerics as nx
from .errors import (
    DimensionError,
    NotAFrameError,
    NotARieszBasisError,
    ValidationError,
)

FRAME_LOWER_MIN = 1e-10
DUAL_TOL = 1e-9
UNITARY_TOL = 1e-10


class FrameBounds(NamedTuple):
    lower: float
    upper: float


@dataclass(frozen=True, eq=False)
class Family:
    """A finite vector family; not necessarily spanning."""

    synthesis: np.ndarray
    label: str = ""

    def __post_init__(self):
        S = np.array(self.synthesis, dtype=np.complex128, copy=True)
        if S.ndim != 2 or S.shape[0] < 1:
            raise DimensionError(f"synthesis must be d x N, got shape {S.shape}")
        if not np.all(np.isfinite(S)):
            raise ValidationError("synthesis matrix has non-finite entries")
        S.flags.writeable = False
        object.__setattr__(self, "synthesis", S)

    @property
    def dim(self):
        return self.synthesis.shape[0]

    @property
    def count(self):
        return self.synthesis.shape[1]

    def __len__(self):
        return self.count

    @cached_property
    def frame_operator(self):
        S = self.synthesis @ self.synthesis.conj().T
        return (S + S.conj().T) / 2

    @cached_property
    def operator_spectrum(self):
        return nx.eig_hermitian(self.frame_operator)

    @property
    def is_frame(self):
        return self.count >= self.dim and self.operator_spectrum[0] > FRAME_LOWER_MIN

    def vectors(self):
        return [self.synthesis[:, n] for n in range(self.count)]


@dataclass(frozen=True, eq=False)
class Frame(Family):
    """A spanning family, i.e. a frame for C^d."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_frame:
            lo = self.operator_spectrum[0] if self.count else 0.0
            raise NotAFrameError(
                f"family {self.label!r} is not a frame (lower bound {lo:.3g} <= {FRAME_LOWER_MIN:g})"
            )

    @cached_property
    def bounds(self):
        w = self.operator_spectrum
        return FrameBounds(float(w[0]), float(w[-1]))


@dataclass(frozen=True, eq=False)
class DualPair:
    phi: Frame
    psi: Frame
    defect: float
    canonical: bool = field(default=False)


def frame_operator(F):
    return F.frame_operator


def frame_bounds(F):
    """Optimal frame bounds ``(lambda_min(S), lambda_max(S))``."""
    if not isinstance(F, Frame):
        F = Frame(F.synthesis, F.label)
    return F.bounds


def random_unitary(d, seed):
    """Haar-distributed unitary matrix; ``seed`` may be an int or a Generator."""
    rng = np.random.default_rng(seed)
    if d == 1:
        return np.exp(2j * np.pi * rng.random()) * np.ones((1, 1))
    return scipy.stats.unitary_group.rvs(d, random_state=rng)


def onb(d, seed=None, scale=1.0, label=None):
    """Standard basis of C^d, or a seeded random orthonormal basis, times ``scale``."""
    if d < 1:
        raise ValidationError("dimension must be positive")
    U = np.eye(d, dtype=complex) if seed is None else random_unitary(d, seed)
    return Frame(scale * U, label or f"onb(d={d})")


def _check_unitary(U, d):
    U = nx.as_cmatrix(U, "unitary")
    if U.shape != (d, d):
        raise DimensionError(f"unitary must be {d}x{d}, got {U.shape}")
    if nx.max_abs(U.conj().T @ U - np.eye(d)) > UNITARY_TOL:
        raise ValidationError("matrix is not unitary within tolerance")
    return U


def scaled_onb_union(d, alphas, unitaries=None, label=None):
    """Interleaved union of ``k`` scaled orthonormal bases.

    Column ``i*k + j`` is ``alphas[j]`` times the ``i``-th column of
    ``unitaries[j]``.  The result is Parseval iff ``sum |alpha_j|^2 == 1``.
    """
    alphas = np.asarray(alphas, dtype=complex).ravel()
    k = alphas.size
    if k == 0 or np.any(alphas == 0):
        raise ValidationError("alphas must be a non-empty list of nonzero scalars")
    if unitaries is None:
        unitaries = [np.eye(d)] * k
    if len(unitaries) != k:
        raise DimensionError(f"need {k} unitaries, got {len(unitaries)}")
    Us = [_check_unitary(U, d) for U in unitaries]
    Phi = np.empty((d, d * k), dtype=complex)
    for j, (a, U) in enumerate(zip(alphas, Us)):
        Phi[:, j::k] = a * U
    return Frame(Phi, label or f"onb_union(d={d}, k={k})")


def random_riesz(d, lower, upper, seed, label=None):
    """Square synthesis ``U diag(s) V*`` with singular values in ``[sqrt(lower), sqrt(upper)]``.

    Interior singular values are log-uniform; both extremes are attained,
    so the Riesz bounds are exactly ``(lower, upper)``.
    """
    if not 0 < lower <= upper:
        raise ValidationError("need 0 < lower <= upper")
    if d == 1 and lower != upper:
        raise ValidationError("a 1-dimensional Riesz basis has a single bound")
    rng = np.random.default_rng(seed)
    lo, hi = np.log(np.sqrt(lower)), np.log(np.sqrt(upper))
    s = np.exp(rng.uniform(lo, hi, size=d))
    s[0], s[-1] = np.sqrt(upper), np.sqrt(lower)
    U = random_unitary(d, rng)
    V = random_unitary(d, rng)
    return Frame((U * s) @ V.conj().T, label or f"riesz(d={d}, A={lower:g}, B={upper:g})")


def duality_defect(phi, psi):
    """``max(||Psi Phi* - I||_max, ||Phi Psi* - I||_max)``; symmetric in its arguments."""
    P, Q = phi.synthesis, psi.synthesis
    if P.shape != Q.shape:
        raise DimensionError(f"families have different shapes {P.shape} and {Q.shape}")
    eye = np.eye(P.shape[0])
    return max(nx.max_abs(Q @ P.conj().T - eye), nx.max_abs(P @ Q.conj().T - eye))


def is_dual_pair(phi, psi, tol=DUAL_TOL):
    defect = duality_defect(phi, psi)
    return defect <= tol, defect


def canonical_dual(F):
    """Pair ``F`` with its canonical dual ``{S^-1 phi_n}``."""
    Sinv = nx.inverse(F.frame_operator)
    psi = Frame(Sinv @ F.synthesis, f"canonical_dual({F.label})")
    return DualPair(F, psi, duality_defect(F, psi), canonical=True)


def canonical_parseval(F):
    """The Parseval frame ``{S^-1/2 phi_n}``."""
    R = nx.inv_sqrt_hermitian_pd(F.frame_operator)
    return Frame(R @ F.synthesis, f"canonical_parseval({F.label})")


def alternate_dual(F, V):
    """The dual ``Psi = S^-1 Phi + V (I - Phi* S^-1 Phi)``.

    Every dual of ``F`` arises this way (take ``V`` equal to the dual itself).
    """
    V = nx.as_cmatrix(V, "V")
    if V.shape != F.synthesis.shape:
        raise DimensionError(f"V must have shape {F.synthesis.shape}, got {V.shape}")
    Phi = F.synthesis
    canon = nx.inverse(F.frame_operator) @ Phi
    correction = V @ (np.eye(F.count) - Phi.conj().T @ canon)
    psi = Frame(canon + correction, f"alternate_dual({F.label})")
    return DualPair(F, psi, duality_defect(F, psi), canonical=nx.max_abs(correction) <= 1e-12)


def is_canonical_dual(phi, psi, tol=DUAL_TOL):
    if phi.synthesis.shape != psi.synthesis.shape:
        return False
    canon = nx.inverse(phi.frame_operator) @ phi.synthesis
    return nx.max_abs(canon - psi.synthesis) <= tol * max(1.0, nx.max_abs(canon))


def subfamily(F, index):
    """Column selection; the result may be a mere Bessel sequence."""
    index = np.asarray(index, dtype=int).ravel()
    return Family(F.synthesis[:, index], f"{F.label}[{index.size} cols]")


def complement_index(count, index):
    mask = np.ones(count, dtype=bool)
    mask[np.asarray(index, dtype=int)] = False
    return np.flatnonzero(mask)


def riesz_lower_bound(F, index=None):
    """Lower Riesz bound ``sigma_min^2`` of a square sub-family.

    ``index`` selects the sub-family; it must have exactly ``dim`` members.
    """
    G = F if index is None else subfamily(F, index)
    if G.count != G.dim:
        raise NotARieszBasisError(f"a Riesz basis of C^{G.dim} needs {G.dim} vectors, got {G.count}")
    s = nx.svd_sigma(G.synthesis)
    if s[-1] <= 1e-12 * s[0] or s[-1] ** 2 <= FRAME_LOWER_MIN:
        raise NotARieszBasisError("sub-family is numerically singular")
    return float(s[-1] ** 2)


def bessel_bound(F, index=None):
    """Optimal Bessel bound ``lambda_max(Phi_J Phi_J*)``; zero for an empty family."""
    P = F.synthesis if index is None else F.synthesis[:, np.asarray(index, dtype=int)]
    if P.shape[1] == 0:
        return 0.0
    return float(nx.svd_sigma(P)[0] ** 2)


# ---------------------------------------------------------------------------
# Gabor systems on Z_d


@dataclass(frozen=True, eq=False)
class GaborParams:
    dim: int
    time_step: int
    freq_step: int
    window: np.ndarray = None

    def __post_init__(self):
        d, a, b = self.dim, self.time_step, self.freq_step
        if d < 1 or a < 1 or b < 1 or d % a or d % b:
            raise ValidationError(f"time and frequency steps must divide d (d={d}, a={a}, b={b})")
        if self.window is None:
            g = np.zeros(d, dtype=complex)
            g[:a] = 1 / np.sqrt(a)
        else:
            g = np.asarray(self.window, dtype=complex).ravel()
            if g.size != d:
                raise DimensionError(f"window must have length {d}")
        if np.linalg.norm(g) > 1 + 1e-12:
            raise ValidationError("window norm must not exceed 1")
        g.flags.writeable = False
        object.__setattr__(self, "window", g)

    @property
    def n_translates(self):
        return self.dim // self.time_step

    @property
    def n_modulations(self):
        return self.dim // self.freq_step

    def refine_time(self, factor):
        if self.time_step % factor:
            raise ValidationError(f"time step {self.time_step} is not divisible by {factor}")
        return GaborParams(self.dim, self.time_step // factor, self.freq_step, self.window)


def gabor_synthesis(p):
    """Columns ``n * (d/b) + m`` hold ``x -> exp(2 pi i m b x / d) g((x - n a) mod d)``."""
    d, a, b = p.dim, p.time_step, p.freq_step
    x = np.arange(d)
    cols = []
    for n in range(p.n_translates):
        shifted = p.window[(x - n * a) % d]
        for m in range(p.n_modulations):
            cols.append(np.exp(2j * np.pi * m * b * x / d) * shifted)
    return np.stack(cols, axis=1)


def gabor_frame(p, label=None):
    """The Gabor system as a :class:`Frame`, or a :class:`Family` when it does not span."""
    label = label or f"gabor(d={p.dim}, a={p.time_step}, b={p.freq_step})"
    fam = Family(gabor_synthesis(p), label)
    return Frame(fam.synthesis, label) if fam.is_frame else fam


def gabor_riesz_split(p, factor):
    """Index sets of the refined system ``G(g, a/factor, b)`` grouped by translate residue.

    Class ``r`` collects translates ``n`` with ``n % factor == r``; each class
    is a translated copy of ``G(g, a, b)``.
    """
    q = p.refine_time(factor)
    n = np.repeat(np.arange(q.n_translates), q.n_modulations)
    return [np.flatnonzero(n % factor == r) for r in range(factor)]
