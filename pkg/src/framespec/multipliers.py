"""Frame multipliers ``M f = sum_n m_n <f, psi_n> phi_n`` as dense matrices."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import frames as fr
from . import numerics as nx
from .errors import DimensionError, ValidationError


@dataclass(frozen=True, eq=False)
class Symbol:
    """A finite symbol sequence.

    ``generator`` optionally records which (possibly infinite) rule produced
    the values, e.g. ``{"kind": "periodic", "pattern": [...], "length": N}``.
    """

    values: np.ndarray
    generator: dict = field(default=None)

    def __post_init__(self):
        v = np.array(self.values, dtype=np.complex128, copy=True).ravel()
        if not np.all(np.isfinite(v)):
            raise ValidationError("symbol has non-finite entries")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.values.size

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    @property
    def sup_norm(self):
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    @property
    def is_real(self):
        return bool(np.all(self.values.imag == 0))

    @property
    def real(self):
        return self.values.real

    def shifted(self, lam):
        return Symbol(self.values - lam, self.generator)

    @classmethod
    def constant(cls, c, length):
        return cls(np.full(length, c, dtype=complex), {"kind": "constant", "value": c, "length": length})

    @classmethod
    def periodic(cls, pattern, length):
        pattern = list(pattern)
        reps = -(-length // len(pattern))
        return cls(np.tile(pattern, reps)[:length], {"kind": "periodic", "pattern": pattern, "length": length})

    @classmethod
    def harmonic_pairs(cls, pairs):
        """``m_{2n-1} = 1/(n+1)``, ``m_{2n} = 2 - 1/(n+1)`` for ``n = 1..pairs``."""
        n = np.arange(1, pairs + 1)
        v = np.empty(2 * pairs)
        v[0::2] = 1 / (n + 1)
        v[1::2] = 2 - 1 / (n + 1)
        return cls(v, {"kind": "rule", "rule": "m[2n-1]=1/(n+1), m[2n]=2-1/(n+1)", "length": 2 * pairs})


def as_symbol(m):
    return m if isinstance(m, Symbol) else Symbol(m)


@dataclass(frozen=True, eq=False)
class Multiplier:
    matrix: np.ndarray
    symbol: Symbol
    phi_label: str
    psi_label: str
    dual: bool

    @property
    def dim(self):
        return self.matrix.shape[0]


def _check_shapes(m, phi, psi):
    if phi.synthesis.shape != psi.synthesis.shape:
        raise DimensionError(f"phi and psi have shapes {phi.synthesis.shape} and {psi.synthesis.shape}")
    if len(m) != phi.count:
        raise DimensionError(f"symbol length {len(m)} does not match family size {phi.count}")


def assemble(m, phi, psi):
    """The matrix ``Phi diag(m) Psi*``; the dual flag is computed, not trusted."""
    m = as_symbol(m)
    _check_shapes(m, phi, psi)
    M = (phi.synthesis * m.values) @ psi.synthesis.conj().T
    dual, _ = fr.is_dual_pair(phi, psi)
    return Multiplier(M, m, phi.label, psi.label, dual)


def norm_bound(m, phi, psi):
    """``sup |m_n| * sqrt(B_phi * B_psi)`` with optimal Bessel bounds."""
    m = as_symbol(m)
    _check_shapes(m, phi, psi)
    return m.sup_norm * np.sqrt(fr.bessel_bound(phi) * fr.bessel_bound(psi))


def spectral_norm(M):
    return float(nx.svd_sigma(M.matrix)[0])


def spectrum_of(M):
    return nx.eig(M.matrix)


def similarity_reduce(m, phi):
    """Return ``(M_{m, phi, S^-1 phi}, M_{m, rho, rho})`` with ``rho = S^-1/2 phi``.

    The two are similar via ``S^1/2``, so their spectra coincide.
    """
    m = as_symbol(m)
    pair = fr.canonical_dual(phi)
    rho = fr.canonical_parseval(phi)
    return assemble(m, phi, pair.psi), assemble(m, rho, rho)


def _support(M, thetas):
    """Support values ``h(t) = lambda_max(Re(e^{-it} M))`` and the attaining unit vectors."""
    A = M.matrix if isinstance(M, Multiplier) else np.asarray(M, dtype=complex)
    h = np.empty(len(thetas))
    X = np.empty((A.shape[0], len(thetas)), dtype=complex)
    for k, t in enumerate(thetas):
        B = np.exp(-1j * t) * A
        H = (B + B.conj().T) / 2
        w, V = np.linalg.eigh(H)
        h[k], X[:, k] = w[-1], V[:, -1]
    return h, X


def numerical_range_hull(M, angles=256):
    """Outer polygonal approximation of the numerical range.

    Intersects the supporting half-planes ``Re(e^{-it} z) <= h(t)`` at
    ``angles`` equally spaced directions.
    """
    if angles < 8:
        raise ValidationError("need at least 8 angles")
    thetas = 2 * np.pi * np.arange(angles) / angles
    h, _ = _support(M, thetas)
    delta = 2 * np.pi / angles
    h_next = np.roll(h, -1)
    t = (h_next - h * np.cos(delta)) / np.sin(delta)
    verts = np.exp(1j * thetas) * (h + 1j * t)
    scale = max(1.0, float(np.max(np.abs(verts))))
    verts = np.where(np.abs(verts.imag) <= 1e-13 * scale, verts.real + 0j, verts)
    return nx.convex_hull(verts)


def numerical_range_points(M, angles=256):
    """Points ``<M x, x>`` of the numerical range on its boundary (inner approximation)."""
    A = M.matrix if isinstance(M, Multiplier) else np.asarray(M, dtype=complex)
    thetas = 2 * np.pi * np.arange(angles) / angles
    _, X = _support(A, thetas)
    return np.einsum("ik,ij,jk->k", X.conj(), A, X)


def is_invertible(M):
    s = nx.svd_sigma(M.matrix)
    return bool(s[-1] > 1e-10 * s[0]), float(s[-1])
