"""Dense complex linear algebra and planar geometry.

Matrices are plain complex ``numpy`` arrays; points of the complex plane are
Python/numpy complex scalars.  Eigen- and singular-value work is delegated to
LAPACK through :mod:`numpy.linalg` / :mod:`scipy.linalg`; the geometry
(convex hull, smallest enclosing disk, signed polygon distance) is written
out here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionError, SingularMatrixError, ValidationError

TOL_ABS = 1e-9
TOL_REL = 1e-9
HERMITIAN_TOL = 1e-10
MED_SEED = 20200101


def tolerance(scale=0.0):
    """Hybrid absolute/relative tolerance ``TOL_ABS + TOL_REL * scale``."""
    return TOL_ABS + TOL_REL * float(scale)


def as_cmatrix(A, name="matrix"):
    """Validate and convert ``A`` to a 2-D complex128 array."""
    A = np.asarray(A, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise DimensionError(f"{name} must be a non-empty 2-D array, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValidationError(f"{name} has non-finite entries")
    return A


def _as_square(A, name="matrix"):
    A = as_cmatrix(A, name)
    if A.shape[0] != A.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {A.shape}")
    return A


def sort_canonical(values):
    """Sort complex values by (real, imag) ascending."""
    values = np.asarray(values, dtype=np.complex128).ravel()
    order = np.lexsort((values.imag, values.real))
    return values[order]


def eig(A):
    """All eigenvalues of a square matrix, with multiplicity, canonically sorted."""
    A = _as_square(A)
    return sort_canonical(scipy.linalg.eigvals(A, check_finite=False))


def max_abs(A):
    A = np.asarray(A)
    return float(np.max(np.abs(A))) if A.size else 0.0


def eig_hermitian(A):
    """Ascending real eigenvalues of a Hermitian matrix."""
    A = _as_square(A)
    scale = np.linalg.norm(A, 2)
    if max_abs(A - A.conj().T) > HERMITIAN_TOL * scale:
        raise ValidationError("matrix is not Hermitian within tolerance")
    return scipy.linalg.eigvalsh((A + A.conj().T) / 2, check_finite=False)


def svd_sigma(A):
    """Singular values, descending."""
    A = as_cmatrix(A)
    return scipy.linalg.svdvals(A, check_finite=False)


def inverse(A):
    A = _as_square(A)
    s = svd_sigma(A)
    if s[-1] <= 1e-12 * s[0]:
        cond = np.inf if s[-1] == 0 else s[0] / s[-1]
        raise SingularMatrixError(f"matrix is numerically singular (condition ~ {cond:.3g})", cond)
    return scipy.linalg.inv(A, check_finite=False)


def inv_sqrt_hermitian_pd(A):
    """The Hermitian inverse square root of a positive definite matrix."""
    A = _as_square(A)
    if max_abs(A - A.conj().T) > HERMITIAN_TOL * np.linalg.norm(A, 2):
        raise ValidationError("matrix is not Hermitian within tolerance")
    w, V = scipy.linalg.eigh((A + A.conj().T) / 2, check_finite=False)
    if w[0] <= 1e-12 * max(w[-1], 0.0) or w[-1] <= 0:
        raise ValidationError("matrix is not positive definite")
    B = (V * w ** -0.5) @ V.conj().T
    return (B + B.conj().T) / 2


# ---------------------------------------------------------------------------
# Planar geometry


def _cross(o, a, b):
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


@dataclass(frozen=True)
class Polygon2D:
    """A convex polygon given by counterclockwise vertices.

    One vertex is a point, two vertices a segment.
    """

    vertices: tuple

    def __post_init__(self):
        if len(self.vertices) == 0:
            raise ValidationError("polygon needs at least one vertex")
        object.__setattr__(self, "vertices", tuple(complex(v) for v in self.vertices))

    @property
    def kind(self):
        return {1: "point", 2: "segment"}.get(len(self.vertices), "polygon")

    def __len__(self):
        return len(self.vertices)

    def contains(self, z, tol=1e-12):
        return dist_to_polygon(z, self) <= tol


def convex_hull(points):
    """Convex hull by Andrew's monotone chain.

    Duplicates and collinear boundary points are dropped, so a set of real
    numbers collapses to the segment between its extremes.
    """
    pts = np.asarray(points, dtype=np.complex128).ravel()
    if pts.size == 0:
        raise ValidationError("convex hull of an empty set")
    if not np.all(np.isfinite(pts)):
        raise ValidationError("non-finite point")
    uniq = sorted(set((float(p.real), float(p.imag)) for p in pts))
    pts = [complex(x, y) for x, y in uniq]
    if len(pts) <= 2:
        return Polygon2D(tuple(pts))

    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return Polygon2D(tuple(lower[:-1] + upper[:-1]))


def _dist_to_segment(z, a, b):
    d = b - a
    L2 = d.real ** 2 + d.imag ** 2
    if L2 == 0:
        return abs(z - a)
    t = ((z - a).real * d.real + (z - a).imag * d.imag) / L2
    t = min(1.0, max(0.0, t))
    return abs(z - (a + t * d))


def dist_to_polygon(z, P):
    """Signed Euclidean distance: negative inside, zero on the boundary."""
    z = complex(z)
    V = P.vertices
    n = len(V)
    if n == 1:
        return abs(z - V[0])
    edges = [(V[i], V[(i + 1) % n]) for i in range(n if n > 2 else 1)]
    dist = min(_dist_to_segment(z, a, b) for a, b in edges)
    if n > 2 and all(_cross(a, b, z) > 0 for a, b in edges):
        return -dist
    return dist


def _circle_two(a, b):
    c = (a + b) / 2
    return c, abs(a - c)


def _circle_three(a, b, c):
    bx, by = b.real - a.real, b.imag - a.imag
    cx, cy = c.real - a.real, c.imag - a.imag
    d = 2 * (bx * cy - by * cx)
    if d == 0:
        # collinear: the widest pair spans the triple
        return max((_circle_two(a, b), _circle_two(a, c), _circle_two(b, c)), key=lambda t: t[1])
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = complex(a.real + ux, a.imag + uy)
    r = max(abs(center - a), abs(center - b), abs(center - c))
    return center, r


def _inside(circle, p):
    c, r = circle
    return abs(p - c) <= r + 1e-12 * max(1.0, r, abs(c))


def min_enclosing_disk(points, seed=MED_SEED):
    """Smallest disk containing ``points`` (Welzl's randomized incremental method).

    Returns ``(center, radius)``.  The shuffle uses a fixed seed so the
    output is reproducible.
    """
    pts = np.asarray(points, dtype=np.complex128).ravel()
    if pts.size == 0:
        raise ValidationError("smallest enclosing disk of an empty set")
    if not np.all(np.isfinite(pts)):
        raise ValidationError("non-finite point")
    pts = [complex(p) for p in np.unique(pts)]
    np.random.default_rng(seed).shuffle(pts)

    circle = (pts[0], 0.0)
    for i in range(1, len(pts)):
        p = pts[i]
        if _inside(circle, p):
            continue
        circle = (p, 0.0)
        for j in range(i):
            q = pts[j]
            if _inside(circle, q):
                continue
            circle = _circle_two(p, q)
            for k in range(j):
                if not _inside(circle, pts[k]):
                    circle = _circle_three(p, q, pts[k])
    center, radius = circle
    # real point sets give real centers; strip rounding residue
    if all(z.imag == 0 for z in pts):
        center = complex(center.real, 0.0)
        radius = max(abs(z - center) for z in pts)
    return complex(center), float(radius)
