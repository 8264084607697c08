"""
Dense complex-matrix kernel.

Every operator in the package (blocks, representing operators, frame
operators) is a 2-D ``complex128`` numpy array. The helpers here wrap the
LAPACK-backed routines in :mod:`numpy.linalg` with the package's
tolerance conventions: numerical rank is always decided relative to the
largest singular value, and Hermitian inputs are symmetrized before they
are factored.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NegativeEigenvalue, NonSquare, NotHermitian


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds shared by every certificate.

    Parameters
    ----------
    rel_residual : float
        Relative residual below which an identity is accepted as exact.
    rank_floor : float
        Singular values below ``rank_floor * sigma_max`` count as zero.
    """

    rel_residual: float = 1e-8
    rank_floor: float = 1e-10

    def __post_init__(self):
        for name in ("rel_residual", "rank_floor"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")


DEFAULT_TOL = Tolerance()


def as_matrix(m, name: str = "matrix") -> np.ndarray:
    """Return ``m`` as a finite 2-D complex array (scalars and vectors are promoted)."""
    a = np.array(m, dtype=complex)
    if a.ndim == 0:
        a = a.reshape(1, 1)
    elif a.ndim == 1:
        a = a.reshape(1, -1)
    elif a.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got shape {a.shape}")
    if a.size == 0:
        raise DimensionMismatch(f"{name} must be non-empty")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} has non-finite entries")
    return a


def adjoint(m) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(np.asarray(m)).T


def _require_square(m: np.ndarray):
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {m.shape}")


def symmetrize(m, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Return ``(m + m*)/2`` after checking that ``m`` is Hermitian up to the rank floor."""
    m = np.asarray(m, dtype=complex)
    _require_square(m)
    scale = np.linalg.norm(m, 2)
    asym = np.linalg.norm(m - adjoint(m), 2)
    if asym > tol.rank_floor * max(scale, np.finfo(float).tiny):
        raise NotHermitian(f"asymmetry {asym:.3e} exceeds floor relative to norm {scale:.3e}")
    return 0.5 * (m + adjoint(m))


def hermitian_eig(m, tol: Tolerance = DEFAULT_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns
    -------
    eigenvalues : ndarray of float, ascending
    eigenvectors : ndarray, columns are orthonormal eigenvectors
    """
    h = symmetrize(m, tol)
    w, v = np.linalg.eigh(h)
    return w, v


def svd(m, full: bool = False):
    """Singular value decomposition ``m = U diag(s) V*``.

    Returns ``(U, s, V)`` with ``s`` descending. Note that ``V`` (not ``V*``)
    is returned. With ``full=True`` both unitary factors are square.
    """
    m = np.asarray(m, dtype=complex)
    u, s, vh = np.linalg.svd(m, full_matrices=full)
    return u, s, adjoint(vh)


def _cutoff(s: np.ndarray, tol: Tolerance) -> float:
    smax = s[0] if s.size else 0.0
    return tol.rank_floor * smax


def numerical_rank(m, tol: Tolerance = DEFAULT_TOL) -> int:
    s = np.linalg.svd(np.asarray(m, dtype=complex), compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > _cutoff(s, tol)))


def pinv(m, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudoinverse with a relative singular-value cutoff."""
    m = np.asarray(m, dtype=complex)
    u, s, v = svd(m)
    inv = np.zeros_like(s)
    if s.size and s[0] > 0:
        keep = s > _cutoff(s, tol)
        inv[keep] = 1.0 / s[keep]
    return (v * inv) @ adjoint(u)


def psd_sqrt(m, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Hermitian positive semidefinite square root.

    Eigenvalues in ``[-rank_floor * lambda_max, 0)`` are clipped to zero;
    anything more negative raises :class:`NegativeEigenvalue`.
    """
    w, v = hermitian_eig(m, tol)
    w = _clip_spectrum(w, tol)
    r = (v * np.sqrt(w)) @ adjoint(v)
    return 0.5 * (r + adjoint(r))


def psd_inv_sqrt(m, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Inverse of :func:`psd_sqrt` for a positive definite ``m``."""
    w, v = hermitian_eig(m, tol)
    w = _clip_spectrum(w, tol)
    if w[0] <= tol.rank_floor * max(w[-1], 0.0) or w[-1] <= 0:
        raise NegativeEigenvalue("matrix is singular; inverse square root undefined")
    r = (v / np.sqrt(w)) @ adjoint(v)
    return 0.5 * (r + adjoint(r))


def _clip_spectrum(w: np.ndarray, tol: Tolerance) -> np.ndarray:
    top = max(abs(w[-1]), abs(w[0]))
    if w[0] < -tol.rank_floor * top:
        raise NegativeEigenvalue(f"eigenvalue {w[0]:.3e} is below -rank_floor * {top:.3e}")
    return np.clip(w, 0.0, None)


def operator_norm(m) -> float:
    """Spectral norm (largest singular value)."""
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def nullspace_basis(m, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the numerical kernel, one vector per column.

    The result has ``cols - rank`` columns and may have none.
    """
    m = np.asarray(m, dtype=complex)
    u, s, v = svd(m, full=True)
    if s.size == 0 or s[0] == 0:
        rank = 0
    else:
        rank = int(np.sum(s > _cutoff(s, tol)))
    return v[:, rank:]


def is_invertible(m, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Square and smallest singular value above ``rank_floor * sigma_max``."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    s = np.linalg.svd(m, compute_uv=False)
    return bool(s[0] > 0 and s[-1] > _cutoff(s, tol))


def relative_residual(target, approx) -> float:
    """``||target - approx||_F / ||target||_F``; absolute when ``target`` is zero."""
    target = np.asarray(target)
    diff = np.linalg.norm(target - np.asarray(approx))
    scale = np.linalg.norm(target)
    return float(diff / scale) if scale > 0 else float(diff)
