"""
Operator representations ``Lambda_{i+1} = Lambda_i T`` of finite g-frames.

The representing operator is recovered by stacked minimal-norm least
squares: with ``V`` the stacked link sources ``Lambda_1..Lambda_{n-1}``
and ``W`` the stacked targets ``Lambda_2..Lambda_n``, ``T = pinv(V) W``.
That solution reproduces every exact chain, and its relative link
residual doubles as the representability test.

For a finite chain, ``W = V T`` is solvable exactly when the kernel of the
head synthesis ``[Lambda_1* | ... | Lambda_{n-1}*]`` is carried by the
right shift into the kernel of ``[Lambda_2* | ... | Lambda_n*]``, so the
kernel certificate and the solver decide the same question by different
routes.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ChainTooShort, DimensionMismatch, GFrameError, NotInvertible, NotRepresentable
from .frames import FrameBounds, GFrame, frame_bounds, frame_operator, synthesis_matrix
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    is_invertible,
    nullspace_basis,
    numerical_rank,
    operator_norm,
    pinv,
    psd_inv_sqrt,
    psd_sqrt,
    relative_residual,
)


@dataclass(frozen=True, eq=False)
class RepresentationResult:
    """Candidate representing operator with residual and norm diagnostics.

    ``residuals[j]`` is the relative Frobenius residual of the ``j``-th link
    ``Lambda_{i+1} ~ Lambda_i T``. ``power_residuals`` (bilateral only)
    compares every block against ``Lambda_0 T^i`` directly.
    """

    operator: np.ndarray
    residuals: tuple
    representable: bool
    operator_norm: float
    bound_sqrt_BA: float
    norm_lower_ok: bool
    norm_upper_ok: bool
    bounds: FrameBounds
    inverse_norm: float | None = None
    power_residuals: tuple | None = None
    bilateral: bool = False

    @property
    def max_residual(self) -> float:
        return max(self.residuals)


@dataclass(frozen=True)
class Certificate:
    """Hypotheses of the sufficient condition for a bounded representation."""

    omega_independent: bool
    kernel_shift_invariant: bool

    @property
    def guaranteed_bounded_rep(self) -> bool:
        return self.omega_independent and self.kernel_shift_invariant


@dataclass(frozen=True)
class IsometryReport:
    t_norm: float
    t_inv_norm: float
    whitened_norm: float
    whitened_inv_norm: float
    t_isometry: bool
    whitened_unitary: bool


def _require_chain(g: GFrame, minimum: int = 2):
    if len(g) < minimum:
        raise ChainTooShort(f"need at least {minimum} blocks, got {len(g)}")
    if g.common_codim is None:
        raise DimensionMismatch(f"links need a common codomain, got block dims {g.block_dims}")


def link_residuals(g: GFrame, t) -> tuple:
    t = np.asarray(t)
    return tuple(relative_residual(nxt, cur @ t) for cur, nxt in zip(g.blocks[:-1], g.blocks[1:]))


def _result(g: GFrame, t: np.ndarray, tol: Tolerance) -> RepresentationResult:
    bounds = frame_bounds(g, tol)
    residuals = link_residuals(g, t)
    t_norm = operator_norm(t)
    ratio = max(bounds.ratio_sqrt, 1.0)
    inverse_norm = None
    power_residuals = None
    lower_ok = t_norm >= 1.0 - tol.rel_residual
    upper_ok = t_norm <= ratio * (1.0 + tol.rel_residual)
    if g.is_bilateral:
        if not is_invertible(t, tol):
            raise NotInvertible("representing operator of a bilateral family must be invertible")
        t_inv = np.linalg.inv(t)
        inverse_norm = operator_norm(t_inv)
        lower_ok = lower_ok and inverse_norm >= 1.0 - tol.rel_residual
        upper_ok = upper_ok and inverse_norm <= ratio * (1.0 + tol.rel_residual)
        lam0 = g[0]
        power_residuals = tuple(
            relative_residual(g[i], lam0 @ np.linalg.matrix_power(t if i >= 0 else t_inv, abs(i)))
            for i in g.indices
        )
    return RepresentationResult(
        operator=t,
        residuals=residuals,
        representable=bool(max(residuals) <= tol.rel_residual),
        operator_norm=t_norm,
        bound_sqrt_BA=ratio,
        norm_lower_ok=bool(lower_ok),
        norm_upper_ok=bool(upper_ok),
        bounds=bounds,
        inverse_norm=inverse_norm,
        power_residuals=power_residuals,
        bilateral=g.is_bilateral,
    )


def solve_links(g: GFrame, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Minimal-Frobenius-norm minimizer of ``sum ||Lambda_{i+1} - Lambda_i T||_F^2``."""
    _require_chain(g)
    v = np.vstack(g.blocks[:-1])
    w = np.vstack(g.blocks[1:])
    return pinv(v, tol) @ w


def find_representation(g: GFrame, tol: Tolerance = DEFAULT_TOL) -> RepresentationResult:
    """Least-squares representing operator of a unilateral chain."""
    if g.is_bilateral:
        raise GFrameError("bilateral window: use find_representation_bilateral")
    return _result(g, solve_links(g, tol), tol)


def check_representation(g: GFrame, t, tol: Tolerance = DEFAULT_TOL) -> RepresentationResult:
    """Residuals of ``g`` against a given ``t``; no solving."""
    t = as_matrix(t, "t")
    if t.shape != (g.space_dim, g.space_dim):
        raise DimensionMismatch(f"t must be {g.space_dim}x{g.space_dim}, got {t.shape}")
    _require_chain(g)
    return _result(g, t, tol)


def find_representation_bilateral(g: GFrame, tol: Tolerance = DEFAULT_TOL) -> RepresentationResult:
    """Representation ``Lambda_i = Lambda_0 T^i`` of a window ``[-m, m]``.

    ``T`` comes from the consecutive-link least squares; powers are
    checked afterwards and reported in ``power_residuals``.
    """
    if not g.is_bilateral:
        raise GFrameError("unilateral chain: use find_representation")
    _require_chain(g, 3)
    return _result(g, solve_links(g, tol), tol)


def cyclic_closure_residual(g: GFrame, t) -> float:
    """Residual of the wrap-around link ``Lambda_last T ~ Lambda_first``.

    When it vanishes the window is a full period of its orbit: shifting the
    index permutes the blocks, so ``T* S T = S`` holds exactly.
    """
    return relative_residual(g.blocks[0], g.blocks[-1] @ np.asarray(t))


def kernel_shift_invariance(g: GFrame, tol: Tolerance = DEFAULT_TOL, direction: str = "right") -> bool:
    """Finite shift invariance of the synthesis kernel.

    ``direction="right"``: ``sum_{i<n} Lambda_i* g_i = 0`` implies
    ``sum_{i<n} Lambda_{i+1}* g_i = 0``. ``"left"`` is the mirror image,
    moving kernel vectors of ``[Lambda_2* | ... | Lambda_n*]`` one block down.
    """
    _require_chain(g)
    head = synthesis_matrix(GFrame(g.space_dim, g.blocks[:-1]))
    tail = synthesis_matrix(GFrame(g.space_dim, g.blocks[1:]))
    if direction == "right":
        src, dst = head, tail
    elif direction == "left":
        src, dst = tail, head
    else:
        raise ValueError(f"direction must be 'right' or 'left', got {direction!r}")
    kernel = nullspace_basis(src, tol)
    if kernel.shape[1] == 0:
        return True
    scale = max(operator_norm(src), operator_norm(dst))
    return bool(operator_norm(dst @ kernel) <= tol.rank_floor * scale)


def certify_theorem_MT(g: GFrame, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """omega-independence (injective synthesis) and right-shift kernel invariance."""
    _require_chain(g)
    t = synthesis_matrix(g)
    return Certificate(
        omega_independent=numerical_rank(t, tol) == t.shape[1],
        kernel_shift_invariant=kernel_shift_invariance(g, tol),
    )


def similarity_transport(g: GFrame, s, rep: RepresentationResult, tol: Tolerance = DEFAULT_TOL):
    """The family ``{Lambda_i s}`` checked against ``s^-1 T s``.

    Returns the transported family and its :class:`RepresentationResult`.
    """
    s = as_matrix(s, "s")
    if not is_invertible(s, tol):
        raise NotInvertible("similarity must be invertible")
    if not rep.representable:
        raise NotRepresentable("transport needs a representable family")
    moved = g.right_multiply(s)
    t_new = np.linalg.solve(s, rep.operator @ s)
    return moved, check_representation(moved, t_new, tol)


def whitened(g: GFrame, t, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """``S^{1/2} T S^{-1/2}`` with ``S`` the frame operator of ``g``."""
    s = frame_operator(g)
    return psd_sqrt(s, tol) @ np.asarray(t) @ psd_inv_sqrt(s, tol)


def isometry_report(g: GFrame, rep: RepresentationResult, tol: Tolerance = DEFAULT_TOL) -> IsometryReport:
    """Norms of ``T``, ``T^-1`` and their whitened versions, compared with 1."""
    if not g.is_bilateral:
        raise GFrameError("isometry report applies to bilateral windows")
    if not rep.representable:
        raise NotRepresentable("family is not represented by the given operator")
    t = rep.operator
    if not is_invertible(t, tol):
        raise NotInvertible("representing operator is singular")
    t_inv = np.linalg.inv(t)
    t_norm, t_inv_norm = operator_norm(t), operator_norm(t_inv)
    w_norm = operator_norm(whitened(g, t, tol))
    w_inv_norm = operator_norm(whitened(g, t_inv, tol))
    eps = tol.rel_residual

    def near_one(x):
        return abs(x - 1.0) <= eps

    return IsometryReport(
        t_norm=t_norm,
        t_inv_norm=t_inv_norm,
        whitened_norm=w_norm,
        whitened_inv_norm=w_inv_norm,
        t_isometry=near_one(t_norm) and near_one(t_inv_norm),
        whitened_unitary=near_one(w_norm) and near_one(w_inv_norm),
    )
