"""
Dual g-frames and the representations they induce.

Duality is checked in the order ``sum_i Lambda_i* Theta_i = Id``.

Dual-based representation formulas act on the link sources of a chain:
for ``lam = (Lambda_1, ..., Lambda_n)`` the dual ``theta`` has ``n - 1``
blocks and satisfies ``sum_{i<n} Lambda_i* Theta_i = Id``. Then

    T = sum_{i<n} Theta_i* Lambda_{i+1}

represents ``lam`` if and only if ``lam`` is representable at all, and the
test is independent of which dual of the head is used.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotAFrame, NotDual, NotInvertible, NotRepresentable, ShapeMismatch
from .frames import GFrame, check_same_shape, frame_bounds, frame_operator, is_frame_bounds
from .linalg import DEFAULT_TOL, Tolerance, adjoint, as_matrix, is_invertible, operator_norm, relative_residual
from .representation import RepresentationResult, check_representation


@dataclass(frozen=True)
class DualReport:
    defect: float
    is_dual: bool
    condition_used: str
    threshold: float
    symmetric_defect: float = 0.0


@dataclass(frozen=True, eq=False)
class CanonicalDualRepresentation:
    s_conj: np.ndarray
    residual: float
    represents: bool
    inv_adj: np.ndarray | None
    match_defect: float | None
    match_bilateral: bool


def canonical_dual(g: GFrame, tol: Tolerance = DEFAULT_TOL) -> GFrame:
    """Blocks ``Lambda_i S^-1``."""
    if not is_frame_bounds(frame_bounds(g, tol), tol):
        raise NotAFrame("frame operator is singular")
    s = frame_operator(g)
    # Lambda_i S^-1 = (S^-1 Lambda_i*)* since S is Hermitian
    return g.with_blocks([adjoint(np.linalg.solve(s, adjoint(b))) for b in g.blocks])


def dual_defect(lam: GFrame, theta: GFrame) -> float:
    """``||sum_i Lambda_i* Theta_i - Id||`` in operator norm."""
    check_same_shape(lam, theta)
    d = sum(adjoint(a) @ b for a, b in zip(lam.blocks, theta.blocks))
    return operator_norm(d - np.eye(lam.space_dim))


def verify_dual_pair(lam: GFrame, theta: GFrame, tol: Tolerance = DEFAULT_TOL,
                     budget: float | None = None) -> DualReport:
    """Check ``sum Lambda_i* Theta_i = Id``.

    Without ``budget`` the defect must be below ``tol.rel_residual``. With
    a budget (the analytic tail of a truncated infinite dual pair) the
    verdict is taken against that budget instead.
    """
    defect = dual_defect(lam, theta)
    if budget is None:
        mode, threshold = "exact", tol.rel_residual
    else:
        mode, threshold = "truncated-geometric", float(budget)
    # sum Theta_i* Lambda_i is the adjoint of sum Lambda_i* Theta_i, so both
    # defects agree; the second is reported so neither order is assumed
    d = sum(adjoint(b) @ a for a, b in zip(lam.blocks, theta.blocks))
    symmetric = operator_norm(d - np.eye(lam.space_dim))
    return DualReport(defect=defect, is_dual=defect <= threshold, condition_used=mode, threshold=threshold,
                      symmetric_defect=symmetric)


def _require_head_dual(lam: GFrame, theta: GFrame, tol: Tolerance, budget: float | None) -> GFrame:
    if len(theta) != len(lam) - 1:
        raise ShapeMismatch(
            f"theta must be a dual of the {len(lam) - 1} link sources, got {len(theta)} blocks"
        )
    head = lam.head()
    report = verify_dual_pair(head, theta, tol, budget)
    if not report.is_dual:
        raise NotDual(f"dual defect {report.defect:.3e} exceeds {report.threshold:.3e}")
    return head


def representation_from_dual(lam: GFrame, theta: GFrame, tol: Tolerance = DEFAULT_TOL,
                             budget: float | None = None) -> RepresentationResult:
    """Candidate ``T = sum_{i<n} Theta_i* Lambda_{i+1}`` checked against ``lam``."""
    _require_head_dual(lam, theta, tol, budget)
    t = sum(adjoint(th) @ nxt for th, nxt in zip(theta.blocks, lam.blocks[1:]))
    return check_representation(lam, t, tol)


def dual_representation_condition(lam: GFrame, theta: GFrame, tol: Tolerance = DEFAULT_TOL,
                                  budget: float | None = None) -> bool:
    """``Lambda_{k+1} = sum_{i<n} Lambda_k Theta_i* Lambda_{i+1}`` for every ``k < n``."""
    _require_head_dual(lam, theta, tol, budget)
    targets = lam.blocks[1:]
    for k, lam_k in enumerate(lam.blocks[:-1]):
        expansion = sum(lam_k @ adjoint(th) @ nxt for th, nxt in zip(theta.blocks, targets))
        if relative_residual(targets[k], expansion) > tol.rel_residual:
            return False
    return True


def canonical_dual_representation(g: GFrame, rep: RepresentationResult, tol: Tolerance = DEFAULT_TOL,
                                  budget: float | None = None) -> CanonicalDualRepresentation:
    """``S T S^-1`` as representation of the canonical dual, compared with ``(T*)^-1``.

    The first claim is exact at any truncation. The match with ``(T*)^-1``
    is only expected for bilateral windows closed under the shift.
    """
    if not rep.representable:
        raise NotRepresentable("family is not represented by the given operator")
    t = rep.operator
    s = frame_operator(g)
    s_conj = s @ t @ np.linalg.inv(s)
    dual_rep = check_representation(canonical_dual(g, tol), s_conj, tol)

    if is_invertible(t, tol):
        inv_adj = np.linalg.inv(adjoint(t))
    elif g.is_bilateral:
        raise NotInvertible("representing operator is singular")
    else:
        inv_adj = None

    match_defect = None
    match = False
    if inv_adj is not None:
        match_defect = operator_norm(s_conj - inv_adj)
        if g.is_bilateral:
            limit = tol.rel_residual * max(1.0, operator_norm(inv_adj)) if budget is None else budget
            match = match_defect <= limit
    return CanonicalDualRepresentation(
        s_conj=s_conj,
        residual=dual_rep.max_residual,
        represents=dual_rep.representable,
        inv_adj=inv_adj,
        match_defect=match_defect,
        match_bilateral=bool(match),
    )


def dualrep_gap(t, s) -> float:
    """``||s - (t*)^-1||``."""
    return operator_norm(np.asarray(s) - np.linalg.inv(adjoint(np.asarray(t))))


def dualrep_relation(lam: GFrame, theta: GFrame, t, s, tol: Tolerance = DEFAULT_TOL,
                     budget: float | None = None, dual_budget: float | None = None,
                     seed: int = 0, probes: int = 4) -> bool:
    """Whether the representing operators of a dual pair obey ``s = (t*)^-1``.

    Besides the operator gap, the identity ``f = T* S f`` is evaluated
    directly on ``probes`` seeded random vectors.
    """
    t, s = as_matrix(t, "t"), as_matrix(s, "s")
    report = verify_dual_pair(lam, theta, tol, dual_budget)
    if not report.is_dual:
        raise NotDual(f"dual defect {report.defect:.3e} exceeds {report.threshold:.3e}")
    for fam, op, name in ((lam, t, "lam"), (theta, s, "theta")):
        if not check_representation(fam, op, tol).representable:
            raise NotRepresentable(f"{name} is not represented by the given operator")
    if not is_invertible(t, tol):
        raise NotInvertible("t is singular")

    limit = tol.rel_residual * max(1.0, operator_norm(s)) if budget is None else budget
    gap_ok = dualrep_gap(t, s) <= limit

    rng = np.random.default_rng(seed)
    f = rng.standard_normal((lam.space_dim, probes)) + 1j * rng.standard_normal((lam.space_dim, probes))
    back = adjoint(t) @ (s @ f)
    probe_ok = np.linalg.norm(back - f) <= limit * np.linalg.norm(f)
    return bool(gap_ok and probe_ok)
