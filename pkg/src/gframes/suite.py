"""
Check suite: each check is a finite, literal instance of one structural result.

Checks are implications evaluated on a single family. When the hypothesis
of a result does not hold for the family, the check passes vacuously and
says so in its ``note``. Catalog instances additionally carry expected
verdicts, so a counterexample that fails to be representable counts as a
pass.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .duality import (
    canonical_dual,
    canonical_dual_representation,
    dual_representation_condition,
    dualrep_gap,
    dualrep_relation,
    representation_from_dual,
    verify_dual_pair,
)
from .errors import NotInvertible
from .frames import GFrame, classify, flatten, frame_bounds, is_frame_bounds, lift, synthesis_matrix
from .generators import random_conditioned
from .linalg import DEFAULT_TOL, Tolerance, adjoint, nullspace_basis, operator_norm
from .representation import (
    certify_theorem_MT,
    cyclic_closure_residual,
    find_representation,
    find_representation_bilateral,
    isometry_report,
    kernel_shift_invariance,
    similarity_transport,
)

TAGS = ("framegframe", "rep", "MT", "inv", "oth", "grb", "gl", "dual", "dualrep", "corollary-Z")


@dataclass(frozen=True)
class Check:
    tag: str
    statement: str
    tolerance: float
    passed: bool
    value: object = None
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" [{self.note}]" if self.note else ""
        return f"{status} {self.tag:<12} {self.statement} (tol {self.tolerance:g}){extra}"


def vector_frame_operator(vectors) -> np.ndarray:
    """``sum_j f_j f_j*`` accumulated vector by vector."""
    vectors = list(vectors)
    n = vectors[0].size
    s = np.zeros((n, n), dtype=complex)
    for f in vectors:
        s += np.outer(f, np.conj(f))
    return 0.5 * (s + adjoint(s))


def _framegframe_checks(g: GFrame, tol: Tolerance) -> list:
    vecs = flatten(g)
    w = np.linalg.eigvalsh(vector_frame_operator(vecs))
    b = frame_bounds(g, tol)
    scale = max(1.0, b.upper)
    gap = max(abs(max(w[0], 0.0) - b.lower), abs(w[-1] - b.upper)) / scale
    cg, cf = classify(g, tol), classify(lift(vecs), tol)
    keys = ("is_frame", "is_riesz", "is_orthonormal")
    agree = all(getattr(cg, k) == getattr(cf, k) for k in keys)
    return [
        Check("framegframe", "bounds of the flattened vectors equal the g-frame bounds", tol.rel_residual,
              gap <= tol.rel_residual, gap),
        Check("framegframe", "frame/Riesz/orthonormal flags agree with the flattened sequence", 0.0, agree,
              {k: (getattr(cg, k), getattr(cf, k)) for k in keys}),
    ]


def _expected_rep_checks(rep, expected: dict, tol: Tolerance) -> list:
    out = []
    if "representable" in expected:
        want = bool(expected["representable"])
        note = "expected counterexample" if not want else ""
        out.append(Check("rep", f"representable == {want} as stated for the example", tol.rel_residual,
                         rep is not None and rep.representable == want,
                         None if rep is None else rep.max_residual, note))
    if expected.get("T") is not None and rep is not None:
        gap = operator_norm(rep.operator - np.asarray(expected["T"]))
        out.append(Check("rep", "recovered operator equals the named operator", tol.rel_residual,
                         gap <= tol.rel_residual * max(1.0, operator_norm(expected["T"])), gap))
    if "lsq_t" in expected and rep is not None:
        gap = abs(complex(rep.operator[0, 0]) - expected["lsq_t"])
        out.append(Check("rep", "least-squares scalar matches sum c_n c_(n+1) / sum c_n^2", 1e-12,
                         gap <= 1e-12, gap))
    return out


def _alternate_dual(head: GFrame, seed: int, tol: Tolerance) -> GFrame:
    """Canonical dual plus a component annihilated by the synthesis."""
    base = canonical_dual(head, tol)
    kernel = nullspace_basis(synthesis_matrix(head), tol)
    if kernel.shape[1] == 0:
        return base
    rng = np.random.default_rng(seed)
    c = rng.standard_normal((kernel.shape[1], head.space_dim))
    extra = kernel @ c  # columns in ker T: sum Lambda_i* Psi_i = 0
    rows = np.cumsum((0,) + head.block_dims)
    blocks = [b + extra[a:z] for b, a, z in zip(base.blocks, rows[:-1], rows[1:])]
    return head.with_blocks(blocks)


def _unilateral_checks(g: GFrame, tol: Tolerance, expected: dict, seed: int) -> list:
    out = []
    cls = classify(g, tol)
    rep = find_representation(g, tol)
    cert = certify_theorem_MT(g, tol)
    out += _expected_rep_checks(rep, expected, tol)
    if "omega_independent" in expected:
        want = bool(expected["omega_independent"])
        out.append(Check("MT", f"omega_independent == {want} as stated for the example", tol.rank_floor,
                         cert.omega_independent == want, cert.omega_independent))

    if cert.guaranteed_bounded_rep and cls.is_frame:
        ok = rep.representable and rep.norm_upper_ok
        out.append(Check("MT", "omega-independent frame with shift-invariant kernel: represented, ||T|| <= sqrt(B/A)",
                         tol.rel_residual, ok, (rep.max_residual, rep.operator_norm, rep.bound_sqrt_BA)))
    else:
        out.append(Check("MT", "omega-independent frame with shift-invariant kernel: represented, ||T|| <= sqrt(B/A)",
                         tol.rel_residual, True, None, "hypotheses not met; vacuous"))
    out.append(Check("MT", "finite chain: shift-invariant head kernel implies a representation",
                     tol.rel_residual, (not cert.kernel_shift_invariant) or rep.representable,
                     (cert.kernel_shift_invariant, rep.representable)))
    out.append(Check("inv", "represented implies the synthesis kernel is right-shift invariant", tol.rank_floor,
                     (not rep.representable) or cert.kernel_shift_invariant,
                     (rep.representable, cert.kernel_shift_invariant)))

    if cls.is_orthonormal:
        ok = rep.representable and cert.omega_independent and cert.kernel_shift_invariant
        out.append(Check("oth", "g-orthonormal basis: represented with both certificate flags", tol.rel_residual, ok,
                         rep.max_residual))
    else:
        out.append(Check("oth", "g-orthonormal basis: represented with both certificate flags", tol.rel_residual,
                         True, None, "not g-orthonormal; vacuous"))
    if cls.is_riesz:
        out.append(Check("grb", "g-Riesz basis: represented", tol.rel_residual, rep.representable, rep.max_residual))
    else:
        out.append(Check("grb", "g-Riesz basis: represented", tol.rel_residual, True, None, "not g-Riesz; vacuous"))

    out += _transport_checks(g, rep, cls.is_frame, tol, seed)

    head = g.head()
    if is_frame_bounds(frame_bounds(head, tol), tol):
        cond = dual_representation_condition(g, canonical_dual(head, tol), tol)
        out.append(Check("dual", "canonical-dual expansion condition holds iff represented", tol.rel_residual,
                         cond == rep.representable, (cond, rep.representable)))
        alt = dual_representation_condition(g, _alternate_dual(head, seed, tol), tol)
        out.append(Check("dual", "same verdict for a non-canonical dual of the link sources", tol.rel_residual,
                         alt == cond, (alt, cond)))
    else:
        out.append(Check("dual", "canonical-dual expansion condition holds iff represented", tol.rel_residual,
                         True, None, "link sources do not form a frame; vacuous"))
    out += _catalog_dual_checks(g, rep, expected, tol)
    return out


def _transport_checks(g: GFrame, rep, is_frame: bool, tol: Tolerance, seed: int) -> list:
    out = []
    if not rep.representable:
        out.append(Check("gl", "Lambda S is represented by S^-1 T S", tol.rel_residual, True, None,
                         "not represented; vacuous"))
        return out
    s = random_conditioned(np.random.default_rng(seed), g.space_dim, 10.0)
    _, moved = similarity_transport(g, s, rep, tol)
    out.append(Check("gl", "Lambda S is represented by S^-1 T S", tol.rel_residual, moved.representable,
                     moved.max_residual))
    if is_frame:
        cdr = canonical_dual_representation(g, rep, tol)
        out.append(Check("gl", "canonical dual is represented by S_L T S_L^-1", tol.rel_residual, cdr.represents,
                         cdr.residual))
    return out


def _catalog_dual_checks(g: GFrame, rep, expected: dict, tol: Tolerance) -> list:
    out = []
    budget = expected.get("dual_budget")
    succ = expected.get("successor")
    for name, d in expected.get("duals", {}).items():
        theta = d["frame"]
        report = verify_dual_pair(g, theta, tol, budget)
        out.append(Check("dual", f"{name} is a dual ({report.condition_used})", report.threshold,
                         report.is_dual == d["is_dual"], report.defect))
        if "defect" in expected:
            ratio = report.defect / expected["defect"]
            out.append(Check("dual", f"{name} defect equals the analytic tail within a factor 2", 2.0,
                             0.5 <= ratio <= 2.0, report.defect))
        theta_rep = find_representation(theta, tol)
        out.append(Check("rep", f"{name} representable == {d['representable']}", tol.rel_residual,
                         theta_rep.representable == d["representable"], theta_rep.max_residual))
        if d.get("T") is not None:
            gap = operator_norm(theta_rep.operator - d["T"])
            out.append(Check("rep", f"{name} is represented by the named operator", tol.rel_residual,
                             gap <= tol.rel_residual, gap))
        if succ is not None and report.is_dual:
            ext = g.extended(succ)
            cond = dual_representation_condition(ext, theta, tol, budget)
            out.append(Check("dual", f"expansion over {name} holds iff the chain is represented",
                             tol.rel_residual, cond == bool(expected["representable"]), cond))
            from_dual = representation_from_dual(ext, theta, tol, budget)
            if expected.get("T") is not None:
                gap = operator_norm(from_dual.operator - expected["T"])
                limit = max(tol.rel_residual, 0.0 if budget is None else budget * 10)
                out.append(Check("dual", f"sum Theta_i* Lambda_(i+1) over {name} gives the named operator",
                                 limit, gap <= limit, gap))
        if "dualrep_holds" in expected and d["representable"] and rep.representable:
            gap = dualrep_gap(rep.operator, theta_rep.operator)
            holds = gap <= tol.rel_residual
            note = "index set N: relation expected to fail" if not expected["dualrep_holds"] else ""
            out.append(Check("dualrep", f"S = (T*)^-1 for {name} is {expected['dualrep_holds']}",
                             tol.rel_residual, holds == expected["dualrep_holds"], gap, note))
    return out


def _bilateral_checks(g: GFrame, tol: Tolerance, expected: dict, seed: int) -> list:
    out = []
    try:
        rep = find_representation_bilateral(g, tol)
    except NotInvertible:
        rep = None
    out += _expected_rep_checks(rep, expected, tol)
    if rep is None or not rep.representable:
        for tag in ("corollary-Z", "dualrep", "gl"):
            out.append(Check(tag, "bilateral statements", tol.rel_residual, True, None, "not represented; vacuous"))
        return out

    both = kernel_shift_invariance(g, tol, "right") and kernel_shift_invariance(g, tol, "left")
    out.append(Check("corollary-Z", "represented window: kernel invariant under right and left shift", tol.rank_floor,
                     both, both))
    out += _transport_checks(g, rep, True, tol, seed)

    closure = cyclic_closure_residual(g, rep.operator)
    cls = classify(g, tol)
    if closure > tol.rel_residual or not cls.is_frame:
        out.append(Check("corollary-Z", "norm bounds and whitening", tol.rel_residual, True, closure,
                         "window is not a closed period of its orbit; not asserted at this truncation"))
        return out
    iso = isometry_report(g, rep, tol)
    ratio = rep.bound_sqrt_BA * (1 + tol.rel_residual)
    lo = 1 - tol.rel_residual
    out.append(Check("corollary-Z", "1 <= ||T|| <= sqrt(B/A) and 1 <= ||T^-1|| <= sqrt(B/A)", tol.rel_residual,
                     lo <= iso.t_norm <= ratio and lo <= iso.t_inv_norm <= ratio, (iso.t_norm, iso.t_inv_norm)))
    out.append(Check("corollary-Z", "||S^1/2 T S^-1/2|| = ||S^1/2 T^-1 S^-1/2|| = 1", tol.rel_residual,
                     iso.whitened_unitary, (iso.whitened_norm, iso.whitened_inv_norm)))
    if cls.is_tight:
        out.append(Check("corollary-Z", "tight window: T is an isometry", tol.rel_residual, iso.t_isometry,
                         (iso.t_norm, iso.t_inv_norm)))

    cdr = canonical_dual_representation(g, rep, tol)
    out.append(Check("dualrep", "canonical dual represented by S T S^-1 = (T*)^-1", tol.rel_residual,
                     cdr.represents and cdr.match_bilateral, (cdr.residual, cdr.match_defect)))
    dual = canonical_dual(g, tol)
    holds = dualrep_relation(g, dual, rep.operator, cdr.s_conj, tol, seed=seed)
    out.append(Check("dualrep", "dual windows represented by T and S satisfy S = (T*)^-1", tol.rel_residual, holds,
                     dualrep_gap(rep.operator, cdr.s_conj)))
    return out


def run_suite(g: GFrame, tol: Tolerance = DEFAULT_TOL, expected: dict | None = None, seed: int = 0) -> list:
    """All applicable theorem checks for one family."""
    expected = expected or {}
    out = _framegframe_checks(g, tol)
    if len(g) < 2 or g.common_codim is None:
        out.append(Check("rep", "representation statements", tol.rel_residual, True, None,
                         "needs at least two blocks with a common codomain; skipped"))
        return out
    if g.is_bilateral:
        if len(g) < 3:
            out.append(Check("rep", "representation statements", tol.rel_residual, True, None,
                             "bilateral window needs at least three blocks; skipped"))
            return out
        return out + _bilateral_checks(g, tol, expected, seed)
    return out + _unilateral_checks(g, tol, expected, seed)


def summarize(checks) -> dict:
    """Per-tag pass counts."""
    table = {}
    for c in checks:
        row = table.setdefault(c.tag, {"passed": 0, "total": 0})
        row["total"] += 1
        row["passed"] += int(c.passed)
    return {tag: table[tag] for tag in TAGS if tag in table}
