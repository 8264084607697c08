"""
Command-line interface.

    gframes analyze FILE [--tol X]
    gframes represent FILE [--bilateral] [--tol X]
    gframes dual FILE [--canonical] [--against FILE2] [--budget X] [--tol X]
    gframes verify (FILE | --catalog ID | --random KIND) [--seed S] [--trials N] [--format text]
    gframes gen --kind K --dim N --blocks L [--seed S] [--out FILE]

Reports go to stdout as one JSON document. Exit status is 0 when every
requested check passes, 2 when a check fails and 1 on usage or input
errors (nothing is written to stdout in that case).
"""
from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import __version__
from .catalog import CATALOG_IDS, paper_catalog
from .duality import (
    canonical_dual,
    dual_representation_condition,
    dualrep_gap,
    dualrep_relation,
    verify_dual_pair,
)
from .errors import GFrameError, NotInvertible
from .frames import GFrame, classify, frame_bounds, frame_operator, is_frame_bounds, synthesis_matrix
from .generators import KINDS, GenSpec, even_split, generate, generator_operator, random_spec
from .io import dumps, emit_instance, fingerprint, instance_to_dict, load_instance, matrix_to_dict
from .linalg import Tolerance, adjoint, operator_norm
from .representation import (
    certify_theorem_MT,
    cyclic_closure_residual,
    find_representation,
    find_representation_bilateral,
    isometry_report,
    kernel_shift_invariance,
)
from .suite import Check, run_suite, summarize

RANDOM_KINDS = ("orthonormal", "riesz", "iterated_unilateral", "iterated_bilateral", "tight", "random_frame")
# kinds whose every instance is representable by construction or by the corollaries
ALWAYS_REPRESENTABLE = ("orthonormal", "riesz", "iterated_unilateral", "iterated_bilateral")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def default_seed() -> int:
    return int(os.environ.get("GFRAME_SEED", "0"))


def _tol(args) -> Tolerance:
    return Tolerance(rel_residual=args.tol) if args.tol is not None else Tolerance()


def _header(command: str, g: GFrame, tol: Tolerance) -> dict:
    return {
        "command": command,
        "instance": {
            "fingerprint": fingerprint(g),
            "space_dim": g.space_dim,
            "index_origin": g.index_origin,
            "block_dims": list(g.block_dims),
        },
        "tolerance": {"rel_residual": tol.rel_residual, "rank_floor": tol.rank_floor},
    }


def _bounds(g, tol) -> dict:
    b = frame_bounds(g, tol)
    return {"lower": b.lower, "upper": b.upper}


def _rep_dict(rep) -> dict:
    d = {
        "representable": rep.representable,
        "operator": matrix_to_dict(rep.operator),
        "residuals": list(rep.residuals),
        "max_residual": rep.max_residual,
        "operator_norm": rep.operator_norm,
        "bound_sqrt_BA": rep.bound_sqrt_BA,
        "norm_lower_ok": rep.norm_lower_ok,
        "norm_upper_ok": rep.norm_upper_ok,
    }
    if rep.bilateral:
        d["inverse_norm"] = rep.inverse_norm
        d["power_residuals"] = list(rep.power_residuals)
    return d


def _to_plain(value):
    if isinstance(value, np.ndarray):
        return matrix_to_dict(np.atleast_2d(value))
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, dict):
        return {str(k): _to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_plain(v) for v in value]
    return value


def _check_dict(c: Check) -> dict:
    return {
        "tag": c.tag,
        "statement": c.statement,
        "tolerance": c.tolerance,
        "passed": bool(c.passed),
        "value": _to_plain(c.value),
        "note": c.note,
    }


def _finish(report: dict, checks) -> int:
    report["checks"] = [_check_dict(c) for c in checks]
    report["passed"] = all(c.passed for c in checks)
    sys.stdout.write(dumps(report) + "\n")
    return 0 if report["passed"] else 2


def _expected_for(meta: dict, g: GFrame) -> dict:
    """Expected verdicts carried by an instance file, if any."""
    cid = meta.get("catalog_id")
    if cid in CATALOG_IDS:
        ref, expected = paper_catalog(cid, **meta.get("catalog_options", {}))
        if fingerprint(ref) == fingerprint(g):
            return expected
    return dict(meta.get("expected", {}))


def cmd_analyze(args) -> int:
    tol = _tol(args)
    inst = load_instance(args.file)
    g = inst.frame
    cls = classify(g, tol)
    b = cls.bounds
    report = _header("analyze", g, tol)
    report["bounds"] = {"lower": b.lower, "upper": b.upper}
    report["classification"] = cls.flags()

    rng = np.random.default_rng(args.seed if args.seed is not None else default_seed())
    f = rng.standard_normal((g.space_dim, 32)) + 1j * rng.standard_normal((g.space_dim, 32))
    f /= np.linalg.norm(f, axis=0)
    energy = sum(np.sum(np.abs(blk @ f) ** 2, axis=0) for blk in g.blocks)
    slack = tol.rel_residual * max(b.upper, 1.0)
    sandwich = bool(np.all(energy >= b.lower - slack) and np.all(energy <= b.upper + slack))
    t = synthesis_matrix(g)
    s_gap = operator_norm(frame_operator(g) - t @ adjoint(t)) / max(b.upper, 1.0)
    checks = [
        Check("bounds", "A ||f||^2 <= sum ||Lambda_i f||^2 <= B ||f||^2 on 32 random unit vectors",
              tol.rel_residual, sandwich, [float(energy.min()), float(energy.max())]),
        Check("bounds", "S equals T T*", tol.rel_residual, s_gap <= tol.rel_residual, s_gap),
    ]
    return _finish(report, checks)


def cmd_represent(args) -> int:
    tol = _tol(args)
    inst = load_instance(args.file)
    g = inst.frame
    if args.bilateral and not g.is_bilateral:
        g = GFrame.bilateral(g.blocks)
    expected = _expected_for(inst.metadata, g)
    report = _header("represent", g, tol)
    report["bounds"] = _bounds(g, tol)
    checks = []
    want = bool(expected.get("representable", True))

    if g.is_bilateral:
        try:
            rep = find_representation_bilateral(g, tol)
        except NotInvertible as exc:
            report["representation"] = {"representable": False, "reason": str(exc)}
            checks.append(Check("rep", f"representable == {want}", tol.rel_residual, not want, None))
            return _finish(report, checks)
        report["representation"] = _rep_dict(rep)
        right = kernel_shift_invariance(g, tol, "right")
        left = kernel_shift_invariance(g, tol, "left")
        closure = cyclic_closure_residual(g, rep.operator)
        report["certificates"] = {
            "kernel_right_shift_invariant": right,
            "kernel_left_shift_invariant": left,
            "cyclic_closure_residual": closure,
        }
        if rep.representable:
            checks.append(Check("corollary-Z", "represented window: kernel invariant under both shifts",
                                tol.rank_floor, right and left, [right, left]))
            if is_frame_bounds(rep.bounds, tol):
                iso = isometry_report(g, rep, tol)
                report["isometry"] = {
                    "t_norm": iso.t_norm,
                    "t_inv_norm": iso.t_inv_norm,
                    "whitened_norm": iso.whitened_norm,
                    "whitened_inv_norm": iso.whitened_inv_norm,
                }
    else:
        rep = find_representation(g, tol)
        cert = certify_theorem_MT(g, tol)
        report["representation"] = _rep_dict(rep)
        report["certificates"] = {
            "omega_independent": cert.omega_independent,
            "kernel_shift_invariant": cert.kernel_shift_invariant,
            "guaranteed_bounded_rep": cert.guaranteed_bounded_rep,
        }
        checks.append(Check("inv", "represented implies right-shift invariant kernel", tol.rank_floor,
                            (not rep.representable) or cert.kernel_shift_invariant,
                            [rep.representable, cert.kernel_shift_invariant]))
        if cert.guaranteed_bounded_rep and is_frame_bounds(rep.bounds, tol):
            checks.append(Check("MT", "||T|| <= sqrt(B/A) under the certificate", tol.rel_residual,
                                rep.representable and rep.norm_upper_ok, [rep.operator_norm, rep.bound_sqrt_BA]))
    note = "" if want else "expected counterexample"
    checks.insert(0, Check("rep", f"representable == {want}", tol.rel_residual, rep.representable == want,
                           rep.max_residual, note))
    return _finish(report, checks)


def cmd_dual(args) -> int:
    tol = _tol(args)
    g = load_instance(args.file).frame
    report = _header("dual", g, tol)
    checks = []
    if args.canonical or not args.against:
        cd = canonical_dual(g, tol)
        rep_pair = verify_dual_pair(g, cd, tol)
        report["canonical_dual"] = instance_to_dict(cd, {"name": f"canonical dual of {fingerprint(g)}"})
        checks.append(Check("dual", "sum Lambda_i* (Lambda_i S^-1) = Id", rep_pair.threshold, rep_pair.is_dual,
                            rep_pair.defect))
    if args.against:
        theta = load_instance(args.against).frame
        if len(theta) == len(g) - 1:
            pair, head_mode = (g.head(), theta), True
        else:
            pair, head_mode = (g, theta), False
        dr = verify_dual_pair(*pair, tol, args.budget)
        report["dual_report"] = {
            "against": "link sources (first n-1 blocks)" if head_mode else "whole family",
            "defect": dr.defect,
            "symmetric_defect": dr.symmetric_defect,
            "is_dual": dr.is_dual,
            "condition_used": dr.condition_used,
            "threshold": dr.threshold,
        }
        checks.append(Check("dual", f"pair is dual ({dr.condition_used})", dr.threshold, dr.is_dual, dr.defect))
        if len(g) >= 2 and not g.is_bilateral and g.common_codim is not None:
            rep = find_representation(g, tol)
            head = g.head()
            if head_mode and dr.is_dual:
                cond = dual_representation_condition(g, theta, tol, args.budget)
                used = "given dual of the link sources"
            elif is_frame_bounds(frame_bounds(head, tol), tol):
                cond = dual_representation_condition(g, canonical_dual(head, tol), tol)
                used = "canonical dual of the link sources"
            else:
                cond, used = None, "link sources are not a frame"
            report["dual_condition"] = {"holds": cond, "dual_used": used, "representable": rep.representable}
            if cond is not None:
                checks.append(Check("dual", "expansion condition holds iff represented", tol.rel_residual,
                                    cond == rep.representable, [cond, rep.representable]))
        if dr.is_dual and not head_mode:
            report["dualrep"] = _dualrep_section(g, theta, tol, args.budget, checks)
    return _finish(report, checks)


def _dualrep_section(g, theta, tol, budget, checks) -> dict | None:
    if g.is_bilateral != theta.is_bilateral or len(g) < 3:
        return None
    solve = find_representation_bilateral if g.is_bilateral else find_representation
    try:
        r1, r2 = solve(g, tol), solve(theta, tol)
    except (NotInvertible, GFrameError) as exc:
        return {"skipped": str(exc)}
    if not (r1.representable and r2.representable):
        return {"skipped": "both sides must be representable"}
    gap = dualrep_gap(r1.operator, r2.operator)
    section = {"gap": gap, "T": matrix_to_dict(r1.operator), "S": matrix_to_dict(r2.operator)}
    if g.is_bilateral:
        holds = dualrep_relation(g, theta, r1.operator, r2.operator, tol, dual_budget=budget)
        section["holds"] = holds
        checks.append(Check("dualrep", "S = (T*)^-1 for represented dual windows", tol.rel_residual, holds, gap))
    else:
        section["note"] = "index set N: relation not asserted"
    return section


def _verify_one(g, expected, tol, seed):
    return run_suite(g, tol, expected, seed)


def cmd_verify(args) -> int:
    tol = _tol(args)
    seed = args.seed if args.seed is not None else default_seed()
    sources = [bool(args.file), bool(args.catalog), bool(args.random)]
    if sum(sources) != 1:
        raise UsageError("verify: give exactly one of FILE, --catalog ID or --random KIND")

    if args.random:
        return _verify_random(args.random, seed, args.trials, tol, args.format)

    if args.catalog:
        g, expected = paper_catalog(args.catalog)
    else:
        inst = load_instance(args.file)
        g = inst.frame
        expected = _expected_for(inst.metadata, g)
    checks = _verify_one(g, expected, tol, seed)
    if args.format == "text":
        for c in checks:
            print(c.line())
        ok = all(c.passed for c in checks)
        print(f"{'PASS' if ok else 'FAIL'} suite ({sum(c.passed for c in checks)}/{len(checks)} checks)")
        return 0 if ok else 2
    report = _header("verify", g, tol)
    if args.catalog:
        report["catalog_id"] = args.catalog
    report["summary"] = summarize(checks)
    return _finish(report, checks)


def _verify_random(kind, seed, trials, tol, fmt) -> int:
    if kind not in RANDOM_KINDS:
        raise UsageError(f"verify: --random must be one of {', '.join(RANDOM_KINDS)}")
    seeds = np.random.SeedSequence(seed).generate_state(trials)
    tag_rows = {}
    failures = []
    represented = 0
    for trial, s in enumerate(seeds):
        spec = random_spec(kind, int(s))
        g = generate(spec)
        expected = {"representable": True} if kind in ALWAYS_REPRESENTABLE else {}
        if kind == "iterated_unilateral":
            expected["T"] = generator_operator(spec) if _links_determine_t(g, tol) else None
        checks = _verify_one(g, expected, tol, int(s))
        for c in checks:
            row = tag_rows.setdefault(c.tag, [0, 0])
            row[0] += int(c.passed)
            row[1] += 1
            if not c.passed and len(failures) < 20:
                failures.append({"trial": trial, "seed": int(s), **_check_dict(c)})
        represented += int(_is_represented(g, tol))

    agg = [
        Check(tag, f"{kind} trials: every applicable check passed", tol.rel_residual, p == n, f"{p}/{n}")
        for tag, (p, n) in tag_rows.items()
    ]
    if kind in ALWAYS_REPRESENTABLE:
        agg.append(Check("rep", f"{kind} trials: representable", tol.rel_residual, represented == trials,
                         f"{represented}/{trials}"))
    if fmt == "text":
        for c in agg:
            print(f"{c.line()} {c.value}")
        ok = all(c.passed for c in agg)
        print(f"{'PASS' if ok else 'FAIL'} {kind}: {represented}/{trials} representable")
        return 0 if ok else 2
    report = {
        "command": "verify",
        "random": {"kind": kind, "seed": seed, "trials": trials},
        "tolerance": {"rel_residual": tol.rel_residual, "rank_floor": tol.rank_floor},
        "representable": f"{represented}/{trials}",
        "failures": failures,
    }
    return _finish(report, agg)


def _links_determine_t(g: GFrame, tol) -> bool:
    from .linalg import numerical_rank

    return numerical_rank(np.vstack(g.blocks[:-1]), tol) == g.space_dim


def _is_represented(g: GFrame, tol) -> bool:
    try:
        rep = find_representation_bilateral(g, tol) if g.is_bilateral else find_representation(g, tol)
    except NotInvertible:
        return False
    return rep.representable


def _parse_blocks(text: str, kind: str, dim: int, codim: int):
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) > 1:
        return tuple(int(p) for p in parts), len(parts)
    count = int(parts[0])
    if count < 1:
        raise UsageError("gen: --blocks must be positive")
    if kind in ("orthonormal", "riesz"):
        return even_split(dim, count), count
    return (codim,) * count, count


def cmd_gen(args) -> int:
    seed = args.seed if args.seed is not None else default_seed()
    if args.kind == "paper_catalog":
        if not args.catalog:
            raise UsageError("gen: --kind paper_catalog needs --catalog ID")
        g, expected = paper_catalog(args.catalog)
        meta = {"name": args.catalog, "catalog_id": args.catalog}
        if "truncation_note" in expected:
            meta["truncation_note"] = expected["truncation_note"]
    else:
        if args.dim is None or args.blocks is None:
            raise UsageError("gen: --dim and --blocks are required for generated kinds")
        dims, count = _parse_blocks(args.blocks, args.kind, args.dim, args.codim)
        extra = {"cond_cap": args.cond_cap}
        if args.kind.startswith("iterated"):
            extra["generator"] = args.generator
            if args.kind == "iterated_bilateral":
                if count % 2 == 0:
                    raise UsageError("gen: a bilateral window needs an odd number of blocks")
                extra["window"] = count // 2
                extra["period"] = count
            else:
                extra["count"] = count
        spec = GenSpec(args.kind, args.dim, dims, seed, extra)
        g = generate(spec)
        meta = {"name": f"{args.kind}-dim{args.dim}-seed{seed}", "generator": {"kind": args.kind, "seed": seed}}
    text = emit_instance(g, meta)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        sys.stdout.write(dumps({"command": "gen", "out": args.out, "fingerprint": fingerprint(g)}) + "\n")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gframes", description="Finite g-frames: bounds, duals and operator representations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def with_tol(p):
        p.add_argument("--tol", type=float, default=None, help="relative residual threshold (default 1e-8)")
        return p

    p = with_tol(sub.add_parser("analyze", help="frame bounds and classification"))
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_analyze)

    p = with_tol(sub.add_parser("represent", help="find T with Lambda_(i+1) = Lambda_i T"))
    p.add_argument("file")
    p.add_argument("--bilateral", action="store_true", help="treat the blocks as a window [-m, m]")
    p.set_defaults(func=cmd_represent)

    p = with_tol(sub.add_parser("dual", help="canonical dual and dual-pair checks"))
    p.add_argument("file")
    p.add_argument("--canonical", action="store_true", help="emit the canonical dual")
    p.add_argument("--against", metavar="FILE2", help="check FILE2 as a dual of FILE")
    p.add_argument("--budget", type=float, default=None, help="truncation budget for the dual defect")
    p.set_defaults(func=cmd_dual)

    p = with_tol(sub.add_parser("verify", help="run the theorem suite"))
    p.add_argument("file", nargs="?")
    p.add_argument("--catalog", choices=CATALOG_IDS)
    p.add_argument("--random", metavar="KIND")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit an instance file")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--dim", type=int)
    p.add_argument("--blocks", help="block count, or comma-separated block dims")
    p.add_argument("--codim", type=int, default=1, help="block row count when --blocks is a count")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cond-cap", type=float, default=10.0)
    p.add_argument("--generator", default="random", choices=("unitary", "diagonal", "random", "rotation"))
    p.add_argument("--catalog", choices=CATALOG_IDS)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("gframes: a subcommand is required (analyze, represent, dual, verify, gen)")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (GFrameError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
