import numpy as np
import pytest
from hypothesis import given, strategies as st

from gframes import paper_catalog, random_spec, generate
from gframes.duality import (
    canonical_dual,
    canonical_dual_representation,
    dual_defect,
    dual_representation_condition,
    dualrep_gap,
    dualrep_relation,
    representation_from_dual,
    verify_dual_pair,
)
from gframes.errors import NotAFrame, NotDual, NotRepresentable, ShapeMismatch
from gframes.frames import GFrame
from gframes.linalg import Tolerance
from gframes.generators import break_last_link, iterate_orbit, rotation
from gframes.representation import find_representation, find_representation_bilateral


def scalar_chain(values):
    return GFrame(1, tuple(np.array([[v]]) for v in values))


def test_dual_iii_duals():
    g, e = paper_catalog("dual-iii")
    for name in ("theta", "gamma"):
        report = verify_dual_pair(g, e["duals"][name]["frame"])
        assert report.is_dual and report.defect <= 1e-12
    assert not find_representation(e["duals"]["theta"]["frame"]).representable
    gamma_rep = find_representation(e["duals"]["gamma"]["frame"])
    assert gamma_rep.representable
    assert gamma_rep.operator[0, 0] == pytest.approx(0.5, abs=1e-12)


def test_full_length_condition_with_successor():
    g, e = paper_catalog("dual-iii")
    long = g.extended(e["successor"])
    for name in ("theta", "gamma"):
        theta = e["duals"][name]["frame"]
        assert dual_representation_condition(long, theta)
        assert representation_from_dual(long, theta).operator[0, 0] == pytest.approx(2.0)


def test_head_dual_length_is_enforced():
    g, e = paper_catalog("dual-iii")
    with pytest.raises(ShapeMismatch):
        dual_representation_condition(g, e["duals"]["theta"]["frame"])


def test_non_dual_rejected():
    g = scalar_chain([1.0, 2.0, 4.0])
    with pytest.raises(NotDual):
        dual_representation_condition(g, scalar_chain([1.0, 1.0]))


def test_canonical_dual_of_incomplete_family():
    with pytest.raises(NotAFrame):
        canonical_dual(GFrame(2, (np.array([[1.0, 0.0]]),)))


def test_dual_ii_truncated_defect():
    g, e = paper_catalog("dual-ii")
    theta = e["duals"]["theta"]["frame"]
    d = dual_defect(g, theta)
    assert e["defect"] / 2 <= d <= 2 * e["defect"]
    assert not verify_dual_pair(g, theta, Tolerance(rel_residual=1e-14)).is_dual
    assert verify_dual_pair(g, theta, budget=e["dual_budget"]).condition_used == "truncated-geometric"


def test_dual_ii_relation_fails_on_half_line():
    g, e = paper_catalog("dual-ii")
    t = (2 / 3) * np.eye(2)
    s = 0.75 * np.eye(2)
    assert dualrep_gap(t, s) == pytest.approx(0.75, abs=1e-12)
    assert not dualrep_relation(g, e["duals"]["theta"]["frame"], t, s, dual_budget=e["dual_budget"])


def test_canonical_dual_representation_requires_representable():
    g, _ = paper_catalog("no-rep-N")
    with pytest.raises(NotRepresentable):
        canonical_dual_representation(g, find_representation(g))


def test_bilateral_canonical_dual_is_inverse_adjoint():
    g = iterate_orbit(np.array([[1.0, 0.2]]), rotation(2, 7), 3)
    rep = find_representation_bilateral(g)
    cdr = canonical_dual_representation(g, rep)
    assert cdr.represents and cdr.match_bilateral
    assert cdr.match_defect <= 1e-10


@given(seed=st.integers(0, 2**32 - 1))
def test_canonical_dual_is_dual(seed):
    g = generate(random_spec("random_frame", seed))
    assert verify_dual_pair(g, canonical_dual(g)).is_dual


@given(seed=st.integers(0, 2**32 - 1), broken=st.booleans())
def test_condition_tracks_representability(seed, broken):
    g = generate(random_spec("iterated_unilateral", seed))
    if broken:
        g = break_last_link(g, np.random.default_rng(seed))
    cond = dual_representation_condition(g, canonical_dual(g.head()))
    assert cond == find_representation(g).representable
    assert cond != broken


@given(seed=st.integers(0, 2**32 - 1))
def test_both_orders_of_the_dual_sum_agree(seed):
    rng = np.random.default_rng(seed)
    g = generate(random_spec("random_frame", seed))
    theta = g.with_blocks([b + 0.1 * rng.standard_normal(b.shape) for b in canonical_dual(g).blocks])
    r = verify_dual_pair(g, theta)
    assert r.symmetric_defect == pytest.approx(r.defect, rel=1e-10, abs=1e-14)
