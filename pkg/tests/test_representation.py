from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gframes import paper_catalog, random_spec, generate
from gframes.errors import ChainTooShort, DimensionMismatch, GFrameError, NotInvertible, NotRepresentable
from gframes.frames import GFrame, flatten
from gframes.linalg import nullspace_basis as la_nullspace
from gframes.generators import iterate_chain, iterate_orbit, rotation
from gframes.representation import (
    certify_theorem_MT,
    check_representation,
    cyclic_closure_residual,
    find_representation,
    find_representation_bilateral,
    isometry_report,
    kernel_shift_invariance,
    similarity_transport,
    solve_links,
)

from conftest import cgauss


def scalar_chain(values, origin=1):
    return GFrame(1, tuple(np.array([[v]]) for v in values), origin)


def lsq_scalar_oracle(values):
    """Scalar t minimizing sum (c_{k+1} - c_k t)^2, in exact arithmetic."""
    c = [Fraction(v) for v in values]
    return sum(a * b for a, b in zip(c[:-1], c[1:])) / sum(a * a for a in c[:-1])


def test_no_rep_n_scalar_lsq_matches_exact_oracle():
    values = [Fraction(1, k**4 + 1) for k in range(1, 5)]
    exact = lsq_scalar_oracle(values)
    g, expected = paper_catalog("no-rep-N")
    rep = find_representation(g)
    assert not rep.representable
    assert rep.operator[0, 0].real == pytest.approx(float(exact), abs=1e-14)
    assert expected["lsq_t"] == pytest.approx(float(exact), abs=1e-14)
    assert float(exact) == pytest.approx(0.11899, abs=1e-4)


def test_two_invertible_blocks_always_represented():
    g, expected = paper_catalog("tless1-i")
    rep = find_representation(g)
    assert rep.representable
    assert np.allclose(rep.operator, expected["T"], atol=1e-10)


@pytest.mark.parametrize("cid", ["tless1-ii", "tless1-iii", "frem", "e1", "dual-iii"])
def test_catalog_positive_entries(cid):
    g, expected = paper_catalog(cid)
    rep = find_representation(g)
    assert rep.representable
    assert np.allclose(rep.operator, expected["T"], atol=1e-9)


def test_e1_is_not_omega_independent():
    g, _ = paper_catalog("e1")
    cert = certify_theorem_MT(g)
    assert not cert.omega_independent
    assert cert.kernel_shift_invariant
    assert not cert.guaranteed_bounded_rep


def test_chain_too_short_and_codim():
    with pytest.raises(ChainTooShort):
        find_representation(scalar_chain([1.0]))
    with pytest.raises(DimensionMismatch):
        find_representation(GFrame(2, (np.eye(2), np.ones((1, 2)))))


def test_find_representation_refuses_window():
    g, _ = paper_catalog("no-rep-Z")
    with pytest.raises(GFrameError):
        find_representation(g)
    with pytest.raises(GFrameError):
        find_representation_bilateral(scalar_chain([1.0, 2.0, 3.0]))


def test_no_rep_z_not_represented():
    g, _ = paper_catalog("no-rep-Z")
    rep = find_representation_bilateral(g)
    assert not rep.representable
    assert rep.max_residual > 1e-3


def test_bilateral_singular_candidate_raises():
    g = GFrame.bilateral([np.array([[1.0, 0.0]])] * 3)
    with pytest.raises(NotInvertible):
        check_representation(g, np.diag([1.0, 0.0]))


def test_kernel_violation_scalar():
    g = scalar_chain([1.0, 1.0, 2.0])
    assert not kernel_shift_invariance(g)
    assert not find_representation(g).representable


def test_kernel_direction_validation():
    with pytest.raises(ValueError):
        kernel_shift_invariance(scalar_chain([1.0, 2.0]), direction="up")


def test_rotation_window_closes_and_is_isometric():
    t = rotation(2, 9)
    g = iterate_orbit(np.array([[1.0, 0.3]]), t, 4)
    rep = find_representation_bilateral(g)
    assert rep.representable
    assert np.allclose(rep.operator, t, atol=1e-10)
    assert cyclic_closure_residual(g, rep.operator) < 1e-12
    iso = isometry_report(g, rep)
    assert iso.t_isometry and iso.whitened_unitary


def test_unclosed_window_whitened_norm_not_one():
    t = np.diag([1.5, 0.8])
    g = iterate_orbit(np.array([[1.0, 1.0]]), t, 3)
    rep = find_representation_bilateral(g)
    assert rep.representable
    assert cyclic_closure_residual(g, rep.operator) > 1e-3
    assert not isometry_report(g, rep).whitened_unitary


def test_similarity_transport_rejects_singular_and_unrepresented():
    g, _ = paper_catalog("e1")
    rep = find_representation(g)
    with pytest.raises(NotInvertible):
        similarity_transport(g, np.zeros((2, 2)), rep)
    h, _ = paper_catalog("no-rep-N")
    with pytest.raises(NotRepresentable):
        similarity_transport(h, np.eye(1), find_representation(h))


def test_minimal_norm_solution_on_rank_deficient_head():
    # every block kills e2, so the second row of T is free; pinv picks zero
    g = GFrame(2, tuple(np.array([[0.5**i, 0.0]]) for i in range(4)))
    t = solve_links(g)
    assert np.allclose(t, [[0.5, 0.0], [0.0, 0.0]], atol=1e-12)


@given(seed=st.integers(0, 2**32 - 1))
def test_exact_chains_are_represented(seed):
    spec = random_spec("iterated_unilateral", seed)
    g = generate(spec)
    rep = find_representation(g)
    assert rep.representable
    assert kernel_shift_invariance(g)


@given(seed=st.integers(0, 2**32 - 1), dim=st.integers(1, 4), count=st.integers(2, 6))
def test_lsq_candidate_satisfies_links_of_any_chain(seed, dim, count):
    rng = np.random.default_rng(seed)
    t = cgauss(rng, (dim, dim))
    g = iterate_chain(cgauss(rng, (1, dim)), t, count)
    rep = find_representation(g)
    # a representing operator exists, so the minimal-norm one represents too
    assert rep.max_residual <= 1e-6 or np.linalg.cond(np.vstack(g.blocks[:-1])) > 1e6


@given(seed=st.integers(0, 2**32 - 1))
def test_minimal_norm_against_nullspace_perturbations(seed):
    rng = np.random.default_rng(seed)
    dim = int(rng.integers(2, 6))
    # a rank-deficient chain: every block lives on the first dim-1 coordinates
    t = np.zeros((dim, dim), dtype=complex)
    t[:-1, :-1] = cgauss(rng, (dim - 1, dim - 1))
    lam1 = np.hstack([cgauss(rng, (1, dim - 1)), np.zeros((1, 1))])
    g = iterate_chain(lam1, t, dim + 2)
    rep = find_representation(g)
    v = np.vstack(g.blocks[:-1])
    null = la_nullspace(v)
    assert null.shape[1] >= 1
    other = rep.operator + null @ cgauss(rng, (null.shape[1], dim))
    alt = check_representation(g, other)
    assert np.allclose(alt.residuals, rep.residuals, atol=1e-9)
    assert np.linalg.norm(rep.operator) <= np.linalg.norm(other) + 1e-12


@given(seed=st.integers(0, 2**32 - 1))
def test_norm_bound_on_omega_independent_exact_chains(seed):
    rng = np.random.default_rng(seed)
    dim = int(rng.integers(2, 7))
    t = cgauss(rng, (dim, dim))
    t *= rng.uniform(0.3, 2.0) / np.linalg.norm(t, 2)
    g = iterate_chain(cgauss(rng, (1, dim)), t, dim)
    cert = certify_theorem_MT(g)
    rep = find_representation(g)
    if cert.omega_independent and rep.bounds.lower > 1e-8 * rep.bounds.upper:
        assert rep.representable
        assert rep.operator_norm <= rep.bound_sqrt_BA * (1 + 1e-8)


@given(seed=st.integers(0, 2**32 - 1))
def test_independent_functionals_have_injective_synthesis(seed):
    rng = np.random.default_rng(seed)
    dim = int(rng.integers(2, 6))
    g = iterate_chain(cgauss(rng, (1, dim)), cgauss(rng, (dim, dim)), dim)
    vecs = np.array(flatten(g)).T
    if np.linalg.matrix_rank(vecs) == dim:
        assert certify_theorem_MT(g).omega_independent
