import numpy as np
import pytest
from hypothesis import given, strategies as st

from gframes import linalg as la
from gframes.errors import DimensionMismatch, NegativeEigenvalue, NonSquare, NotHermitian

from conftest import cgauss

TOL = la.Tolerance()


def test_tolerance_must_be_positive():
    with pytest.raises(ValueError):
        la.Tolerance(rel_residual=0.0)
    with pytest.raises(ValueError):
        la.Tolerance(rank_floor=-1.0)


def test_as_matrix_promotes_vectors_and_rejects_bad_input():
    assert la.as_matrix(np.ones(3)).shape == (1, 3)
    assert la.as_matrix(2.0).shape == (1, 1)
    with pytest.raises(DimensionMismatch):
        la.as_matrix(np.ones((2, 2, 2)))
    with pytest.raises(ValueError):
        la.as_matrix(np.array([[np.nan]]))


def test_symmetrize_requires_square_and_hermitian():
    with pytest.raises(NonSquare):
        la.symmetrize(np.ones((2, 3)))
    with pytest.raises(NotHermitian):
        la.symmetrize(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_psd_sqrt_rejects_negative_spectrum():
    with pytest.raises(NegativeEigenvalue):
        la.psd_sqrt(np.diag([1.0, -0.5]))


def test_psd_sqrt_clips_roundoff_negatives():
    m = np.diag([1.0, -1e-14])
    r = la.psd_sqrt(m)
    assert np.allclose(r @ r, np.diag([1.0, 0.0]), atol=1e-12)


def test_relative_residual_absolute_for_zero_target():
    assert la.relative_residual(np.zeros((2, 2)), 1e-3 * np.eye(2)) == pytest.approx(np.sqrt(2) * 1e-3)
    assert la.relative_residual(2 * np.eye(2), 2 * np.eye(2)) == 0.0


def test_nullspace_and_rank_of_rank_one():
    v = np.array([[1.0], [2.0], [3.0]])
    m = v @ v.T
    assert la.numerical_rank(m) == 1
    k = la.nullspace_basis(m)
    assert k.shape == (3, 2)
    assert np.linalg.norm(m @ k) < 1e-12


def test_is_invertible_relative():
    assert la.is_invertible(1e-20 * np.eye(3))
    assert not la.is_invertible(np.diag([1.0, 1e-14]))


@given(n=st.integers(1, 8), m=st.integers(1, 8), seed=st.integers(0, 2**32 - 1))
def test_pinv_penrose(n, m, seed):
    a = cgauss(np.random.default_rng(seed), (n, m))
    p = la.pinv(a)
    scale = np.linalg.norm(a, 2)
    assert np.linalg.norm(a @ p @ a - a, 2) <= 1e-10 * scale
    assert np.linalg.norm(p @ a @ p - p, 2) <= 1e-10 * np.linalg.norm(p, 2)
    assert np.linalg.norm((a @ p).conj().T - a @ p, 2) <= 1e-10
    assert np.linalg.norm((p @ a).conj().T - p @ a, 2) <= 1e-10


@given(n=st.integers(1, 10), seed=st.integers(0, 2**32 - 1))
def test_psd_roots_invert_each_other(n, seed):
    b = cgauss(np.random.default_rng(seed), (n, n))
    s = b @ b.conj().T + 0.1 * np.eye(n)
    r, ri = la.psd_sqrt(s), la.psd_inv_sqrt(s)
    assert np.allclose(r @ r, s, atol=1e-9 * np.linalg.norm(s, 2))
    assert np.allclose(r @ ri, np.eye(n), atol=1e-8)


def test_svd_returns_v_not_vh(rng):
    a = cgauss(rng, (4, 3))
    u, s, v = la.svd(a)
    assert np.allclose(u @ np.diag(s) @ v.conj().T, a)


def test_operator_norm_of_empty_is_zero():
    assert la.operator_norm(np.zeros((0, 3))) == 0.0
