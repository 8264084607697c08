import numpy as np
import pytest
from hypothesis import given, strategies as st

from gframes.errors import DimensionMismatch, NotInvertible
from gframes.frames import classify
from gframes.generators import (
    KINDS,
    GenSpec,
    even_split,
    gen_riesz,
    generate,
    generator_operator,
    iterate_orbit,
    random_spec,
    random_unitary,
    rotation,
)


def test_same_spec_same_bits():
    spec = GenSpec("riesz", 5, (1,) * 5, seed=11, extra={"cond_cap": 20.0})
    a, b = generate(spec), generate(spec)
    assert all(np.array_equal(x, y) for x, y in zip(a.blocks, b.blocks))


def test_different_seeds_differ():
    a = generate(GenSpec("random_frame", 3, (2, 2), seed=1))
    b = generate(GenSpec("random_frame", 3, (2, 2), seed=2))
    assert not a.allclose(b)


def test_unknown_kind_and_bad_split():
    with pytest.raises(ValueError):
        GenSpec("nope", 2)
    with pytest.raises(DimensionMismatch):
        GenSpec("orthonormal", 4, (1, 2))


def test_riesz_condition_cap_and_override():
    spec = GenSpec("riesz", 6, (2, 2, 2), seed=5, extra={"cond_cap": 8.0})
    g, u = gen_riesz(spec)
    assert np.linalg.cond(u) <= 8.0 + 1e-9
    assert classify(g).is_riesz
    g2, u2 = gen_riesz(GenSpec("riesz", 6, (2, 2, 2), seed=5, extra={"u": 3 * np.eye(6)}))
    assert np.allclose(u2, 3 * np.eye(6))
    with pytest.raises(NotInvertible):
        gen_riesz(GenSpec("riesz", 2, (1, 1), extra={"u": np.zeros((2, 2))}))


def test_rotation_has_period():
    r = rotation(5, 9)
    assert np.allclose(np.linalg.matrix_power(r, 9), np.eye(5), atol=1e-12)
    assert len(set(np.round(np.linalg.eigvals(r), 10))) == 5


def test_orbit_needs_invertible_generator():
    with pytest.raises(NotInvertible):
        iterate_orbit(np.eye(2), np.diag([1.0, 0.0]), 2)


@pytest.mark.parametrize("gen", ["unitary", "diagonal", "random", "rotation"])
def test_generator_operator_kinds(gen):
    t = generator_operator(GenSpec("iterated_unilateral", 4, (1,), seed=3, extra={"generator": gen, "scale": 0.9}))
    assert t.shape == (4, 4)
    if gen in ("unitary", "rotation"):
        assert np.allclose(t.conj().T @ t, np.eye(4), atol=1e-12)
    if gen == "random":
        assert np.linalg.norm(t, 2) == pytest.approx(0.9)


def test_even_split():
    assert even_split(7, 3) == (3, 2, 2)


@given(n=st.integers(1, 12), seed=st.integers(0, 2**32 - 1))
def test_random_unitary_is_unitary(n, seed):
    u = random_unitary(np.random.default_rng(seed), n)
    assert np.allclose(u.conj().T @ u, np.eye(n), atol=1e-12)


@given(seed=st.integers(0, 2**32 - 1), kind=st.sampled_from([k for k in KINDS if k != "paper_catalog"]))
def test_random_specs_generate_frames(seed, kind):
    spec = random_spec(kind, seed)
    g = generate(spec)
    assert g.space_dim == spec.space_dim
    target = g.head() if kind == "iterated_unilateral" else g
    assert classify(target).is_frame
