"""
Seeded instance generators.

All randomness flows through ``numpy.random.default_rng(seed)`` (PCG64
seeded via ``SeedSequence``), so a :class:`GenSpec` reproduces bit-identical
output on any platform numpy supports. Complex Gaussian entries are
``(N(0,1) + i N(0,1)) / sqrt(2)``; Haar unitaries come from QR with the
usual phase correction of the diagonal of ``R``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NotInvertible
from .frames import GFrame, frame_operator
from .linalg import DEFAULT_TOL, as_matrix, is_invertible, psd_inv_sqrt

KINDS = (
    "orthonormal",
    "riesz",
    "iterated_unilateral",
    "iterated_bilateral",
    "tight",
    "random_frame",
    "paper_catalog",
)

GENERATORS = ("unitary", "diagonal", "random", "rotation")


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    ``extra`` carries kind-specific options: ``cond_cap`` (riesz, random
    generators), ``generator`` and ``scale`` (iterated kinds), ``count`` /
    ``window`` (chain length), ``period`` (rotation generator), ``bound``
    (tight), ``id`` (paper_catalog).
    """

    kind: str
    space_dim: int
    block_dims: tuple = ()
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        object.__setattr__(self, "block_dims", tuple(int(k) for k in self.block_dims))
        if self.kind in ("orthonormal", "riesz") and sum(self.block_dims) != self.space_dim:
            raise DimensionMismatch(
                f"{self.kind} needs block dims summing to {self.space_dim}, got {self.block_dims}"
            )

    def streams(self, n: int = 3):
        """Independent child generators, so each ingredient is reproducible alone."""
        return [np.random.default_rng(s) for s in np.random.SeedSequence(self.seed).spawn(n)]


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(complex_gaussian(rng, (n, n)))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_conditioned(rng: np.random.Generator, n: int, cond_cap: float = 10.0) -> np.ndarray:
    """``W1 diag(s) W2*`` with singular values log-uniform in ``[1, cond_cap]``."""
    s = np.exp(rng.uniform(0.0, np.log(cond_cap), n))
    return (random_unitary(rng, n) * s) @ random_unitary(rng, n).conj().T


def rotation(n: int, period: int) -> np.ndarray:
    """Block-diagonal planar rotations with ``rotation(n, p)^p = Id``.

    Plane ``j`` (coordinates ``2j, 2j+1``) turns by ``2 pi (j+1) / period``;
    an odd leftover axis is fixed. For ``period > n`` all eigenvalues are
    distinct, so orbits of a generic vector span the whole space.
    """
    r = np.eye(n, dtype=complex)
    for j in range(n // 2):
        theta = 2.0 * np.pi * (j + 1) / period
        c, s = np.cos(theta), np.sin(theta)
        r[2 * j:2 * j + 2, 2 * j:2 * j + 2] = [[c, -s], [s, c]]
    return r


def split_rows(m: np.ndarray, block_dims) -> list:
    edges = np.cumsum((0,) + tuple(block_dims))
    return [m[a:b] for a, b in zip(edges[:-1], edges[1:])]


def gen_orthonormal(spec: GenSpec) -> GFrame:
    """Rows of a Haar unitary, partitioned by ``block_dims``."""
    if sum(spec.block_dims) != spec.space_dim:
        raise DimensionMismatch("block dims must sum to space_dim")
    (rng,) = spec.streams(1)
    u = random_unitary(rng, spec.space_dim)
    return GFrame(spec.space_dim, tuple(split_rows(u, spec.block_dims)))


def gen_riesz(spec: GenSpec):
    """``Lambda_i = Theta_i U`` with ``Theta`` g-orthonormal and ``cond(U) <= cond_cap``.

    ``extra["u"]`` overrides the random factor. Returns ``(frame, U)``.
    """
    theta = gen_orthonormal(spec)
    if "u" in spec.extra:
        u = as_matrix(spec.extra["u"], "u")
        if not is_invertible(u):
            raise NotInvertible("u must be invertible")
    else:
        _, rng = spec.streams(2)
        u = random_conditioned(rng, spec.space_dim, float(spec.extra.get("cond_cap", 10.0)))
    return theta.right_multiply(u), u


def generator_operator(spec: GenSpec) -> np.ndarray:
    """The seeded representing operator used by :func:`gen_iterated`."""
    kind = spec.extra.get("generator", "random")
    n = spec.space_dim
    rng = spec.streams(3)[2]
    if kind == "unitary":
        return random_unitary(rng, n)
    if kind == "diagonal":
        lo, hi = spec.extra.get("radius", (0.5, 1.5))
        mods = rng.uniform(lo, hi, n)
        return np.diag(mods * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n)))
    if kind == "random":
        m = random_conditioned(rng, n, float(spec.extra.get("cond_cap", 10.0)))
        return float(spec.extra.get("scale", 1.0)) * m / np.linalg.norm(m, 2)
    if kind == "rotation":
        return rotation(n, int(spec.extra.get("period", 9)))
    raise ValueError(f"unknown generator {kind!r}; expected one of {GENERATORS}")


def iterate_chain(lam1, t, count: int) -> GFrame:
    """``Lambda_i = Lambda_1 T^(i-1)`` for ``i = 1..count``."""
    lam1, t = as_matrix(lam1, "lam1"), as_matrix(t, "t")
    blocks = [lam1]
    for _ in range(count - 1):
        blocks.append(blocks[-1] @ t)
    return GFrame(lam1.shape[1], tuple(blocks))


def iterate_orbit(lam0, t, m: int) -> GFrame:
    """``Lambda_i = Lambda_0 T^i`` for ``i = -m..m``."""
    lam0, t = as_matrix(lam0, "lam0"), as_matrix(t, "t")
    if not is_invertible(t, DEFAULT_TOL):
        raise NotInvertible("bilateral orbit needs an invertible generator")
    t_inv = np.linalg.inv(t)
    forward, backward = [lam0], [lam0]
    for _ in range(m):
        forward.append(forward[-1] @ t)
        backward.append(backward[-1] @ t_inv)
    return GFrame.bilateral(backward[:0:-1] + forward)


def gen_iterated(spec: GenSpec, lam0=None, t=None, count_or_window: int | None = None) -> GFrame:
    """Exact power chain (``iterated_unilateral``) or orbit window (``iterated_bilateral``).

    Missing ingredients are drawn from the spec: ``lam0`` is complex
    Gaussian of shape ``block_dims[0] x space_dim`` and ``t`` comes from
    :func:`generator_operator`.
    """
    bilateral = spec.kind == "iterated_bilateral"
    if lam0 is None:
        rng = spec.streams(1)[0]
        k = spec.block_dims[0] if spec.block_dims else 1
        lam0 = complex_gaussian(rng, (k, spec.space_dim))
    if t is None:
        t = generator_operator(spec)
    if bilateral:
        m = count_or_window if count_or_window is not None else int(spec.extra.get("window", 3))
        return iterate_orbit(lam0, t, m)
    n = count_or_window if count_or_window is not None else int(spec.extra.get("count", 6))
    return iterate_chain(lam0, t, n)


def gen_random_frame(spec: GenSpec) -> GFrame:
    (rng,) = spec.streams(1)
    return GFrame(spec.space_dim, tuple(complex_gaussian(rng, (k, spec.space_dim)) for k in spec.block_dims))


def gen_tight(spec: GenSpec) -> GFrame:
    """Random frame pushed through ``S^{-1/2}``, scaled to bound ``extra["bound"]``."""
    if sum(spec.block_dims) < spec.space_dim:
        raise DimensionMismatch("a tight frame needs sum(block_dims) >= space_dim")
    g = gen_random_frame(spec)
    w = psd_inv_sqrt(frame_operator(g)) * np.sqrt(float(spec.extra.get("bound", 1.0)))
    return g.right_multiply(w)


def generate(spec: GenSpec) -> GFrame:
    if spec.kind == "orthonormal":
        return gen_orthonormal(spec)
    if spec.kind == "riesz":
        return gen_riesz(spec)[0]
    if spec.kind in ("iterated_unilateral", "iterated_bilateral"):
        return gen_iterated(spec)
    if spec.kind == "tight":
        return gen_tight(spec)
    if spec.kind == "random_frame":
        return gen_random_frame(spec)
    from .catalog import paper_catalog

    return paper_catalog(spec.extra["id"], **spec.extra.get("options", {}))[0]


def even_split(total: int, parts: int) -> tuple:
    base, rem = divmod(total, parts)
    return tuple(base + (1 if j < rem else 0) for j in range(parts))


def random_spec(kind: str, seed: int) -> GenSpec:
    """A randomized but seeded :class:`GenSpec` of the given kind.

    Used by property suites: g-orthonormal and g-Riesz instances get
    dimension 4..12 and equal block sizes (so a common codomain exists),
    chains get enough blocks for their link sources to form a frame.
    """
    rng = np.random.default_rng(np.random.SeedSequence([seed, KINDS.index(kind) + 1]))
    if kind in ("orthonormal", "riesz"):
        dim = int(rng.integers(4, 13))
        divisors = [k for k in range(1, dim // 2 + 1) if dim % k == 0]
        k = int(rng.choice(divisors))
        extra = {"cond_cap": float(rng.uniform(1.5, 50.0))} if kind == "riesz" else {}
        return GenSpec(kind, dim, (k,) * (dim // k), seed, extra)
    if kind == "iterated_unilateral":
        dim = int(rng.integers(2, 7))
        k = int(rng.integers(1, 4))
        count = -(-dim // k) + 1 + int(rng.integers(1, 4))
        generator = str(rng.choice(["unitary", "diagonal", "random"]))
        extra = {"generator": generator, "count": count, "scale": float(rng.uniform(0.6, 1.3))}
        return GenSpec(kind, dim, (k,) * count, seed, extra)
    if kind == "iterated_bilateral":
        dim = int(rng.integers(2, 5))
        k = int(rng.integers(1, 3))
        m = int(rng.integers(2, 5))
        extra = {"generator": "rotation", "period": 2 * m + 1, "window": m}
        return GenSpec(kind, dim, (k,) * (2 * m + 1), seed, extra)
    if kind in ("tight", "random_frame"):
        dim = int(rng.integers(2, 7))
        k = int(rng.integers(1, 4))
        n = -(-dim // k) + int(rng.integers(1, 4))
        return GenSpec(kind, dim, (k,) * n, seed, {})
    raise ValueError(f"random_spec does not support kind {kind!r}")


def break_last_link(g: GFrame, rng: np.random.Generator, size: float = 0.5) -> GFrame:
    """Replace ``Lambda_n`` by ``Lambda_n + size * ||Lambda_n|| * E`` with ``E`` Gaussian.

    When the earlier links already pin down ``T`` (``Lambda_1 .. Lambda_{n-2}``
    stacked to rank ``space_dim``) the result has no representation.
    """
    last = g.blocks[-1]
    noise = complex_gaussian(rng, last.shape)
    noise *= size * max(np.linalg.norm(last, 2), 1.0) / np.linalg.norm(noise, 2)
    return g.with_blocks(g.blocks[:-1] + (last + noise,))
