"""
Finite g-frames: families of operator blocks ``Lambda_i : H -> K_i``.

A :class:`GFrame` stores the blocks as ``k_i x dim(H)`` matrices. Index
sets are finite: a unilateral chain is indexed ``1..n`` and a bilateral
window ``-m..m``. Every predicate below is a statement about the finite
family itself, never about some infinite extension of it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, ShapeMismatch
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    adjoint,
    as_matrix,
    hermitian_eig,
    numerical_rank,
)


@dataclass(frozen=True, eq=False)
class GFrame:
    """Ordered family of operator blocks sharing the domain ``C^space_dim``.

    ``index_origin`` is 1 for unilateral chains and ``-m`` for a bilateral
    window ``[-m, m]`` (which must then hold exactly ``2m + 1`` blocks).
    Blocks are stored as read-only ``complex128`` arrays.
    """

    space_dim: int
    blocks: tuple
    index_origin: int = 1

    def __post_init__(self):
        if int(self.space_dim) < 1:
            raise DimensionMismatch("space_dim must be positive")
        if len(self.blocks) == 0:
            raise DimensionMismatch("a g-frame needs at least one block")
        frozen = []
        for i, b in enumerate(self.blocks):
            a = as_matrix(b, name=f"block {i}").copy()
            if a.shape[1] != self.space_dim:
                raise DimensionMismatch(
                    f"block {i} has {a.shape[1]} columns, expected space_dim={self.space_dim}"
                )
            a.setflags(write=False)
            frozen.append(a)
        object.__setattr__(self, "space_dim", int(self.space_dim))
        object.__setattr__(self, "blocks", tuple(frozen))
        origin = int(self.index_origin)
        object.__setattr__(self, "index_origin", origin)
        if origin > 1:
            raise DimensionMismatch("index_origin must be 1 (unilateral) or -m <= 0 (bilateral)")
        if origin <= 0 and len(frozen) != 1 - 2 * origin:
            raise DimensionMismatch(
                f"bilateral window [{origin}, {-origin}] needs {1 - 2 * origin} blocks, got {len(frozen)}"
            )

    @classmethod
    def from_blocks(cls, blocks: Sequence, index_origin: int = 1) -> "GFrame":
        """Build a frame, inferring ``space_dim`` from the first block."""
        blocks = [as_matrix(b) for b in blocks]
        if not blocks:
            raise DimensionMismatch("a g-frame needs at least one block")
        return cls(blocks[0].shape[1], tuple(blocks), index_origin)

    @classmethod
    def bilateral(cls, blocks: Sequence) -> "GFrame":
        """Window ``[-m, m]`` from an odd-length list ordered by index."""
        if len(blocks) % 2 == 0:
            raise DimensionMismatch("a bilateral window needs an odd number of blocks")
        return cls.from_blocks(blocks, index_origin=-(len(blocks) // 2))

    def __len__(self) -> int:
        return len(self.blocks)

    def __getitem__(self, index: int) -> np.ndarray:
        """Block by family index (``1..n`` or ``-m..m``)."""
        pos = index - self.index_origin
        if not 0 <= pos < len(self.blocks):
            raise IndexError(f"index {index} outside {self.indices}")
        return self.blocks[pos]

    @property
    def indices(self) -> range:
        return range(self.index_origin, self.index_origin + len(self.blocks))

    @property
    def block_dims(self) -> tuple:
        return tuple(b.shape[0] for b in self.blocks)

    @property
    def is_bilateral(self) -> bool:
        return self.index_origin <= 0

    @property
    def common_codim(self) -> int | None:
        """Shared ``dim K`` when all blocks have the same row count."""
        dims = set(self.block_dims)
        return dims.pop() if len(dims) == 1 else None

    def with_blocks(self, blocks: Sequence) -> "GFrame":
        return GFrame(self.space_dim, tuple(blocks), self.index_origin)

    def head(self) -> "GFrame":
        """All blocks but the last: the link sources of the chain."""
        if len(self.blocks) < 2:
            raise DimensionMismatch("head of a one-block family is empty")
        return GFrame(self.space_dim, self.blocks[:-1], 1)

    def extended(self, block) -> "GFrame":
        """Unilateral chain with ``block`` appended as ``Lambda_{n+1}``."""
        return GFrame(self.space_dim, self.blocks + (as_matrix(block),), 1)

    def right_multiply(self, s) -> "GFrame":
        """The family ``{Lambda_i s}``."""
        s = as_matrix(s)
        if s.shape != (self.space_dim, self.space_dim):
            raise DimensionMismatch(f"expected a {self.space_dim}x{self.space_dim} operator")
        return self.with_blocks([b @ s for b in self.blocks])

    def allclose(self, other: "GFrame", atol: float = 1e-12) -> bool:
        return (
            self.space_dim == other.space_dim
            and self.index_origin == other.index_origin
            and self.block_dims == other.block_dims
            and all(np.allclose(a, b, rtol=0, atol=atol) for a, b in zip(self.blocks, other.blocks))
        )


@dataclass(frozen=True)
class FrameBounds:
    """Optimal bounds: extreme eigenvalues of the frame operator."""

    lower: float
    upper: float

    @property
    def ratio_sqrt(self) -> float:
        """``sqrt(upper / lower)``; infinite when the family is not a frame."""
        if self.lower <= 0:
            return float("inf")
        return float(np.sqrt(self.upper / self.lower))


@dataclass(frozen=True)
class Classification:
    is_bessel: bool
    is_frame: bool
    is_tight: bool
    is_parseval: bool
    is_complete: bool
    is_riesz: bool
    is_orthonormal: bool
    bounds: FrameBounds

    def flags(self) -> dict:
        return {
            "bessel": self.is_bessel,
            "frame": self.is_frame,
            "tight": self.is_tight,
            "parseval": self.is_parseval,
            "complete": self.is_complete,
            "riesz": self.is_riesz,
            "orthonormal": self.is_orthonormal,
        }


def synthesis_matrix(g: GFrame) -> np.ndarray:
    """Block row ``[Lambda_1* | Lambda_2* | ...]`` of shape ``dim x sum(k_i)``."""
    return np.hstack([adjoint(b) for b in g.blocks])


def analysis_matrix(g: GFrame) -> np.ndarray:
    """Stacked blocks; maps ``f`` to ``(Lambda_1 f; Lambda_2 f; ...)``."""
    return np.vstack(g.blocks)


def frame_operator(g: GFrame) -> np.ndarray:
    """``S = sum_i Lambda_i* Lambda_i``, symmetrized against round-off."""
    s = np.zeros((g.space_dim, g.space_dim), dtype=complex)
    for b in g.blocks:
        s += adjoint(b) @ b
    return 0.5 * (s + adjoint(s))


def frame_bounds(g: GFrame, tol: Tolerance = DEFAULT_TOL) -> FrameBounds:
    w, _ = hermitian_eig(frame_operator(g), tol)
    lower = max(float(w[0]), 0.0)
    return FrameBounds(lower, max(float(w[-1]), lower))


def is_frame_bounds(bounds: FrameBounds, tol: Tolerance = DEFAULT_TOL) -> bool:
    return bounds.upper > 0 and bounds.lower > tol.rank_floor * bounds.upper


def classify(g: GFrame, tol: Tolerance = DEFAULT_TOL) -> Classification:
    """Frame-theoretic flags of the finite family.

    The Riesz test is the finite-dimensional form: injective synthesis
    together with ``sum(k_i) == dim H``. Orthonormality checks both the
    cross-Gram identity ``Lambda_i Lambda_j* = delta_ij Id`` and Parseval.
    """
    bounds = frame_bounds(g, tol)
    complete = is_frame_bounds(bounds, tol)
    tight = complete and (bounds.upper - bounds.lower) <= tol.rel_residual * bounds.upper
    parseval = tight and abs(bounds.upper - 1.0) <= tol.rel_residual and abs(bounds.lower - 1.0) <= tol.rel_residual

    t = synthesis_matrix(g)
    total = t.shape[1]
    riesz = complete and total == g.space_dim and numerical_rank(t, tol) == total

    gram = adjoint(t) @ t
    cross_ok = np.linalg.norm(gram - np.eye(total), 2) <= tol.rel_residual
    s_ok = np.linalg.norm(frame_operator(g) - np.eye(g.space_dim), 2) <= tol.rel_residual
    orthonormal = bool(cross_ok and s_ok)

    return Classification(
        is_bessel=True,
        is_frame=complete,
        is_tight=bool(tight),
        is_parseval=bool(parseval),
        is_complete=complete,
        is_riesz=bool(riesz),
        is_orthonormal=orthonormal,
        bounds=bounds,
    )


def flatten(g: GFrame) -> list:
    """Vectors ``Lambda_i* e_{i,j}`` in ``(i, j)`` lexicographic order.

    These are the conjugated rows of each block, i.e. the columns of the
    synthesis matrix.
    """
    return [np.conj(row).copy() for b in g.blocks for row in b]


def lift(frame_vectors) -> GFrame:
    """g-frame of functionals ``Lambda_i f = <f, f_i>`` (one ``1 x dim`` row each)."""
    vecs = [np.asarray(v, dtype=complex).ravel() for v in frame_vectors]
    if not vecs:
        raise DimensionMismatch("need at least one vector")
    dims = {v.size for v in vecs}
    if len(dims) != 1:
        raise DimensionMismatch(f"vectors have differing dimensions {sorted(dims)}")
    return GFrame.from_blocks([np.conj(v).reshape(1, -1) for v in vecs])


def check_same_shape(a: GFrame, b: GFrame):
    if a.space_dim != b.space_dim or a.block_dims != b.block_dims:
        raise ShapeMismatch(
            f"families differ: dims {a.space_dim} vs {b.space_dim}, blocks {a.block_dims} vs {b.block_dims}"
        )
