"""
Literal examples from the theory, instantiated at fixed finite truncations.

Each entry returns ``(frame, expected)``. ``expected`` always holds
``representable`` and ``source``; other keys depend on the example:

``T``                 representing operator the example names
``omega_independent`` expected verdict of the injectivity certificate
``lsq_t``             least-squares scalar for the non-representable chain
``duals``             name -> dict(frame, is_dual, representable, T)
``successor``         the next block ``Lambda_{n+1}`` of the infinite family
``dual_budget``       truncation budget for truncated dual pairs
``defect``            analytic dual defect at this truncation
``dualrep_holds``     whether ``S = (T*)^-1`` holds for the named pair
"""
from __future__ import annotations

import numpy as np

from .errors import UnknownId
from .frames import GFrame, lift
from .generators import complex_gaussian, iterate_orbit, random_conditioned, rotation

CATALOG_IDS = (
    "tless1-i",
    "tless1-ii",
    "tless1-iii",
    "frem",
    "no-rep-N",
    "no-rep-Z",
    "e1",
    "dual-ii",
    "dual-iii",
    "rotation-9",
)


def _scalar_chain(values, dim: int = 1, index_origin: int = 1) -> GFrame:
    eye = np.eye(dim)
    return GFrame(dim, tuple(v * eye for v in values), index_origin)


def _tless1_i(dim: int = 3, seed: int = 0):
    rng = np.random.default_rng(seed)
    l1 = random_conditioned(rng, dim, 5.0)
    l2 = random_conditioned(rng, dim, 5.0)
    g = GFrame(dim, (l1, l2))
    return g, {
        "representable": True,
        "T": np.linalg.solve(l1, l2),
        "source": "two invertible blocks are represented by Lambda_1^-1 Lambda_2",
    }


def _tless1_ii(n: int = 12, dim: int = 2):
    g = _scalar_chain([2.0 ** (i - 1) / 3.0 ** (i - 2) for i in range(1, n + 1)], dim)
    return g, {
        "representable": True,
        "T": (2.0 / 3.0) * np.eye(dim),
        "successor": (2.0 ** n / 3.0 ** (n - 1)) * np.eye(dim),
        "source": "Lambda_i = 2^(i-1)/3^(i-2) Id is represented by (2/3) Id",
    }


def _orbit_vectors(n: int, seed: int):
    rng = np.random.default_rng(seed)
    t = random_conditioned(rng, 3, 4.0)
    t = 0.9 * t / np.linalg.norm(t, 2)
    f = [complex_gaussian(rng, 3)]
    for _ in range(n):
        f.append(t @ f[-1])
    return t, f


def _tless1_iii(n: int = 6, seed: int = 1):
    t, f = _orbit_vectors(n + 1, seed)
    blocks = [np.vstack([np.conj(f[i]), np.conj(f[i + 1])]) for i in range(n)]
    g = GFrame(3, tuple(blocks))
    return g, {
        "representable": True,
        "T": t.conj().T,
        "source": "Lambda_i f = (<f,f_i>, <f,f_(i+1)>) over f_i = T^(i-1) f_1 is represented by T*",
    }


def _frem(n: int = 6, seed: int = 1):
    t, f = _orbit_vectors(n - 1, seed)
    g = lift(f)
    return g, {
        "representable": True,
        "T": t.conj().T,
        "source": "functionals <., T^(i-1) f_1> are represented by T*",
    }


def _no_rep_n(n: int = 4):
    c = [1.0 / (k ** 4 + 1) for k in range(1, n + 1)]
    g = _scalar_chain(c)
    lsq = sum(a * b for a, b in zip(c[:-1], c[1:])) / sum(a * a for a in c[:-1])
    return g, {
        "representable": False,
        "lsq_t": lsq,
        "source": "Lambda_n = 1/(n^4+1) Id_C has no representation",
    }


def _no_rep_z(m: int = 3):
    g = _scalar_chain([1.0 / (k * k - 2 * k + 4) for k in range(-m, m + 1)], index_origin=-m)
    return g, {
        "representable": False,
        "source": "Lambda_n = 1/(n^2-2n+4) Id_C over Z has no representation",
    }


def _e1(n: int = 6, dim: int = 2):
    g = _scalar_chain([0.5 ** (i - 1) for i in range(1, n + 1)], dim)
    return g, {
        "representable": True,
        "T": 0.5 * np.eye(dim),
        "omega_independent": False,
        "successor": 0.5 ** n * np.eye(dim),
        "source": "Lambda_i = (1/2)^(i-1) Id is represented by Id/2 but is not omega-independent",
    }


def _dual_ii(n: int = 40, dim: int = 2):
    g = _scalar_chain([(2.0 / 3.0) ** i for i in range(1, n + 1)], dim)
    theta = _scalar_chain([0.75 ** i for i in range(1, n + 1)], dim)
    tail = 0.5 ** n
    return g, {
        "representable": True,
        "T": (2.0 / 3.0) * np.eye(dim),
        "successor": (2.0 / 3.0) ** (n + 1) * np.eye(dim),
        "defect": tail,
        "dual_budget": 2.0 * tail,
        "duals": {
            "theta": {"frame": theta, "is_dual": True, "representable": True, "T": 0.75 * np.eye(dim)},
        },
        "dualrep_holds": False,
        "truncation_note": f"geometric duals truncated at N={n}; tail sum (1/2)^N",
        "source": "(2/3)^i Id and (3/4)^i Id are dual, represented by 2/3 and 3/4",
    }


def _dual_iii():
    g = _scalar_chain([1.0, 2.0, 4.0])
    theta = _scalar_chain([-2.0, 1.0, 0.25])
    gamma = _scalar_chain([1.0 / 3.0, 1.0 / 6.0, 1.0 / 12.0])
    return g, {
        "representable": True,
        "T": np.array([[2.0]]),
        "successor": np.array([[8.0]]),
        "duals": {
            "theta": {"frame": theta, "is_dual": True, "representable": False},
            "gamma": {"frame": gamma, "is_dual": True, "representable": True, "T": np.array([[0.5]])},
        },
        "source": "Lambda_i = 2^(i-1) Id_C, i=1..3, with duals (-2, 1, 1/4) and (1/3)(1/2)^(i-1)",
    }


def _rotation_9(seed: int | None = None):
    t = rotation(2, 9)
    lam0 = np.eye(2) if seed is None else complex_gaussian(np.random.default_rng(seed), (1, 2))
    g = iterate_orbit(lam0, t, 4)
    return g, {
        "representable": True,
        "T": t,
        "source": "constructed: full-period orbit of the rotation by 2 pi / 9",
    }


_BUILDERS = {
    "tless1-i": _tless1_i,
    "tless1-ii": _tless1_ii,
    "tless1-iii": _tless1_iii,
    "frem": _frem,
    "no-rep-N": _no_rep_n,
    "no-rep-Z": _no_rep_z,
    "e1": _e1,
    "dual-ii": _dual_ii,
    "dual-iii": _dual_iii,
    "rotation-9": _rotation_9,
}


def paper_catalog(catalog_id: str, **options):
    """Finite instance and expected outcomes for a catalog id.

    ``options`` override the documented truncation defaults, e.g.
    ``paper_catalog("dual-ii", n=60)`` or ``paper_catalog("no-rep-Z", m=5)``.
    """
    try:
        builder = _BUILDERS[catalog_id]
    except KeyError:
        raise UnknownId(f"unknown catalog id {catalog_id!r}; known: {', '.join(CATALOG_IDS)}") from None
    return builder(**options)
