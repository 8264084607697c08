"""Norms of T, T^-1 and their whitened forms on orbit windows.

Windows covering a full period of a unitary generator close cyclically and
give unit norms. Windows of a non-unitary generator do not close, and the
whitened norms then drift away from 1.
"""
import argparse

import numpy as np

from gframes.generators import complex_gaussian, iterate_orbit, rotation
from gframes.representation import cyclic_closure_residual, find_representation_bilateral, isometry_report


def row(label, g):
    rep = find_representation_bilateral(g)
    iso = isometry_report(g, rep)
    closure = cyclic_closure_residual(g, rep.operator)
    print(f"{label:<22} {closure:9.1e} {iso.t_norm:8.4f} {iso.t_inv_norm:8.4f} "
          f"{iso.whitened_norm:8.4f} {iso.whitened_inv_norm:8.4f}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = np.random.default_rng(args.seed)
    lam0 = complex_gaussian(rng, (1, args.dim))

    print(f"{'window':<22} {'closure':>9} {'|T|':>8} {'|T^-1|':>8} {'|W|':>8} {'|W^-1|':>8}")
    for period in (5, 7, 9, 11):
        row(f"rotation p={period}", iterate_orbit(lam0, rotation(args.dim, period), period // 2))
    for m in (2, 4, 8):
        t = rotation(args.dim, 9) @ np.diag(np.linspace(0.8, 1.25, args.dim))
        row(f"scaled rotation m={m}", iterate_orbit(lam0, t, m))


if __name__ == "__main__":
    main()
