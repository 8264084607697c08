"""Dual defect and recovered operator of the geometric pair as the truncation grows."""
import argparse

import numpy as np

from gframes import paper_catalog
from gframes.duality import dual_defect, representation_from_dual


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[5, 10, 20, 30, 40, 50])
    args = parser.parse_args()
    print(f"{'N':>4} {'defect':>11} {'(1/2)^N':>11} {'|T - 2/3|':>11}")
    for n in args.sizes:
        g, e = paper_catalog("dual-ii", n=n)
        theta = e["duals"]["theta"]["frame"]
        rep = representation_from_dual(g.extended(e["successor"]), theta, budget=e["dual_budget"])
        err = np.linalg.norm(rep.operator - (2 / 3) * np.eye(2), 2)
        print(f"{n:>4} {dual_defect(g, theta):11.3e} {0.5 ** n:11.3e} {err:11.3e}")


if __name__ == "__main__":
    main()
