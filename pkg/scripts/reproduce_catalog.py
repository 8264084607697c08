"""Print the verdict of every catalog entry next to its expected outcome."""
import argparse

from gframes import CATALOG_IDS, paper_catalog
from gframes.linalg import Tolerance
from gframes.representation import find_representation, find_representation_bilateral
from gframes.suite import run_suite


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tol", type=float, default=1e-8)
    parser.add_argument("--checks", action="store_true", help="print every suite check")
    args = parser.parse_args()
    tol = Tolerance(rel_residual=args.tol)

    print(f"{'id':<12} {'expected':>8} {'found':>6} {'residual':>10} {'suite':>8}")
    for cid in CATALOG_IDS:
        g, expected = paper_catalog(cid)
        solve = find_representation_bilateral if g.is_bilateral else find_representation
        rep = solve(g, tol)
        checks = run_suite(g, tol, expected)
        passed = sum(c.passed for c in checks)
        print(f"{cid:<12} {str(expected['representable']):>8} {str(rep.representable):>6} "
              f"{rep.max_residual:10.2e} {passed:>4}/{len(checks):<3}")
        if args.checks:
            for c in checks:
                print("    " + c.line())


if __name__ == "__main__":
    main()
