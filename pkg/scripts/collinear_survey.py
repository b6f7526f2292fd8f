"""How often small point sets are dependent, and whether a collinear run explains it.

For each degree n, draws seeded sets of every size up to 2n+1 and tallies
dependent sets against sets carrying n+2 collinear points.
"""

import argparse
import sys

from planecurves.curves import find_overloaded_line
from planecurves.generators import gen_point_cloud
from planecurves.independence import is_n_independent


def survey(max_n: int, trials: int) -> int:
    disagreements = 0
    print(f"{'n':>2s} {'size':>4s} {'dependent':>9s} {'with line':>9s}")
    for n in range(1, max_n + 1):
        for size in range(1, 2 * n + 2):
            dep = lined = 0
            for seed in range(trials):
                X = gen_point_cloud(size, seed)
                d = not is_n_independent(X, n)
                line = find_overloaded_line(X, n) is not None
                dep += d
                lined += line
                disagreements += d != line
            print(f"{n:2d} {size:4d} {dep:9d} {lined:9d}")
    print("disagreements:", disagreements)
    return 1 if disagreements else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--trials", type=int, default=50)
    args = ap.parse_args()
    return survey(args.max_n, args.trials)


if __name__ == "__main__":
    sys.exit(main())
