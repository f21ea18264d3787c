"""List every base compatible with a degenerate two-row page, by number of cancelling pairs.

The C*-bundle step of the pipeline picks the solution with the fewest pairs.
This script shows what else is arithmetically possible, for the quotient by
GL(2) and for the P^2-fibration of column L.

    python scripts/fibration_alternatives.py [--max-pairs 4]
"""

import argparse

from trigonal5 import column_engine as ce
from trigonal5 import spectral as sp
from trigonal5.hg_ring import enumerate_fibration_solutions, wang_pattern


def show(title, total, pattern, max_pairs):
    print(f"== {title}: {total.pretty()}")
    for sol in enumerate_fibration_solutions(total, pattern, max_pairs=max_pairs):
        print(f"  {len(sol.pairs)} pairs {sol.pairs}: {sol.unknown.pretty()}")
    print()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-pairs", type=int, default=4)
    args = ap.parse_args()
    show("C*-bundle over the moduli space", sp.X_MOD_GL2, wang_pattern(), args.max_pairs)
    show("P^2-fibration of column L", ce.LCAL_QUOTED, ce.p2_fibration_pattern(), args.max_pairs)


if __name__ == "__main__":
    main()
