"""Run the full computation and print every stage with the rendered tables.

    python scripts/run_pipeline.py [--json out.json]
"""

import argparse
import json

from trigonal5 import spectral as sp


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--json", help="also write the stage polynomials to this file")
    args = ap.parse_args()

    r = sp.run_pipeline()
    print(f"pipeline finished in {r.seconds * 1000:.1f} ms, all checks {'pass' if r.ok else 'FAIL'}\n")
    for name, poly in (("Sigma", r.sigma), ("X", r.X), ("X/GL2", r.X_mod_GL2), ("T5", r.T5), ("T5+H5", r.T5_H5)):
        print(f"{name:>6}: {poly.pretty()}")
    print(f"\nWang differentials: {r.killed}")
    w = sp.wennink_check(r.T5)
    print(f"point count: {w.count} (at q=2: {w.count(2)})\n")
    for tid in sorted(sp.TABLES):
        print(f"--- table {tid}")
        print(sp.TABLES[tid]())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(r.to_json(), fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
