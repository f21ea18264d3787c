"""Brute-force point counts against the symbolic polynomials, with timings.

    python scripts/oracle_sweep.py [--qs 2,3,5,7] [--extra "Grass(2,4)"]
"""

import argparse
import time

from trigonal5 import fq_oracle as fq


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--qs", default=",".join(map(str, fq.PRIMES)))
    ap.add_argument("--extra", action="append", default=[], help="additional spaces, e.g. Grass(2,4)")
    args = ap.parse_args()
    qs = [int(x) for x in args.qs.split(",")]

    print(f"{'space':<12} {'q':>2} {'count':>10} {'predicted':>10} {'ms':>8}  polynomial")
    mismatches = 0
    t_all = time.perf_counter()
    for name in list(fq.DEFAULT_SPACES) + args.extra:
        for q in qs:
            if not fq.admissible(name, q):
                continue
            t0 = time.perf_counter()
            try:
                r = fq.count_space(name, q)
            except fq.OracleError as e:
                print(f"{name:<12} {q:>2} skipped: {e}")
                continue
            ms = (time.perf_counter() - t0) * 1000
            mismatches += not r.match
            flag = "" if r.match else "  <-- MISMATCH"
            print(f"{r.space:<12} {q:>2} {r.count:>10} {r.predicted:>10} {ms:>8.1f}  {r.polynomial}{flag}")
    print(f"\n{mismatches} mismatches, {time.perf_counter() - t_all:.2f} s total")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
