#!/usr/bin/env python3
"""Run the exhaustive (or sampled) census and print the pattern table.

Examples:
    python scripts/run_census.py --size 3 --jobs 4
    python scripts/run_census.py --size 2 --dedup
    python scripts/run_census.py --size 4 --sample 100000 --seed 1
"""

import argparse
import os
import time

from locsemi.enumeration import census, format_census_table, sample_census


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--dedup", action="store_true")
    ap.add_argument("--sample", type=int, default=0)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.perf_counter()
    if args.sample:
        rows = sample_census(args.size, args.sample, args.seed)
        print(f"sampled census size={args.size} count={args.sample} seed={args.seed}")
    else:
        rows = census(args.size, jobs=args.jobs, dedup=args.dedup)
        print(f"census size={args.size} mode={'dedup' if args.dedup else 'raw'} "
              f"jobs={args.jobs}")
    print(format_census_table(rows))
    print(f"elapsed: {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
