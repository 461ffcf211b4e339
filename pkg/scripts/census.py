"""Tabulate (det, delta, level) over all labeled n-tournaments (n <= 7) or a
seeded sample (n = 8, 9), and the (delta, det) pairs at n = 6.

    python scripts/census.py 6
    python scripts/census.py 8 --samples 200000 --seed 1
"""

import argparse
from collections import Counter

from tourlab.verify import DEFAULT_SEED, census, default_threads


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--threads", type=int, default=default_threads())
    args = ap.parse_args()

    c = census(args.n, args.samples, args.seed, args.threads)
    how = "exhaustive" if c.exhaustive else f"seed {c.seed}"
    print(f"n = {c.n}: {c.population} tournaments ({how})")
    print(f"{'det':>6} {'delta':>6} {'level':>6} {'count':>9}")
    for d, dl, lv, cnt in c.rows():
        print(f"{d:>6} {dl:>6} {lv:>6} {cnt:>9}")

    levels = Counter()
    for (_, _, lv), cnt in c.table.items():
        levels[lv] += cnt
    print("\nlevel  count")
    for lv in sorted(levels):
        print(f"{lv:>5}  {levels[lv]}")


if __name__ == "__main__":
    main()
