"""Structural D_5 recognizer against the numpy oracle.

Default: every labeled 7-tournament, then 1e5 seeded samples at n = 8 and 9
with the oracle restricted to subsets of size <= 8.  About 5 minutes on one
core; pass --threads to split the work.
"""

import argparse
import time

from tourlab.verify import DEFAULT_SEED, default_threads, sweep_recognizer


def report(res, elapsed: float) -> None:
    levels = ", ".join(f"{k}: {v}" for k, v in sorted(res.levels.items()))
    print(f"n = {res.n}: {res.count} tournaments, {res.recognized} certified, "
          f"{res.mismatch_total} disagreements, {res.bad_total} bad certificates, "
          f"{res.bound_total} delta-window violations ({elapsed:.1f}s)")
    print(f"  levels {{{levels}}}")
    for name in ("mismatches", "bad_certificates", "bound_violations"):
        if getattr(res, name):
            print(f"  first {name}: {getattr(res, name)}")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--full", type=int, nargs="*", default=[7], help="orders to sweep completely")
    ap.add_argument("--sampled", type=int, nargs="*", default=[8, 9])
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--max-size", type=int, default=8)
    ap.add_argument("--level-cap", type=int, default=5, choices=[3, 5])
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--threads", type=int, default=default_threads())
    args = ap.parse_args()

    ok = True
    for n in args.full:
        start = time.perf_counter()
        res = sweep_recognizer(n, level_cap=args.level_cap, threads=args.threads)
        report(res, time.perf_counter() - start)
        ok &= res.ok
    for k, n in enumerate(args.sampled):
        start = time.perf_counter()
        res = sweep_recognizer(n, samples=args.samples, seed=args.seed + k, max_size=args.max_size,
                               level_cap=args.level_cap, threads=args.threads)
        report(res, time.perf_counter() - start)
        ok &= res.ok
    return 0 if ok else 3


if __name__ == "__main__":
    raise SystemExit(main())
