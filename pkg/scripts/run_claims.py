"""Replay every registered claim and write a JSON report.

    python scripts/run_claims.py --out results/claims.json
    python scripts/run_claims.py thm-detln prop-sixdd --samples 2000
"""

import argparse
import json
import sys
from pathlib import Path

from tourlab.verify import CLAIMS, ClaimConfig, DEFAULT_SEED, default_threads, run_claim


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("claims", nargs="*", help="claim ids (default: all)")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--samples", type=int, default=ClaimConfig.samples)
    ap.add_argument("--exhaustive-max", type=int, default=ClaimConfig.exhaustive_max)
    ap.add_argument("--threads", type=int, default=default_threads())
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    cfg = ClaimConfig(args.seed, args.samples, args.exhaustive_max, args.threads)
    reports = []
    for cid in args.claims or list(CLAIMS):
        rep = run_claim(cid, cfg)
        reports.append(rep.to_dict())
        print(f"{rep.outcome}  {cid:17s} {rep.count:>9d}  {rep.elapsed:7.2f}s  {rep.detail}", flush=True)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(reports, indent=1, sort_keys=True) + "\n")
    return 0 if all(r["outcome"] == "PASS" for r in reports) else 3


if __name__ == "__main__":
    sys.exit(main())
