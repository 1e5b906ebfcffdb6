#!/usr/bin/env python3
"""Run every verification suite and write the machine-readable report.

Usage:
    python scripts/run_verification.py [--seed 7] [--parallel 1] [--out report.json]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ellex.suites import VerifyConfig, run_suites  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--parallel", type=int, default=1)
    ap.add_argument("--out", default="report.json")
    args = ap.parse_args()

    t0 = time.perf_counter()
    report = run_suites(["all"], VerifyConfig(seed=args.seed, parallel=args.parallel))
    dt = time.perf_counter() - t0

    Path(args.out).write_bytes(report.to_json_bytes())
    sys.stdout.write(report.to_text())
    print(f"\n{len(report.checks)} checks in {dt:.1f}s, report written to {args.out}")
    return 0 if report.aggregate_pass else 1


if __name__ == "__main__":
    raise SystemExit(main())
