#!/usr/bin/env python3
"""Convergence study of the classical limit: how fast ln(Y)/beta approaches
the k-labeled Poisson structure function as beta -> 0, across levels m,
contour labels k, and evaluation points.

Usage:
    python scripts/beta_ladder_study.py [--q 0.5] [--betas 1e-1,1e-2,1e-3,1e-4]
"""

import argparse
import cmath
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ellex.elliptic import NomeParams  # noqa: E402
from ellex.exchange import LevelParams, exchange_Y  # noqa: E402
from ellex.poisson import BetaLimitRequest, poisson_structure  # noqa: E402


def ladder(m, k, q, x, betas):
    target = poisson_structure(m, k, x, q)
    rows = []
    for beta in betas:
        req = BetaLimitRequest(m=m, k=k, beta=beta, q=q)
        nome = NomeParams(req.p, q, allow_p_outside_disk=True)
        d = cmath.log(exchange_Y(LevelParams(m, nome), x)) / beta
        rows.append((beta, abs(d - target)))
    return target, rows


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=float, default=0.5)
    ap.add_argument("--betas", default="1e-1,1e-2,1e-3,1e-4")
    args = ap.parse_args()
    betas = sorted((float(b) for b in args.betas.split(",")), reverse=True)

    cases = [(1, 1, 1.4), (1, 2, 1.4), (2, 1, 1.3), (-1, 1, 1.25), (2, 3, 1.2)]
    for m, k, x in cases:
        target, rows = ladder(m, k, args.q, x, betas)
        print(f"\nm={m:+d} k={k:+d} x={x} target={target:.10g}")
        prev = None
        for beta, err in rows:
            ratio = f"  ratio={prev / err:6.2f}" if prev else ""
            print(f"  beta={beta:<8g} |err|={err:.6e}{ratio}")
            prev = err
        logs = [(math.log(b), math.log(e)) for b, e in rows if e > 0]
        n = len(logs)
        slope = (
            (n * sum(u * v for u, v in logs) - sum(u for u, _ in logs) * sum(v for _, v in logs))
            / (n * sum(u * u for u, _ in logs) - sum(u for u, _ in logs) ** 2)
        )
        print(f"  fitted order: {slope:.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
