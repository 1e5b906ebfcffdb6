#!/usr/bin/env python3
"""Mode structure constants across contour annuli: prints the raw Laurent
coefficients, the antisymmetric structure constants, the mirror-annulus
pairing, and a few rendered brackets.

Usage:
    python scripts/mode_bracket_study.py [--q 0.5] [--m 1] [--k 1] [--lmax 6]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ellex.poisson import AnnulusLabel, format_mode_bracket, laurent_modes  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=float, default=0.5)
    ap.add_argument("--m", type=int, default=1)
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--lmax", type=int, default=6)
    args = ap.parse_args()

    tables = {}
    for n in (-1, 0, 1, 2):
        tables[n] = laurent_modes(
            "klimit",
            q=args.q,
            annulus=AnnulusLabel(n),
            l_range=(-args.lmax, args.lmax),
            quadrature_points=256,
            m=args.m,
            k=args.k,
        )

    for n, tab in tables.items():
        print(f"\nannulus {n} (radius {tab.params['radius']:.6g}):")
        print("   l    raw coefficient            structure constant")
        for l in range(-args.lmax, args.lmax + 1, 2):
            raw = tab.raw_coefficients[l]
            odd = tab.coefficients[l]
            print(f"  {l:+3d}  {raw.real:+.12f}  {odd.real:+.12f}")

    print("\nmirror pairing raw_n[l] = -raw_(1-n)[-l] between annuli 0 and 1:")
    worst = max(
        abs(tables[0].raw_coefficients[l] + tables[1].raw_coefficients[-l])
        for l in tables[0].raw_coefficients
    )
    print(f"  worst violation: {worst:.3e}")

    print("\nresidue steps raw_n[l] - raw_(n+1)[l] across the pole circle |q|^n:")
    for n in (0, 1):
        diffs = [
            (tables[n].raw_coefficients[l] - tables[n + 1].raw_coefficients[l]).real
            for l in (0, 2, 4)
        ]
        print(f"  n={n}: " + "  ".join(f"{d:+.6f}" for d in diffs))

    print("\nbrackets on annulus 0:")
    for n_mode, m_mode in ((1, -1), (2, 0), (3, 3)):
        out = format_mode_bracket(tables[0], n_mode, m_mode, args.lmax)
        print(" ", out["text"])
        if "cancelled_pairs" in out:
            print(f"    cancelling antisymmetric pairs: {out['cancelled_pairs']}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
