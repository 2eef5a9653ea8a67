#!/usr/bin/env python3
"""Dilate study: H*(k Pi_4) under S_4 for small k.

For each dilate, prints whether H* is a polynomial, whether it is effective,
and what the odd-rectangle test says about invariant nondegenerate
hypersurfaces.

Usage:
    python scripts/dilate_table.py [--max-k K] [--workers W]
"""

import argparse
import sys
import time

# Add src to path for development
sys.path.insert(0, "src")

from equivariant_ehrhart import (
    ComputeConfig,
    compute_equivariant_series,
    hstar,
    symmetric_table_for_action,
)
from equivariant_ehrhart.certificates import (
    composition_of_orbit_polytope,
    odd_rectangle_obstruction,
    orbit_polytope_action,
)


def study_dilate(k: int, config: ComputeConfig) -> dict:
    point = [k * i for i in range(1, 5)]
    action = orbit_polytope_action(point)
    table = symmetric_table_for_action(action, 4)
    start = time.time()
    series = compute_equivariant_series(action, config).series
    report = hstar(series, table, config=config)
    verdict = odd_rectangle_obstruction(composition_of_orbit_polytope(point))
    return {
        "k": k,
        "polynomial": report.is_polynomial,
        "effective": report.is_effective,
        "hypersurface": verdict.kind,
        "elapsed": time.time() - start,
    }


def main():
    parser = argparse.ArgumentParser(
        description="Polynomiality and effectiveness of H*(k Pi_4) under S_4"
    )
    parser.add_argument(
        "--max-k",
        type=int,
        default=2,
        help="Largest dilation factor (default: 2)",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=1,
        help="Process-pool width (default: 1)",
    )

    args = parser.parse_args()
    config = ComputeConfig(workers=args.workers)

    print("=" * 60)
    print(f"{'k':>3}  {'polynomial':>10}  {'effective':>9}  {'hypersurface':>12}  {'time':>8}")
    print("=" * 60)
    for k in range(1, args.max_k + 1):
        row = study_dilate(k, config)
        print(
            f"{row['k']:>3}  {str(row['polynomial']):>10}  {str(row['effective']):>9}  "
            f"{row['hypersurface']:>12}  {row['elapsed']:>7.1f}s"
        )


if __name__ == "__main__":
    main()
