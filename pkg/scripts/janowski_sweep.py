#!/usr/bin/env python3
"""Sweep the Janowski parameter that controls which endpoint bound binds.

For family 0 the left bound dominates for B below the crossover 0.151764 and
the right bound above it; for family 2 the same constant acts on A.  Emits
CSV (case,param,beta1,beta2,beta_sharp,binding) to stdout for plotting.
"""

import argparse
import sys

import numpy as np

from lemnisub.thresholds import closed_form_threshold, janowski_crossover, make_case


def sweep(label: str, fixed: float, steps: int):
    rows = []
    if label == "T1f":
        for B in np.linspace(-0.95, fixed - 0.05, steps):
            result = closed_form_threshold(make_case(label, A=fixed, B=float(B)))
            rows.append((label, float(B), result))
    else:  # T3d: sweep A against a fixed B
        for A in np.linspace(fixed + 0.05, 0.95, steps):
            result = closed_form_threshold(make_case(label, A=float(A), B=fixed))
            rows.append((label, float(A), result))
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=41)
    parser.add_argument("--A", type=float, default=0.9, help="fixed A for the T1f sweep")
    parser.add_argument("--B", type=float, default=-0.9, help="fixed B for the T3d sweep")
    args = parser.parse_args()

    print(f"# crossover = {janowski_crossover(0):.9f} (same for families 0 and 2)")
    print("case,param,beta1,beta2,beta_sharp,binding")
    for label, fixed in (("T1f", args.A), ("T3d", args.B)):
        for case_label, param, result in sweep(label, fixed, args.steps):
            binding = "left" if result.beta1 >= result.beta2 else "right"
            print(
                f"{case_label},{param:.6f},{result.beta1:.9f},{result.beta2:.9f},"
                f"{result.beta_sharp:.9f},{binding}"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
