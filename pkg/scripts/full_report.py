#!/usr/bin/env python3
"""End-to-end verification run: constants, dichotomy, hypothesis scan.

Prints one line per check and exits nonzero if anything fails.  This is the
long-form counterpart of `lemnisub table` / `lemnisub verify`; useful as a
single command to re-certify everything after a change.
"""

import argparse
import sys
import time

from lemnisub.thresholds import (
    JANOWSKI_LABELS,
    PARAMETER_FREE_LABELS,
    REFERENCE_CROSSOVER,
    REFERENCE_SHARP,
    closed_form_threshold,
    janowski_crossover,
    make_case,
    numeric_threshold,
)
from lemnisub.verifier import sharpness_falsify, starlike_condition_values, verify_subordination


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4096, help="boundary samples per run")
    parser.add_argument("--eps", type=float, default=1e-3, help="relative shrink for falsification")
    parser.add_argument("--A", type=float, default=0.5, help="Janowski A for T1f/T2e/T3d")
    parser.add_argument("--B", type=float, default=-0.5, help="Janowski B for T1f/T2e/T3d")
    args = parser.parse_args()

    start = time.perf_counter()
    failures = 0

    print("== constants ==")
    for label in PARAMETER_FREE_LABELS:
        case = make_case(label)
        closed = closed_form_threshold(case)
        numeric = numeric_threshold(case)
        deviation = abs(closed.beta_sharp - REFERENCE_SHARP[label])
        gap = abs(closed.beta_sharp - numeric.beta_sharp)
        ok = deviation <= 1e-5 and gap <= 1e-9
        failures += not ok
        print(
            f"{label}: sharp={closed.beta_sharp:.9f} reference={REFERENCE_SHARP[label]} "
            f"deviation={deviation:.2e} closed-vs-numeric={gap:.2e} {'ok' if ok else 'FAIL'}"
        )
    crossover = janowski_crossover(0)
    ok = abs(crossover - REFERENCE_CROSSOVER) <= 1e-6
    failures += not ok
    print(f"B0=A0: {crossover:.9f} reference={REFERENCE_CROSSOVER} {'ok' if ok else 'FAIL'}")

    print("== sharp-threshold dichotomy ==")
    cases = [make_case(label) for label in PARAMETER_FREE_LABELS]
    cases += [make_case(label, A=args.A, B=args.B) for label in JANOWSKI_LABELS]
    for case in cases:
        sharp = closed_form_threshold(case).beta_sharp
        above = verify_subordination(case, 1.000001 * sharp, n=args.n, delta=1e-6)
        below = sharpness_falsify(case, args.eps, n=args.n, delta=1e-6)
        ok = above.passed and not below.passed
        failures += not ok
        ce = below.counterexample
        print(
            f"{case.label}: above-sharp passed={above.passed} "
            f"(touches={above.boundary_touches}), below-sharp counterexample="
            f"{ce.real:.6f}{ce.imag:+.1e}i {'ok' if ok else 'FAIL'}"
        )

    print("== subordination-lemma hypotheses ==")
    minimum = float(starlike_condition_values(0.99, 360).min())
    ok = minimum > 0.0
    failures += not ok
    print(f"min Re(z Q'/Q) on r <= 0.99: {minimum:.6f} {'ok' if ok else 'FAIL'}")

    print(f"== done: {failures} failures, {time.perf_counter() - start:.1f} s ==")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
