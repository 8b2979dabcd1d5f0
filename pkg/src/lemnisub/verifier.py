"""Containment verification of the dominant solutions against the targets.

The subordination q(D) subset-of P(D) is certified numerically: sample q on
the unit circle, classify every sample against the target region and pass
iff no sample lands outside.  Boundary verdicts are allowed and counted; at
the sharp threshold the image touches the target boundary at z = -1 or
z = +1, and the endpoint inequalities there are non-strict.

This is a sampling certificate, not interval arithmetic: it relies on both
regions being simply connected with q(0) = 1 anchored inside, which the
winding checks in the test suite confirm for every catalog case.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import targets
from .dominant import DominantSolution
from .thresholds import CatalogCase, closed_form_threshold


@dataclass(frozen=True)
class VerificationReport:
    case: CatalogCase
    beta: float
    n_samples: int
    delta: float
    passed: bool
    worst_margin: float
    counterexample: complex | None
    boundary_touches: int
    center_ok: bool


def verify_subordination(
    case: CatalogCase,
    beta: float,
    n: int = 4096,
    delta: float = targets.DELTA_DEFAULT,
) -> VerificationReport:
    """Classify the n boundary samples of q_beta against the target region.

    passed is True iff no sample is Outside; the counterexample, when
    present, is the most-outside sample.  center_ok records the exact check
    q_beta(0) == 1.
    """
    if n < 256:
        raise ValueError("need n >= 256 boundary samples")
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    sol = DominantSolution(case.family, beta)
    ws = sol.value(targets.unit_circle(n))
    margins = np.atleast_1d(targets.membership_margin(case.target, ws))
    boundary = np.abs(margins) <= delta
    outside = (margins < 0.0) & ~boundary
    counterexample = None
    if outside.any():
        worst = int(np.argmin(np.where(outside, margins, np.inf)))
        counterexample = complex(ws[worst])
    return VerificationReport(
        case=case,
        beta=float(beta),
        n_samples=int(n),
        delta=float(delta),
        passed=counterexample is None,
        worst_margin=float(margins.min()),
        counterexample=counterexample,
        boundary_touches=int(boundary.sum()),
        center_ok=sol.value(0.0) == 1.0,
    )


def sharpness_falsify(
    case: CatalogCase,
    eps: float,
    n: int = 4096,
    delta: float = targets.DELTA_DEFAULT,
) -> VerificationReport:
    """Re-verify just below the sharp threshold; expected to fail.

    Runs at beta = (1 - eps) * beta_sharp.  For eps >= 1e-6 the binding
    endpoint lands strictly outside the target region, so the report carries
    a concrete counterexample on the real axis.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must lie in (0, 1)")
    beta = (1.0 - eps) * closed_form_threshold(case).beta_sharp
    return verify_subordination(case, beta, n=n, delta=delta)


def starlike_condition_values(r_max: float, n: int) -> np.ndarray:
    """Re(z Q'/Q) for Q(z) = sqrt(1+z) - 1 on the grid {r e^{it}: 0 < r <= r_max}.

    The grid takes n angles and n radii; z = 0 is excluded (the limit there
    is 1).
    """
    if not 0.0 < r_max < 1.0:
        raise ValueError("r_max must lie in (0, 1)")
    if n < 1:
        raise ValueError("n must be positive")
    radii = np.linspace(r_max / n, r_max, n)
    z = radii[:, None] * np.exp(1j * targets.boundary_thetas(n))[None, :]
    s = np.sqrt(1.0 + z)
    return (z * (1.0 / (2.0 * s)) / (s - 1.0)).real


def check_lemma_conditions(r_max: float, n: int) -> bool:
    """True iff Re(z Q'/Q) > 0 on the whole sampled polar grid.

    Q(z) = sqrt(1+z) - 1 is the driving term shared by all three solution
    families, and the companion function is h = 1 + Q, so z h'/Q = z Q'/Q and
    this single scan covers both hypotheses of the underlying subordination
    lemma: Q starlike univalent and Re(z h'/Q) > 0.
    """
    return bool(starlike_condition_values(r_max, n).min() > 0.0)
