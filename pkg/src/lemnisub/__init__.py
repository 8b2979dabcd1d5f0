"""Sharp subordination thresholds under the square-root lemniscate kernel.

The package computes, for three first-order differential expressions driven
by sqrt(1+z), the exact parameter threshold beyond which the solution is
contained in each of seven classical starlike regions, and certifies (or
falsifies) that containment numerically.
"""

from .dominant import (
    DominantSolution,
    KERNEL_MINUS_ONE,
    KERNEL_ONE,
    MIN_BETA_POLE_FREE,
    kernel,
    kernel_deriv,
)
from .targets import (
    CARDIOID,
    DELTA_DEFAULT,
    EXP,
    LUNE,
    MembershipVerdict,
    N_BOUNDARY_DEFAULT,
    RATIONAL0,
    SINE,
    SQRT,
    Status,
    TargetFunction,
    TargetKind,
    boundary_curve,
    contains,
    endpoints,
    eval_target,
    janowski,
    target_from_name,
)
from .thresholds import (
    CASE_LABELS,
    CatalogCase,
    JANOWSKI_LABELS,
    PARAMETER_FREE_LABELS,
    REFERENCE_CROSSOVER,
    REFERENCE_SHARP,
    SolverError,
    ThresholdResult,
    closed_form_threshold,
    endpoint_threshold,
    janowski_crossover,
    make_case,
    numeric_threshold,
)
from .verifier import (
    VerificationReport,
    check_lemma_conditions,
    sharpness_falsify,
    starlike_condition_values,
    verify_subordination,
)

__all__ = [
    "CARDIOID",
    "CASE_LABELS",
    "CatalogCase",
    "DELTA_DEFAULT",
    "DominantSolution",
    "EXP",
    "JANOWSKI_LABELS",
    "KERNEL_MINUS_ONE",
    "KERNEL_ONE",
    "LUNE",
    "MIN_BETA_POLE_FREE",
    "MembershipVerdict",
    "N_BOUNDARY_DEFAULT",
    "PARAMETER_FREE_LABELS",
    "RATIONAL0",
    "REFERENCE_CROSSOVER",
    "REFERENCE_SHARP",
    "SINE",
    "SQRT",
    "SolverError",
    "Status",
    "TargetFunction",
    "TargetKind",
    "ThresholdResult",
    "VerificationReport",
    "boundary_curve",
    "check_lemma_conditions",
    "closed_form_threshold",
    "contains",
    "endpoints",
    "endpoint_threshold",
    "eval_target",
    "janowski",
    "janowski_crossover",
    "kernel",
    "kernel_deriv",
    "make_case",
    "numeric_threshold",
    "sharpness_falsify",
    "starlike_condition_values",
    "target_from_name",
    "verify_subordination",
]
