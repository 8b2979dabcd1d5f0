"""Closed-form dominant solutions of three ODEs driven by sqrt(1+z).

For j in {0, 1, 2} the initial-value problem

    1 + beta * z * q'(z) / q(z)**j = sqrt(1+z),    q(0) = 1,

has the closed-form solution (principal branches)

    j = 0:   q(z) = 1 + (2/beta) K(z)
    j = 1:   q(z) = exp((2/beta) K(z))
    j = 2:   q(z) = 1 / (1 - (2/beta) K(z))

with the shared kernel K(z) = sqrt(1+z) - 1 - log((1 + sqrt(1+z)) / 2).

K is analytic on the closed disk (finite limit K(-1) = log 2 - 1), vanishes
at 0, is real and strictly increasing on [-1, 1], and satisfies the algebraic
identity 2 z K'(z) = sqrt(1+z) - 1, which makes the ODE residual of each
closed form vanish identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def kernel(z):
    """K(z) = sqrt(1+z) - 1 - log((1 + sqrt(1+z)) / 2); K(0) = 0 exactly."""
    arr = np.asarray(z, dtype=complex)
    s = np.sqrt(1.0 + arr)
    out = s - 1.0 - np.log((1.0 + s) / 2.0)
    if np.ndim(z) == 0:
        return complex(out)
    return out


def kernel_deriv(z):
    """K'(z) = 1 / (2 (1 + sqrt(1+z)))."""
    arr = np.asarray(z, dtype=complex)
    out = 1.0 / (2.0 * (1.0 + np.sqrt(1.0 + arr)))
    if np.ndim(z) == 0:
        return complex(out)
    return out


KERNEL_ONE = kernel(1.0).real            # sqrt2 - 1 + log 2 - log(1 + sqrt2)
KERNEL_MINUS_ONE = math.log(2.0) - 1.0   # finite limit of K at z = -1

# j = 2 only: 1 - (2/beta) K(z) vanishes somewhere on [0, 1] once
# beta <= 2 K(1), putting a pole of q inside the closed disk.
MIN_BETA_POLE_FREE = 2.0 * KERNEL_ONE


@dataclass(frozen=True)
class DominantSolution:
    """Solution q of 1 + beta z q'/q**j = sqrt(1+z), normalized by q(0) = 1."""

    j: int
    beta: float

    def __post_init__(self):
        if self.j not in (0, 1, 2):
            raise ValueError(f"family index must be 0, 1 or 2, got {self.j}")
        if not self.beta > 0.0:
            raise ValueError("beta must be positive")
        if self.j == 2 and not self.beta > MIN_BETA_POLE_FREE:
            raise ValueError(
                f"family j=2 needs beta > {MIN_BETA_POLE_FREE:.9f} "
                "to stay pole-free on the closed disk"
            )

    def value(self, z):
        u = (2.0 / self.beta) * np.asarray(kernel(z))
        if self.j == 0:
            out = 1.0 + u
        elif self.j == 1:
            # far below every threshold the exponent overflows to inf at
            # z = 1; that is the honest limit value, not an error
            with np.errstate(over="ignore"):
                out = np.exp(u)
        else:
            out = 1.0 / (1.0 - u)
        if np.ndim(z) == 0:
            return complex(out)
        return out

    def deriv(self, z):
        """q'(z) via the chain rule through the kernel."""
        base = (2.0 / self.beta) * np.asarray(kernel_deriv(z))
        if self.j == 0:
            out = base
        elif self.j == 1:
            out = base * np.asarray(self.value(z))
        else:
            q = np.asarray(self.value(z))
            out = base * q * q
        if np.ndim(z) == 0:
            return complex(out)
        return out

    def ode_residual(self, z):
        """|1 + beta z q'/q**j - sqrt(1+z)|; rounding-level on the closed disk."""
        arr = np.asarray(z, dtype=complex)
        q = np.asarray(self.value(arr))
        lhs = 1.0 + self.beta * arr * np.asarray(self.deriv(arr)) / q**self.j
        out = np.abs(lhs - np.sqrt(1.0 + arr))
        if np.ndim(z) == 0:
            return float(out)
        return out
