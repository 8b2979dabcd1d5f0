"""Starlike target regions with positive real part.

Seven classical regions, each the image of the unit disk under an analytic
map P with P(0) = 1, symmetric about the real axis and starlike with respect
to 1:

    Sqrt        sqrt(1+z)                 right half of the lemniscate |w^2-1| = 1
    Janowski    (1+Az)/(1+Bz)             disk, parameters -1 < B < A < 1
    Exp         exp(z)                    region |log w| < 1
    Rational0   1 + (z/k)(k+z)/(k-z)      k = 1 + sqrt(2)
    Sine        1 + sin(z)
    Cardioid    1 + (4z + 2z^2)/3         cardioid with cusp at 1/3
    Lune        z + sqrt(1+z^2)           lune |w^2-1| < 2|w|

All square roots and logarithms are principal-branch; on the closed disk the
arguments stay in the closed right half plane, so every map is conjugate
symmetric and real on the real axis.

Membership tests use closed-form predicates where the region admits one
(Sqrt, Janowski, Exp) and a winding-number test against a sampled boundary
curve otherwise.  Both routes report a signed interior clearance; a point
whose clearance is within the band delta of zero is classified Boundary,
which also absorbs branch-cut and touching cases without exceptions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

N_BOUNDARY_DEFAULT = 4096
DELTA_DEFAULT = 1e-9

# pole of the Rational0 map; lies outside the closed unit disk
RATIONAL0_K = 1.0 + math.sqrt(2.0)


class TargetKind(Enum):
    SQRT = "Sqrt"
    JANOWSKI = "Janowski"
    EXP = "Exp"
    RATIONAL0 = "Rational0"
    SINE = "Sine"
    CARDIOID = "Cardioid"
    LUNE = "Lune"


CLOSED_FORM_KINDS = frozenset({TargetKind.SQRT, TargetKind.JANOWSKI, TargetKind.EXP})


@dataclass(frozen=True)
class TargetFunction:
    """One of the seven target regions; only Janowski carries parameters."""

    kind: TargetKind
    A: float | None = None
    B: float | None = None

    def __post_init__(self):
        if self.kind is TargetKind.JANOWSKI:
            if self.A is None or self.B is None:
                raise ValueError("Janowski target needs both A and B")
            if not (-1.0 < self.B < self.A < 1.0):
                raise ValueError(
                    f"Janowski parameters must satisfy -1 < B < A < 1, "
                    f"got A={self.A}, B={self.B}"
                )
        elif self.A is not None or self.B is not None:
            raise ValueError(f"{self.kind.value} target carries no parameters")


SQRT = TargetFunction(TargetKind.SQRT)
EXP = TargetFunction(TargetKind.EXP)
RATIONAL0 = TargetFunction(TargetKind.RATIONAL0)
SINE = TargetFunction(TargetKind.SINE)
CARDIOID = TargetFunction(TargetKind.CARDIOID)
LUNE = TargetFunction(TargetKind.LUNE)


def janowski(A: float, B: float) -> TargetFunction:
    return TargetFunction(TargetKind.JANOWSKI, A, B)


def target_from_name(name: str, A: float | None = None, B: float | None = None) -> TargetFunction:
    """Look a target up by its kind name ("Sqrt", "Janowski", ...)."""
    for kind in TargetKind:
        if kind.value == name:
            if kind is TargetKind.JANOWSKI:
                return TargetFunction(kind, A, B)
            return TargetFunction(kind)
    names = ", ".join(kind.value for kind in TargetKind)
    raise ValueError(f"unknown target {name!r}; choose from {names}")


def eval_target(target: TargetFunction, z):
    """Evaluate the region map at z (scalar or array), |z| <= 1."""
    arr = np.asarray(z, dtype=complex)
    kind = target.kind
    if kind is TargetKind.SQRT:
        out = np.sqrt(1.0 + arr)
    elif kind is TargetKind.JANOWSKI:
        out = (1.0 + target.A * arr) / (1.0 + target.B * arr)
    elif kind is TargetKind.EXP:
        out = np.exp(arr)
    elif kind is TargetKind.RATIONAL0:
        k = RATIONAL0_K
        out = 1.0 + (arr / k) * (k + arr) / (k - arr)
    elif kind is TargetKind.SINE:
        out = 1.0 + np.sin(arr)
    elif kind is TargetKind.CARDIOID:
        out = 1.0 + (4.0 * arr + 2.0 * arr * arr) / 3.0
    elif kind is TargetKind.LUNE:
        out = arr + np.sqrt(1.0 + arr * arr)
    else:  # pragma: no cover
        raise ValueError(f"unknown target kind {kind!r}")
    if np.ndim(z) == 0:
        return complex(out)
    return out


def endpoints(target: TargetFunction) -> tuple[float, float]:
    """Real boundary values (P(-1), P(1)); always P(-1) < 1 < P(1)."""
    left = eval_target(target, -1.0 + 0.0j).real
    right = eval_target(target, 1.0 + 0.0j).real
    return float(left), float(right)


def boundary_thetas(n: int) -> np.ndarray:
    """Uniform angle grid theta_m = -pi + 2 pi m / n, m = 0 .. n-1."""
    return -math.pi + 2.0 * math.pi * np.arange(n) / n


def unit_circle(n: int) -> np.ndarray:
    """e^{i theta_m} on the boundary grid.

    The theta = -pi sample is snapped to exactly -1 (sin(-pi) rounding would
    otherwise leave a ~1e-16 imaginary part); for even n the theta = 0 sample
    is exactly +1 already.
    """
    z = np.exp(1j * boundary_thetas(n))
    z[0] = -1.0
    return z


def boundary_curve(target: TargetFunction, n: int) -> np.ndarray:
    """n boundary samples P(e^{i theta_m}) tracing the region once."""
    if n < 1:
        raise ValueError("n must be positive")
    return eval_target(target, unit_circle(n))


# --------------------------------------------------------------------------
# membership: closed-form clearances
# --------------------------------------------------------------------------

def closed_form_margin(target: TargetFunction, w):
    """Signed interior clearance from the closed-form region predicate.

    Positive inside, negative outside, zero on the boundary.  Each predicate
    is rescaled by its gradient so the value approximates the Euclidean
    distance to the boundary near it (exact for Janowski, whose region is a
    disk).  Returns None for kinds without a closed-form predicate.
    """
    arr = np.asarray(w, dtype=complex)
    kind = target.kind
    if kind is TargetKind.SQRT:
        # right lemniscate half: |w^2 - 1| < 1 and Re w > 0;
        # |grad |w^2-1|| = 2|w| normalizes the first constraint
        scale = np.maximum(2.0 * np.abs(arr), 1e-300)
        out = np.minimum((1.0 - np.abs(arr * arr - 1.0)) / scale, arr.real)
    elif kind is TargetKind.JANOWSKI:
        # image of the disk is the disk with this center and radius (any |B| < 1)
        center = (1.0 - target.A * target.B) / (1.0 - target.B**2)
        radius = (target.A - target.B) / (1.0 - target.B**2)
        out = radius - np.abs(arr - center)
    elif kind is TargetKind.EXP:
        # |grad |log w|| = 1/|w|; w = 0 is definitely outside exp(D)
        with np.errstate(divide="ignore", invalid="ignore"):
            raw = (1.0 - np.abs(np.log(arr))) * np.abs(arr)
        out = np.where(arr == 0.0, -1.0, raw)
    else:
        return None
    if np.ndim(w) == 0:
        return float(out)
    return np.asarray(out, dtype=float)


# --------------------------------------------------------------------------
# membership: winding number against a sampled curve
# --------------------------------------------------------------------------

_REFINE_THRESHOLD = 0.5 * math.pi
_POINT_CHUNK = 2_000_000  # cap on points x segments per vectorized block
_DECIMATE = 16            # far-field polygon keeps every 16th sample


def distance_to_curve(samples: np.ndarray, ws) -> np.ndarray:
    """Distance from each point to the closed polyline through the samples."""
    a = np.asarray(samples, dtype=complex)
    ar, ai = a.real.copy(), a.imag.copy()
    ex, ey = np.roll(ar, -1) - ar, np.roll(ai, -1) - ai
    len2 = np.maximum(ex * ex + ey * ey, 1e-300)
    pts = np.atleast_1d(np.asarray(ws, dtype=complex)).ravel()
    out = np.empty(pts.shape[0])
    chunk = max(1, _POINT_CHUNK // a.shape[0])
    for k in range(0, pts.shape[0], chunk):
        dx = pts[k : k + chunk].real[:, None] - ar[None, :]
        dy = pts[k : k + chunk].imag[:, None] - ai[None, :]
        t = (dx * ex[None, :] + dy * ey[None, :]) / len2[None, :]
        np.clip(t, 0.0, 1.0, out=t)
        rx = dx - t * ex[None, :]
        ry = dy - t * ey[None, :]
        out[k : k + chunk] = np.sqrt((rx * rx + ry * ry).min(axis=1))
    if np.ndim(ws) == 0:
        return float(out[0])
    return out


def _refined_turn(curve_fn, ta, tb, pa, pb, w, depth):
    turn = cmath.phase((pb - w) * (pa - w).conjugate())
    if abs(turn) <= _REFINE_THRESHOLD or depth <= 0:
        return turn
    tm = 0.5 * (ta + tb)
    pm = curve_fn(tm)
    return _refined_turn(curve_fn, ta, tm, pa, pm, w, depth - 1) + _refined_turn(
        curve_fn, tm, tb, pm, pb, w, depth - 1
    )


def winding_number(samples, thetas, curve_fn, w, max_depth=48):
    """Winding of the sampled closed curve around w.

    Accumulates argument increments edge by edge.  An edge subtending more
    than pi/2 at w is ambiguous and is refined by bisecting its parameter
    interval through curve_fn; without a curve_fn the coarse value is used.
    """
    v = np.asarray(samples, dtype=complex) - w
    turns = np.angle(np.roll(v, -1) * v.conj())
    big = np.abs(turns) > _REFINE_THRESHOLD
    total = float(turns[~big].sum())
    if big.any():
        if curve_fn is None:
            total += float(turns[big].sum())
        else:
            n = len(samples)
            for i in np.nonzero(big)[0]:
                ta = thetas[i]
                tb = thetas[i + 1] if i + 1 < n else thetas[0] + 2.0 * math.pi
                total += _refined_turn(
                    curve_fn, ta, tb, complex(samples[i]), complex(samples[(i + 1) % n]), w, max_depth
                )
    return int(round(total / (2.0 * math.pi)))


def _winding_numbers(samples, thetas, curve_fn, pts):
    n = samples.shape[0]
    nxt = np.roll(samples, -1)
    winds = np.empty(pts.shape[0], dtype=int)
    chunk = max(1, _POINT_CHUNK // n)
    for k in range(0, pts.shape[0], chunk):
        w = pts[k : k + chunk, None]
        turns = np.angle((nxt[None, :] - w) * (samples[None, :] - w).conj())
        winds[k : k + chunk] = np.rint(turns.sum(axis=1) / (2.0 * math.pi)).astype(int)
        if curve_fn is not None:
            # ambiguous edges: redo those points with local refinement
            for j in np.nonzero((np.abs(turns) > _REFINE_THRESHOLD).any(axis=1))[0]:
                winds[k + j] = winding_number(samples, thetas, curve_fn, complex(pts[k + j]))
    return winds


_CURVE_CACHE: dict = {}


def _curve_data(target: TargetFunction, n: int):
    """Boundary samples plus a decimated far-field polygon.

    The far-field polygon keeps every 16th sample; dev bounds how far any
    dropped vertex strays from the replacement chords, so points farther
    than that from the full polygon wind identically around both.
    """
    cached = _CURVE_CACHE.get((target, n))
    if cached is not None:
        return cached
    thetas = boundary_thetas(n)
    samples = boundary_curve(target, n)
    coarse, dev = None, math.inf
    if n % _DECIMATE == 0 and n // _DECIMATE >= 64:
        coarse = samples[::_DECIMATE]
        groups = samples.reshape(n // _DECIMATE, _DECIMATE)
        a = groups[:, :1]
        ab = (np.roll(groups[:, 0], -1) - groups[:, 0])[:, None]
        len2 = np.maximum((ab * ab.conj()).real, 1e-300)
        t = np.clip(((groups[:, 1:] - a) * ab.conj()).real / len2, 0.0, 1.0)
        dev = float(np.abs(groups[:, 1:] - (a + t * ab)).max())
    data = (thetas, samples, coarse, dev)
    if len(_CURVE_CACHE) > 32:
        _CURVE_CACHE.clear()
    _CURVE_CACHE[(target, n)] = data
    return data


def winding_margin(target: TargetFunction, w, n: int = N_BOUNDARY_DEFAULT):
    """Signed clearance by winding number: +distance inside, -distance outside.

    Works for every kind; it is the only membership route for Rational0,
    Sine, Cardioid and Lune.  The distance is always taken to the full
    n-sample polygon; points far from it are wound around the decimated
    polygon instead, which is cheaper and provably equivalent there.
    """
    if n < 16:
        raise ValueError("winding membership needs at least 16 boundary samples")
    thetas, samples, coarse, dev = _curve_data(target, n)

    def curve_fn(t):
        return complex(eval_target(target, cmath.exp(1j * t)))

    pts = np.atleast_1d(np.asarray(w, dtype=complex)).ravel()
    dist = np.atleast_1d(distance_to_curve(samples, pts))
    winds = np.empty(pts.shape[0], dtype=int)
    far = dist > 10.0 * dev if coarse is not None else np.zeros(pts.shape[0], dtype=bool)
    if far.any():
        winds[far] = _winding_numbers(coarse, None, None, pts[far])
    if (~far).any():
        winds[~far] = _winding_numbers(samples, thetas, curve_fn, pts[~far])
    margins = np.where(winds == 1, dist, -dist)
    if np.ndim(w) == 0:
        return float(margins[0])
    return margins


def membership_margin(target: TargetFunction, w, n: int = N_BOUNDARY_DEFAULT, method: str = "auto"):
    """Signed interior clearance; closed form where available, else winding."""
    if method == "closed":
        margin = closed_form_margin(target, w)
        if margin is None:
            raise ValueError(f"{target.kind.value} has no closed-form membership predicate")
        return margin
    if method == "winding":
        return winding_margin(target, w, n=n)
    if method != "auto":
        raise ValueError("method must be 'auto', 'closed' or 'winding'")
    margin = closed_form_margin(target, w)
    if margin is None:
        return winding_margin(target, w, n=n)
    return margin


# --------------------------------------------------------------------------
# verdicts
# --------------------------------------------------------------------------

class Status(Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class MembershipVerdict:
    status: Status
    margin: float
    delta: float


def verdict_from_margin(margin: float, delta: float) -> MembershipVerdict:
    """Boundary iff |margin| <= delta, else the sign of the margin decides."""
    if abs(margin) <= delta:
        status = Status.BOUNDARY
    elif margin > 0.0:
        status = Status.INSIDE
    else:
        status = Status.OUTSIDE
    return MembershipVerdict(status=status, margin=float(margin), delta=float(delta))


def contains(
    target: TargetFunction,
    w,
    delta: float = DELTA_DEFAULT,
    n: int = N_BOUNDARY_DEFAULT,
    method: str = "auto",
) -> MembershipVerdict:
    """Classify the point w against the open region P(D)."""
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    margin = membership_margin(target, complex(w), n=n, method=method)
    return verdict_from_margin(margin, delta)
