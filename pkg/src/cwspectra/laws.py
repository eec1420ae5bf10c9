"""Closed-form limit laws: Marchenko-Pastur and semicircle.

Densities, CDFs, moments, and Stieltjes transforms. Square roots of
complex arguments always take the branch with positive imaginary part;
nonnegative reals get the nonnegative real root.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError

_TWO_PI = 2.0 * math.pi


def complex_sqrt_upper(z) -> complex | float:
    """Square root with positive imaginary part (nonnegative real branch on R+)."""
    if isinstance(z, (int, float)) and z >= 0:
        return math.sqrt(z)
    w = cmath.sqrt(complex(z))
    if w.imag < 0.0 or (w.imag == 0.0 and w.real < 0.0):
        w = -w
    return w


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-10, max_depth: int = 48):
    """Adaptive Simpson quadrature; works for real or complex integrands."""

    def simpson(fa, fm, fb, h):
        return h * (fa + 4.0 * fm + fb) / 6.0

    def recurse(x0, x1, f0, fm, f1, whole, tol, depth):
        xm = 0.5 * (x0 + x1)
        xl = 0.5 * (x0 + xm)
        xr = 0.5 * (xm + x1)
        fl = f(xl)
        fr = f(xr)
        left = simpson(f0, fl, fm, xm - x0)
        right = simpson(fm, fr, f1, x1 - xm)
        if depth <= 0 or abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return recurse(x0, xm, f0, fl, fm, left, 0.5 * tol, depth - 1) + recurse(
            xm, x1, fm, fr, f1, right, 0.5 * tol, depth - 1
        )

    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    fm = f(0.5 * (a + b))
    return recurse(a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, max_depth)


# ---------------------------------------------------------------------------
# Marchenko-Pastur with ratio index y
# ---------------------------------------------------------------------------


def mp_support(y: float) -> tuple[float, float]:
    if not y > 0:
        raise ValueError(f"ratio index y must be positive, got {y}")
    r = math.sqrt(y)
    return (1.0 - r) ** 2, (1.0 + r) ** 2


def mp_atom(y: float) -> float:
    """Mass of the point mass at 0 (nonzero only for y > 1)."""
    return max(0.0, 1.0 - 1.0 / y)


def mp_density(y: float, x):
    """Continuous part of the law; zero outside the open support interval."""
    a, b = mp_support(y)
    arr = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(arr)
    inside = (arr > a) & (arr < b)
    xi = arr[inside]
    out[inside] = np.sqrt((b - xi) * (xi - a)) / (_TWO_PI * xi * y)
    return float(out) if np.isscalar(x) else out


def _mp_segment(y: float, x1: float, x2: float, tol: float) -> float:
    """Integral of the density over [x1, x2] inside the support.

    The substitution x = edge +- u^2 removes the square-root behavior at
    each soft edge; the segment is split at the support midpoint.
    """
    a, b = mp_support(y)
    mid = 0.5 * (a + b)
    total = 0.0
    lo, hi = max(x1, a), min(x2, b)
    if hi <= lo:
        return 0.0
    lo_part_hi = min(hi, mid)
    if lo_part_hi > lo:
        u1, u2 = math.sqrt(lo - a), math.sqrt(lo_part_hi - a)
        total += adaptive_simpson(
            lambda u: mp_density(y, a + u * u) * 2.0 * u, u1, u2, tol
        )
    hi_part_lo = max(lo, mid)
    if hi > hi_part_lo:
        v1, v2 = math.sqrt(b - hi), math.sqrt(b - hi_part_lo)
        total += adaptive_simpson(
            lambda v: mp_density(y, b - v * v) * 2.0 * v, v1, v2, tol
        )
    return total


def mp_cdf_many(y: float, xs, tol: float = 1e-10) -> np.ndarray:
    """CDF at many points with one cumulative quadrature sweep."""
    arr = np.atleast_1d(np.asarray(xs, dtype=np.float64))
    order = np.argsort(arr, kind="stable")
    atom = mp_atom(y)
    a, _ = mp_support(y)
    out = np.empty_like(arr)
    acc = 0.0
    prev = a
    for idx in order:
        x = arr[idx]
        xc = max(x, a)
        if xc > prev:
            acc += _mp_segment(y, prev, xc, tol)
            prev = xc
        out[idx] = min(acc + (atom if x >= 0.0 else 0.0), 1.0)
    return out


def mp_cdf(y: float, x: float, tol: float = 1e-10) -> float:
    """CDF of the law, including the point mass at 0 when y > 1."""
    return float(mp_cdf_many(y, [x], tol)[0])


def mp_moment(y: float, k: int, tol: float = 1e-12) -> float:
    """k-th moment, by quadrature over the continuous part."""
    if k < 0:
        raise ValueError(f"moment order must be nonnegative, got {k}")
    if k == 0:
        return 1.0
    a, b = mp_support(y)
    mid = 0.5 * (a + b)
    lower = adaptive_simpson(
        lambda u: (a + u * u) ** k * mp_density(y, a + u * u) * 2.0 * u,
        0.0,
        math.sqrt(mid - a),
        tol,
    )
    upper = adaptive_simpson(
        lambda v: (b - v * v) ** k * mp_density(y, b - v * v) * 2.0 * v,
        0.0,
        math.sqrt(b - mid),
        tol,
    )
    return lower + upper


def mp_stieltjes(y: float, z) -> complex:
    """Stieltjes transform (1 - y - z + sqrt((1-y-z)^2 - 4yz)) / (2yz)."""
    z = complex(z)
    if not z.imag > 0:
        raise ValueError("Stieltjes transforms are evaluated on the upper half-plane")
    if not y > 0:
        raise ValueError(f"ratio index y must be positive, got {y}")
    w = complex_sqrt_upper((1.0 - y - z) ** 2 - 4.0 * y * z)
    return (1.0 - y - z + w) / (2.0 * y * z)


# ---------------------------------------------------------------------------
# Semicircle on [-2, 2]
# ---------------------------------------------------------------------------


def semicircle_density(x):
    arr = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(arr)
    inside = np.abs(arr) < 2.0
    out[inside] = np.sqrt(4.0 - arr[inside] ** 2) / _TWO_PI
    return float(out) if np.isscalar(x) else out


def semicircle_cdf(x):
    """Closed form 1/2 + x sqrt(4 - x^2) / (4 pi) + arcsin(x/2) / pi."""
    arr = np.asarray(x, dtype=np.float64)
    clipped = np.clip(arr, -2.0, 2.0)
    out = (
        0.5
        + clipped * np.sqrt(4.0 - clipped**2) / (4.0 * math.pi)
        + np.arcsin(0.5 * clipped) / math.pi
    )
    out = np.where(arr <= -2.0, 0.0, np.where(arr >= 2.0, 1.0, out))
    return float(out) if np.isscalar(x) else out


def semicircle_stieltjes(z) -> complex:
    """Stieltjes transform (-z + sqrt(z^2 - 4)) / 2."""
    z = complex(z)
    if not z.imag > 0:
        raise ValueError("Stieltjes transforms are evaluated on the upper half-plane")
    return (-z + complex_sqrt_upper(z * z - 4.0)) / 2.0


# ---------------------------------------------------------------------------
# Law objects used by diagnostics and the CLI
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MarchenkoPastur:
    """Marchenko-Pastur law with ratio index y."""

    y: float

    kind = "mp"

    def __post_init__(self):
        if not self.y > 0:
            raise ValueError(f"ratio index y must be positive, got {self.y}")

    @property
    def support(self) -> tuple[float, float]:
        return mp_support(self.y)

    @property
    def atom(self) -> float:
        return mp_atom(self.y)

    def density(self, x):
        return mp_density(self.y, x)

    def cdf(self, x):
        out = mp_cdf_many(self.y, np.atleast_1d(x))
        return float(out[0]) if np.isscalar(x) else out

    def cdf_left(self, x):
        arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
        out = mp_cdf_many(self.y, arr) - self.atom * (arr == 0.0)
        return float(out[0]) if np.isscalar(x) else out

    def stieltjes(self, z) -> complex:
        return mp_stieltjes(self.y, z)


@dataclass(frozen=True)
class Semicircle:
    """Standard semicircle law on [-2, 2]."""

    kind = "semicircle"
    atom = 0.0

    @property
    def support(self) -> tuple[float, float]:
        return (-2.0, 2.0)

    def density(self, x):
        return semicircle_density(x)

    def cdf(self, x):
        return semicircle_cdf(x)

    def cdf_left(self, x):
        return semicircle_cdf(x)

    def stieltjes(self, z) -> complex:
        return semicircle_stieltjes(z)
