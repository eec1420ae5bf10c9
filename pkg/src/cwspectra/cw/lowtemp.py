"""Low-temperature (beta > 1) restandardization of Curie-Weiss spins."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import SpinMatrix


@dataclass(frozen=True)
class Magnetization:
    """Spontaneous magnetization: the positive root of tanh(beta * m) = m."""

    beta: float
    m: float

    def __post_init__(self):
        if not self.beta > 1:
            raise ValueError(f"magnetization requires beta > 1, got {self.beta}")
        if not 0.0 < self.m < 1.0:
            raise ValueError(f"m must lie in (0, 1), got {self.m}")
        if abs(math.tanh(self.beta * self.m) - self.m) > 1e-12:
            raise ValueError("m does not satisfy tanh(beta * m) = m to 1e-12")


def solve_magnetization(beta: float) -> Magnetization:
    """Unique positive solution of tanh(beta * m) = m for beta > 1.

    Bisection on the residual r(m) = tanh(beta * m) - m, which is positive
    just above 0 and nonpositive at 1. Plain fixed-point iteration stalls
    near the critical point (its contraction factor tends to 1 as beta
    approaches 1), while bisection lands inside the 1e-12 residual band in
    a fixed number of steps for every beta > 1.
    """
    if not beta > 1:
        raise ValueError(f"no positive fixed point exists for beta = {beta} <= 1")

    def residual(m: float) -> float:
        return math.tanh(beta * m) - m

    lo, hi = 1e-300, 1.0 - 1e-16
    if residual(hi) > 0.0:
        # tanh saturates to 1.0 in float for very large beta; the closest
        # representable root is the upper endpoint itself.
        return Magnetization(beta=beta, m=hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if residual(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-16 * hi:
            break
    m = 0.5 * (lo + hi)
    if abs(residual(m)) > 1e-12:
        raise AssertionError("bisection left a residual above 1e-12")
    return Magnetization(beta=beta, m=m)


def _alignment_sign(x: SpinMatrix) -> float:
    """Sign of the latent bias, or of the total spin sum as a stand-in.

    Metropolis samples carry no mixing draw; for beta > 1 the total spin
    sum has the same sign as the latent bias except on an event of
    vanishing probability.
    """
    if x.mixing_draw is not None:
        value = x.mixing_draw
    else:
        value = float(x.entries.sum())
    if value == 0.0:
        raise ValueError("alignment sign is undefined: total spin is exactly zero")
    return 1.0 if value > 0.0 else -1.0


def restandardize(x: SpinMatrix, m: Magnetization | float) -> SpinMatrix:
    """Map spins y to (y - m * sigma) / sqrt(1 - m^2), sigma the alignment sign.

    Removes the spontaneous mean and rescales to unit conditional variance
    in the aligned phase. Entries of the result take at most four values.
    """
    if x.restandardized:
        raise ValueError("matrix is already restandardized")
    m_val = m.m if isinstance(m, Magnetization) else float(m)
    if not 0.0 < m_val < 1.0:
        raise ValueError(f"m must lie in (0, 1), got {m_val}")
    sigma = _alignment_sign(x)
    entries = (x.entries - m_val * sigma) / math.sqrt(1.0 - m_val * m_val)
    return SpinMatrix(
        entries=entries,
        params=x.params,
        seed=x.seed,
        restandardized=True,
        mixing_draw=x.mixing_draw,
    )


def _branch_offset(t: float, m: float) -> float:
    if not -1.0 < t < 1.0:
        raise ValueError(f"bias t must lie in (-1, 1), got {t}")
    if t == 0.0:
        raise ValueError("conditional moments are undefined at t = 0")
    if not 0.0 < m < 1.0:
        raise ValueError(f"m must lie in (0, 1), got {m}")
    return t - m if t > 0.0 else t + m


def restandardized_mean(t: float, m: float) -> float:
    """Conditional mean of a restandardized spin given latent bias t."""
    return _branch_offset(t, m) / math.sqrt(1.0 - m * m)


def restandardized_square_defect(t: float, m: float) -> float:
    """Conditional mean of (1 - Z^2) for a restandardized spin Z given bias t."""
    return 2.0 * m * _branch_offset(t, m) / (1.0 - m * m)
