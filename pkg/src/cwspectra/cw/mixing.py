"""Latent mixing density that renders Curie-Weiss spins conditionally i.i.d.

An N-spin family can be sampled by drawing a bias t in (-1, 1) from this
density and then drawing N independent signs with P(+1) = (1 + t) / 2.
For beta <= 1 the density has a single mode at 0; for beta > 1 it has two
symmetric modes at the spontaneous magnetization +-m.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NumericalError

# Halvings of the edge interval appended to the grid; the last node sits
# within ~1e-16 of the boundary so no integrable mass is lost at small N.
_TAIL_DEPTH = 44

# Width of the refinement window around each detected mode, and the factor
# by which the grid is densified inside it.
_REFINE_WINDOW = 0.1
_REFINE_FACTOR = 8


def mixing_log_density_unnormalized(beta: float, N: int, t):
    """Log of the unnormalized mixing density at bias t in (-1, 1).

    Equals -(N/2) * [artanh(t)^2 / beta + ln(1 - t^2)] - ln(1 - t^2).
    """
    arr = np.asarray(t, dtype=np.float64)
    if np.any(np.abs(arr) >= 1.0):
        raise ValueError("bias t must lie strictly inside (-1, 1)")
    at = np.arctanh(arr)
    log_one_minus_t2 = np.log1p(-arr * arr)
    potential = at * at / beta + log_one_minus_t2
    out = -0.5 * N * potential - log_one_minus_t2
    return float(out) if np.isscalar(t) else out


@dataclass(frozen=True)
class MixingDensity:
    """Tabulated mixing density: nodes, CDF values, and Simpson masses.

    ``log_norm`` is the log of the normalizing integral of the unnormalized
    density. ``nodes`` and ``cdf`` form the monotone inverse-sampling table;
    the log-density arrays retain the unnormalized values at the nodes and
    at interval midpoints so that integrals against the density can reuse
    the same composite-Simpson rule.
    """

    beta: float
    N: int
    log_norm: float
    nodes: np.ndarray
    cdf: np.ndarray
    _logpdf_nodes: np.ndarray
    _logpdf_mids: np.ndarray
    quadrature_error: float

    @property
    def cdf_grid(self) -> np.ndarray:
        """(t, CDF(t)) pairs as a (K, 2) array."""
        return np.column_stack([self.nodes, self.cdf])

    def density(self, t) -> np.ndarray:
        return np.exp(mixing_log_density_unnormalized(self.beta, self.N, t) - self.log_norm)

    def integrate(self, fn) -> float:
        """Integral of fn(t) against the normalized density."""
        f_nodes = np.exp(self._logpdf_nodes - self.log_norm)
        f_mids = np.exp(self._logpdf_mids - self.log_norm)
        widths = np.diff(self.nodes)
        mids = 0.5 * (self.nodes[:-1] + self.nodes[1:])
        g_nodes = np.asarray(fn(self.nodes), dtype=np.float64)
        g_mids = np.asarray(fn(mids), dtype=np.float64)
        terms = (widths / 6.0) * (
            g_nodes[:-1] * f_nodes[:-1] + 4.0 * g_mids * f_mids + g_nodes[1:] * f_nodes[1:]
        )
        return float(terms.sum())

    def moment(self, k: int) -> float:
        return self.integrate(lambda t: t**k)


def _positive_grid(beta: float, N: int, grid_size: int) -> np.ndarray:
    """Node set on [0, 1): uniform base, geometric edge tail, mode refinement."""
    h = 2.0 / grid_size
    base = np.arange(grid_size // 2, dtype=np.float64) * h  # 0, h, ..., 1-h
    tail = 1.0 - h / 2.0 ** np.arange(1, _TAIL_DEPTH + 1, dtype=np.float64)
    tail = tail[tail < 1.0]  # halvings below ~1 ulp collapse onto 1.0 itself

    coarse = np.concatenate([base, tail])
    logf = mixing_log_density_unnormalized(beta, N, coarse)
    mode = float(coarse[int(np.argmax(logf))])
    lo = max(0.0, mode - _REFINE_WINDOW)
    hi = min(mode + _REFINE_WINDOW, 1.0 - h)
    fine = np.arange(lo, hi + h / (2 * _REFINE_FACTOR), h / _REFINE_FACTOR)

    nodes = np.unique(np.concatenate([base, tail, fine]))
    return nodes[(nodes >= 0.0) & (nodes < 1.0)]


def build_mixing_cdf(beta: float, N: int, grid_size: int = 4096) -> MixingDensity:
    """Tabulate the normalized CDF of the mixing density.

    Composite Simpson per interval with midpoint evaluation; normalization
    happens in the log domain (max subtracted before exponentiating). The
    positive half of the grid is built once and mirrored, which makes the
    table exactly symmetric.
    """
    if grid_size < 256:
        raise ValueError(f"grid_size must be at least 256, got {grid_size}")
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")

    pos = _positive_grid(beta, N, grid_size)
    pos_mids = 0.5 * (pos[:-1] + pos[1:])
    lf_pos = mixing_log_density_unnormalized(beta, N, pos)
    lf_pos_mids = mixing_log_density_unnormalized(beta, N, pos_mids)

    # Mirror: nodes = (-pos reversed, pos); pos[0] == 0 appears once.
    nodes = np.concatenate([-pos[::-1][:-1], pos])
    lf_nodes = np.concatenate([lf_pos[::-1][:-1], lf_pos])
    lf_mids = np.concatenate([lf_pos_mids[::-1], lf_pos_mids])

    peak = max(float(lf_nodes.max()), float(lf_mids.max()))
    f_nodes = np.exp(lf_nodes - peak)
    f_mids = np.exp(lf_mids - peak)
    widths = np.diff(nodes)
    mass = (widths / 6.0) * (f_nodes[:-1] + 4.0 * f_mids + f_nodes[1:])
    total = float(mass.sum())
    if not np.isfinite(total) or total <= 0.0:
        raise NumericalError("mixing density normalization integral is degenerate")

    # Richardson-style check: Simpson vs trapezoid on the same nodes.
    trap_total = float((widths * 0.5 * (f_nodes[:-1] + f_nodes[1:])).sum())
    err_est = abs(total - trap_total) / (15.0 * total)
    if err_est > 1e-6:
        raise NumericalError(
            f"mixing CDF quadrature did not converge: estimated relative error {err_est:.3e}"
        )

    cdf = np.empty(nodes.size)
    cdf[0] = 0.0
    np.cumsum(mass / total, out=cdf[1:])
    cdf[-1] = 1.0
    np.clip(cdf, 0.0, 1.0, out=cdf)

    return MixingDensity(
        beta=beta,
        N=N,
        log_norm=peak + np.log(total),
        nodes=nodes,
        cdf=cdf,
        _logpdf_nodes=lf_nodes,
        _logpdf_mids=lf_mids,
        quadrature_error=err_est,
    )


def sample_mixing(density: MixingDensity, rng: np.random.Generator) -> float:
    """One draw from the mixing density by inverse-CDF interpolation."""
    return float(np.interp(rng.random(), density.cdf, density.nodes))


def sample_mixing_batch(
    density: MixingDensity, rng: np.random.Generator, size: int
) -> np.ndarray:
    """Vectorized inverse-CDF draws, one uniform per replica."""
    return np.interp(rng.random(size), density.cdf, density.nodes)
