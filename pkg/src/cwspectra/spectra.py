"""Sample covariance matrices, rescalings, spectra, and empirical CDFs."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cw.lowtemp import Magnetization
from .cw.params import SpinMatrix
from .eigen import householder_tridiagonalize, tridiagonal_eigenvalues

NORMALIZATIONS = ("raw", "null", "lowtemp", "lowtemp-null")


@dataclass
class CovarianceMatrix:
    """Symmetric p x p matrix with a tag recording which rescaling built it."""

    entries: np.ndarray
    normalization: str = "raw"
    source: dict | None = None

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=np.float64)
        if self.entries.ndim != 2 or self.entries.shape[0] != self.entries.shape[1]:
            raise ValueError(f"covariance matrix must be square, got {self.entries.shape}")
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(f"unknown normalization tag {self.normalization!r}")

    @property
    def p(self) -> int:
        return self.entries.shape[0]


@dataclass
class Spectrum:
    """Descending eigenvalues with the normalization tag and solve residual."""

    eigenvalues: np.ndarray
    normalization: str = "raw"
    residual: float = 0.0
    seed: int | None = field(default=None)

    def __post_init__(self):
        self.eigenvalues = np.asarray(self.eigenvalues, dtype=np.float64)

    @property
    def p(self) -> int:
        return self.eigenvalues.size

    def drop_top(self, k: int) -> "Spectrum":
        """Spectrum with the k largest eigenvalues removed."""
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")
        return Spectrum(
            eigenvalues=self.eigenvalues[k:],
            normalization=self.normalization,
            residual=self.residual,
            seed=self.seed,
        )


def sample_covariance(x: SpinMatrix) -> CovarianceMatrix:
    """V = X X^T / n, symmetrized; the raw sample covariance."""
    v = x.entries @ x.entries.T / x.params.n
    v = 0.5 * (v + v.T)
    return CovarianceMatrix(
        entries=v,
        normalization="raw",
        source={"seed": x.seed, "beta": x.params.beta, "p": x.params.p, "n": x.params.n},
    )


def rescale_null(cov: CovarianceMatrix, p: int, n: int) -> CovarianceMatrix:
    """sqrt(n/p) * (V - I): centers at the identity and blows up the bulk.

    Accepts a raw matrix (result tagged "null") or a low-temperature
    rescaled one (result tagged "lowtemp-null").
    """
    if cov.normalization not in ("raw", "lowtemp"):
        raise ValueError(
            f"null rescaling expects a raw or lowtemp matrix, got {cov.normalization!r}"
        )
    if cov.p != p:
        raise ValueError(f"matrix is {cov.p}x{cov.p} but p={p} was given")
    scale = math.sqrt(n / p)
    entries = scale * (cov.entries - np.eye(p))
    tag = "null" if cov.normalization == "raw" else "lowtemp-null"
    return CovarianceMatrix(entries=entries, normalization=tag, source=cov.source)


def rescale_lowtemp(cov: CovarianceMatrix, m: Magnetization | float) -> CovarianceMatrix:
    """V / (1 - m^2): compensates the nonvanishing pair correlation."""
    if cov.normalization != "raw":
        raise ValueError(
            f"lowtemp rescaling expects a raw matrix, got {cov.normalization!r}"
        )
    m_val = m.m if isinstance(m, Magnetization) else float(m)
    if not 0.0 < m_val < 1.0:
        raise ValueError(f"m must lie in (0, 1), got {m_val}")
    return CovarianceMatrix(
        entries=cov.entries / (1.0 - m_val * m_val),
        normalization="lowtemp",
        source=cov.source,
    )


def symmetric_eigenvalues(
    a: CovarianceMatrix | np.ndarray, *, seed: int | None = None
) -> Spectrum:
    """Full descending spectrum of a symmetric matrix.

    The matrix must be symmetric to 1e-10 relative; it is then symmetrized
    exactly, tridiagonalized, and solved by implicit-shift QL. The reported
    residual is |sum of eigenvalues - trace|.
    """
    if isinstance(a, CovarianceMatrix):
        entries, tag = a.entries, a.normalization
    else:
        entries, tag = np.asarray(a, dtype=np.float64), "raw"
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise ValueError(f"matrix must be square, got {entries.shape}")
    scale = float(np.max(np.abs(entries))) if entries.size else 0.0
    asym = float(np.max(np.abs(entries - entries.T))) if entries.size else 0.0
    if asym > 1e-10 * max(scale, 1e-300):
        raise ValueError(f"matrix is not symmetric: max asymmetry {asym:.3e}")
    sym = 0.5 * (entries + entries.T)
    d, e = householder_tridiagonalize(sym)
    eigs = tridiagonal_eigenvalues(d, e)[::-1].copy()
    residual = abs(float(eigs.sum()) - float(np.trace(sym)))
    return Spectrum(eigenvalues=eigs, normalization=tag, residual=residual, seed=seed)


class StepCDF:
    """Right-continuous step CDF putting mass 1/p on each eigenvalue."""

    def __init__(self, points: np.ndarray):
        points = np.asarray(points, dtype=np.float64)
        if points.size == 0:
            raise ValueError("empirical CDF needs at least one point")
        self.points = np.sort(points)

    @property
    def jumps(self) -> np.ndarray:
        return np.unique(self.points)

    def cdf(self, x):
        out = np.searchsorted(self.points, x, side="right") / self.points.size
        return float(out) if np.isscalar(x) else out

    def cdf_left(self, x):
        out = np.searchsorted(self.points, x, side="left") / self.points.size
        return float(out) if np.isscalar(x) else out


def esd(spectrum: Spectrum) -> StepCDF:
    """Empirical spectral distribution of a spectrum."""
    return StepCDF(spectrum.eigenvalues)


@dataclass
class HistogramTable:
    """Uniform-bin histogram with a normalized density column."""

    edges: np.ndarray
    counts: np.ndarray
    density: np.ndarray

    @property
    def bin_left(self) -> np.ndarray:
        return self.edges[:-1]

    @property
    def bin_right(self) -> np.ndarray:
        return self.edges[1:]


def histogram(
    spectrum: Spectrum,
    bins: int,
    value_range: tuple[float, float] | None = None,
    drop_top_k: int = 0,
) -> HistogramTable:
    """Histogram of eigenvalues after removing the ``drop_top_k`` largest.

    The density column divides by (number of kept eigenvalues) * binwidth,
    so it integrates to 1 whenever the range covers all kept eigenvalues.
    """
    if bins < 1:
        raise ValueError(f"bins must be at least 1, got {bins}")
    if drop_top_k < 0:
        raise ValueError(f"drop_top_k must be nonnegative, got {drop_top_k}")
    kept = spectrum.eigenvalues[drop_top_k:]
    if kept.size == 0:
        raise ValueError("no eigenvalues left after dropping the top ones")
    if value_range is not None and not value_range[0] < value_range[1]:
        raise ValueError(f"empty histogram range {value_range}")
    counts, edges = np.histogram(kept, bins=bins, range=value_range)
    widths = np.diff(edges)
    density = counts / (kept.size * widths)
    return HistogramTable(edges=edges, counts=counts, density=density)
