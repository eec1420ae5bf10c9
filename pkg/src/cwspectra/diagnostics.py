"""Quantitative bridges between sampled spectra and the limit laws."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cw.exact import ENUMERATION_CAP, pair_correlation_exact
from .cw.lowtemp import solve_magnetization
from .errors import NumericalError
from .laws import complex_sqrt_upper
from .spectra import Spectrum, StepCDF


def ks_distance(empirical: StepCDF, law) -> float:
    """Kolmogorov-Smirnov distance between a step CDF and a reference law.

    The supremum is attained at jump points; both one-sided limits are
    compared there. When the law itself has jumps (a point mass, or another
    step CDF) its jump points join the evaluation set, which keeps the
    distance symmetric for step-vs-step comparisons.
    """
    points = empirical.jumps
    law_jumps = getattr(law, "jumps", None)
    if law_jumps is not None:
        points = np.union1d(points, np.asarray(law_jumps, dtype=np.float64))
    g_right = np.asarray(law.cdf(points), dtype=np.float64)
    cdf_left = getattr(law, "cdf_left", law.cdf)
    g_left = np.asarray(cdf_left(points), dtype=np.float64)
    f_right = empirical.cdf(points)
    f_left = empirical.cdf_left(points)
    return float(
        max(np.max(np.abs(f_right - g_right)), np.max(np.abs(f_left - g_left)))
    )


def _eigenvalues(spec) -> np.ndarray:
    return spec.eigenvalues if isinstance(spec, Spectrum) else np.asarray(spec, float)


def empirical_stieltjes(spec, z) -> complex:
    """(1/p) sum 1/(lambda_i - z), evaluated from the eigenvalues."""
    z = complex(z)
    if not z.imag > 0:
        raise ValueError("Stieltjes transforms are evaluated on the upper half-plane")
    lam = _eigenvalues(spec)
    return complex(np.mean(1.0 / (lam - z)))


def stieltjes_shift_residual(spec, p: int, n: int, z) -> float:
    """Residual of the exact affine-shift identity between the two transforms.

    The transform of (V - I) / sqrt(y) at z equals sqrt(y) times the
    transform of V at q = 1 + sqrt(y) z, with y = p/n. Both sides are
    evaluated from the same eigenvalues, so the residual is pure rounding.
    """
    z = complex(z)
    if not z.imag > 0:
        raise ValueError("shift identity is checked on the upper half-plane")
    y = p / n
    ry = math.sqrt(y)
    lam = _eigenvalues(spec)
    lhs = complex(np.mean(1.0 / ((lam - 1.0) / ry - z)))
    rhs = ry * complex(np.mean(1.0 / (lam - (1.0 + ry * z))))
    return abs(lhs - rhs)


def self_consistency_residual(spec, p: int, n: int, z) -> complex:
    """Finite-size defect of the quadratic fixed-point equation for the ESD.

    With s the empirical Stieltjes transform of the raw covariance at
    q = 1 + sqrt(y) z, the defect is 1 / (1 - q - y - y q s) - s. It
    vanishes in the limit exactly when the ESD converges to the law.
    """
    z = complex(z)
    if not z.imag > 0:
        raise ValueError("the residual is evaluated on the upper half-plane")
    y = p / n
    q = 1.0 + math.sqrt(y) * z
    s = empirical_stieltjes(spec, q)
    denom = 1.0 - q - y - y * q * s
    if abs(denom) < 1e-14:
        raise NumericalError("self-consistency denominator is numerically zero")
    return 1.0 / denom - s


def self_consistency_branch_gap(spec, p: int, n: int, z) -> float:
    """Gap |s_reconstructed - s| when re-solving the quadratic with the branch rule.

    Plugging the computed defect back into the closed-form root that uses
    the positive-imaginary-part square root should reproduce s whenever
    that branch is the correct one; the gap is reported so callers can
    flag ambiguous instances instead of asserting a branch globally.
    """
    z = complex(z)
    y = p / n
    q = 1.0 + math.sqrt(y) * z
    s = empirical_stieltjes(spec, q)
    delta = self_consistency_residual(spec, p, n, z)
    root = complex_sqrt_upper((1.0 - q - y + y * q * delta) ** 2 - 4.0 * y * q)
    s_back = (1.0 - q - y - y * q * delta + root) / (2.0 * y * q)
    return abs(s_back - s)


@dataclass
class BoundCheck:
    name: str
    lhs: float
    rhs: float

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs


@dataclass
class BoundsReport:
    checks: list[BoundCheck]

    @property
    def all_ok(self) -> bool:
        return all(c.margin >= 0.0 for c in self.checks)

    def as_rows(self) -> list[dict]:
        return [
            {"name": c.name, "lhs": c.lhs, "rhs": c.rhs, "margin": c.margin}
            for c in self.checks
        ]


def resolvent_bounds_check(x: np.ndarray, z, b: float) -> BoundsReport:
    """Deterministic bounds around F = X^T (XX^T/n - z)^{-1} X.

    Four inequalities hold for every real p x n matrix X with entries
    bounded by b and every z in the upper half-plane. The Frobenius and
    trace bounds apply to F itself; the full-sum and row-sum bounds apply
    to F / n^2, the scale at which F enters quadratic forms of averaged
    rows (a rank-one argument in n^{-1/2} X supplies one 1/n, the final
    averaging the other). The report carries the attained left sides, the
    bounds, and their margins.
    """
    z = complex(z)
    if not z.imag > 0:
        raise ValueError("bounds require z in the upper half-plane")
    X = np.asarray(x, dtype=np.float64)
    if X.ndim != 2:
        raise ValueError("X must be a 2-d matrix")
    p, n = X.shape
    if b <= 0 or float(np.max(np.abs(X), initial=0.0)) > b:
        raise ValueError(f"entries must be bounded by b={b}")

    gram = X @ X.T / n - z * np.eye(p)
    w = np.linalg.solve(gram, X.astype(np.complex128))
    F = X.T @ w  # n x n

    eta = z.imag
    z_factor = 1.0 + abs(z) / eta
    diag = np.diagonal(F)
    offdiag_sq = float(np.sum(np.abs(F) ** 2) - np.sum(np.abs(diag) ** 2))
    col_sums = F.sum(axis=0)

    checks = [
        BoundCheck("offdiag_frobenius", math.sqrt(max(offdiag_sq, 0.0)), n * math.sqrt(p) * z_factor),
        BoundCheck("trace", abs(complex(np.trace(F))), n * p * z_factor),
        BoundCheck("full_sum", abs(complex(F.sum())) / n**2, b * b * p / eta + z_factor / n),
        BoundCheck(
            "row_sum_max",
            float(np.max(np.abs(col_sums - diag))) / n**2,
            b * b * p / (n * eta),
        ),
    ]
    return BoundsReport(checks=checks)


@dataclass
class CorrelationRow:
    N: int
    raw: float
    scaled: float


def correlation_rate_probe(
    beta: float, n_list, *, cap: int = ENUMERATION_CAP
) -> list[CorrelationRow]:
    """Pair correlations across sizes, rescaled by the regime of beta.

    Below the transition the correlation decays like 1/N, at the
    transition like 1/sqrt(N), and above it converges to m^2; the scaled
    column stabilizes in each case.
    """
    if beta > 1:
        m_sq = solve_magnetization(beta).m ** 2
    rows = []
    for N in n_list:
        corr = pair_correlation_exact(beta, int(N), cap=cap)
        if beta < 1:
            scaled = N * corr
        elif beta == 1:
            scaled = math.sqrt(N) * corr
        else:
            scaled = corr - m_sq
        rows.append(CorrelationRow(N=int(N), raw=corr, scaled=scaled))
    return rows


@dataclass
class DiagnosticsReport:
    """Bundle of diagnostics serialized with stable field names."""

    ks: float | None = None
    delta_residuals: list[tuple[complex, float]] = field(default_factory=list)
    bounds: BoundsReport | None = None
    correlations: list[CorrelationRow] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        payload = {
            "ks": self.ks,
            "delta": [
                {"z_re": z.real, "z_im": z.imag, "abs_delta": abs_d}
                for z, abs_d in self.delta_residuals
            ],
            "bounds": self.bounds.as_rows() if self.bounds is not None else [],
            "correlations": [
                {"N": row.N, "raw": row.raw, "scaled": row.scaled}
                for row in self.correlations
            ],
            "metadata": self.metadata,
        }
        return payload
