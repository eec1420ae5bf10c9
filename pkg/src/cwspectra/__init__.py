"""Spectra of sample covariance matrices with Curie-Weiss entries.

The package samples exchangeable random-sign matrices whose correlation
strength is set by an inverse temperature, forms their sample covariance
matrices under the appropriate rescalings, and compares the empirical
spectra against the Marchenko-Pastur and semicircle limit laws, together
with exact finite-size oracles and deterministic identity checks.
"""

__version__ = "0.1.0"

from .cw import (
    CWParams,
    Magnetization,
    MixingDensity,
    SpinMatrix,
    SpinSumPMF,
    build_mixing_cdf,
    exact_config_prob,
    log_partition,
    make_rng,
    metropolis_sum_trace,
    mixing_log_density_unnormalized,
    pair_correlation_exact,
    product_moment_exact,
    restandardize,
    restandardized_mean,
    restandardized_square_defect,
    sample_cw_matrix_definetti,
    sample_cw_matrix_metropolis,
    sample_definetti_configs,
    sample_mixing,
    solve_magnetization,
    spin_sum_pmf,
)
from .diagnostics import (
    BoundsReport,
    DiagnosticsReport,
    correlation_rate_probe,
    empirical_stieltjes,
    ks_distance,
    resolvent_bounds_check,
    self_consistency_branch_gap,
    self_consistency_residual,
    stieltjes_shift_residual,
)
from .errors import ConfigError, EigenConvergenceError, NumericalError
from .laws import (
    MarchenkoPastur,
    Semicircle,
    complex_sqrt_upper,
    mp_atom,
    mp_cdf,
    mp_density,
    mp_moment,
    mp_stieltjes,
    mp_support,
    semicircle_cdf,
    semicircle_density,
    semicircle_stieltjes,
)
from .spectra import (
    CovarianceMatrix,
    HistogramTable,
    Spectrum,
    StepCDF,
    esd,
    histogram,
    rescale_lowtemp,
    rescale_null,
    sample_covariance,
    symmetric_eigenvalues,
)

__all__ = [
    "BoundsReport",
    "ConfigError",
    "CovarianceMatrix",
    "CWParams",
    "DiagnosticsReport",
    "EigenConvergenceError",
    "HistogramTable",
    "Magnetization",
    "MarchenkoPastur",
    "MixingDensity",
    "NumericalError",
    "Semicircle",
    "SpinMatrix",
    "SpinSumPMF",
    "Spectrum",
    "StepCDF",
    "build_mixing_cdf",
    "complex_sqrt_upper",
    "correlation_rate_probe",
    "empirical_stieltjes",
    "esd",
    "exact_config_prob",
    "histogram",
    "ks_distance",
    "log_partition",
    "make_rng",
    "metropolis_sum_trace",
    "mixing_log_density_unnormalized",
    "mp_atom",
    "mp_cdf",
    "mp_density",
    "mp_moment",
    "mp_stieltjes",
    "mp_support",
    "pair_correlation_exact",
    "product_moment_exact",
    "resolvent_bounds_check",
    "restandardize",
    "restandardized_mean",
    "restandardized_square_defect",
    "rescale_lowtemp",
    "rescale_null",
    "sample_covariance",
    "sample_cw_matrix_definetti",
    "sample_cw_matrix_metropolis",
    "sample_definetti_configs",
    "sample_mixing",
    "semicircle_cdf",
    "semicircle_density",
    "semicircle_stieltjes",
    "self_consistency_branch_gap",
    "self_consistency_residual",
    "solve_magnetization",
    "spin_sum_pmf",
    "stieltjes_shift_residual",
    "symmetric_eigenvalues",
]
