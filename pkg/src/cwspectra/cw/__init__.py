"""Curie-Weiss core: exact oracles, mixing density, samplers, restandardization."""

from .exact import (
    ENUMERATION_CAP,
    SpinSumPMF,
    exact_config_prob,
    log_partition,
    pair_correlation_exact,
    product_moment_exact,
    spin_sum_pmf,
)
from .lowtemp import (
    Magnetization,
    restandardize,
    restandardized_mean,
    restandardized_square_defect,
    solve_magnetization,
)
from .mixing import (
    MixingDensity,
    build_mixing_cdf,
    mixing_log_density_unnormalized,
    sample_mixing,
    sample_mixing_batch,
)
from .params import CWParams, SpinMatrix
from .sampling import (
    flip_log_ratio,
    make_rng,
    metropolis_sum_trace,
    mixing_density_cached,
    sample_cw_matrix_definetti,
    sample_cw_matrix_metropolis,
    sample_definetti_configs,
)

__all__ = [
    "ENUMERATION_CAP",
    "CWParams",
    "Magnetization",
    "MixingDensity",
    "SpinMatrix",
    "SpinSumPMF",
    "build_mixing_cdf",
    "exact_config_prob",
    "flip_log_ratio",
    "log_partition",
    "make_rng",
    "metropolis_sum_trace",
    "mixing_density_cached",
    "mixing_log_density_unnormalized",
    "pair_correlation_exact",
    "product_moment_exact",
    "restandardize",
    "restandardized_mean",
    "restandardized_square_defect",
    "sample_cw_matrix_definetti",
    "sample_cw_matrix_metropolis",
    "sample_definetti_configs",
    "sample_mixing",
    "sample_mixing_batch",
    "solve_magnetization",
    "spin_sum_pmf",
]
