"""Exact finite-size oracles for the Curie-Weiss distribution.

The configuration probability depends on a configuration only through its
spin sum, so every quantity here is an exact sum over the N+1 values of
S = sum of spins, with binomial multiplicities handled in the log domain.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

ENUMERATION_CAP = 1_000_000


def _check_cap(N: int, cap: int) -> None:
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    if N > cap:
        raise ValueError(f"N={N} exceeds the enumeration cap {cap}")


def _logsumexp(a: np.ndarray) -> float:
    m = np.max(a)
    if not np.isfinite(m):
        return float(m)
    return float(m + np.log(np.sum(np.exp(a - m))))


def _log_binomials(N: int) -> np.ndarray:
    """log C(N, j) for j = 0..N via the multiplicative recurrence."""
    j = np.arange(N, dtype=np.float64)
    steps = np.log((N - j) / (j + 1.0))
    out = np.empty(N + 1)
    out[0] = 0.0
    np.cumsum(steps, out=out[1:])
    return out


def _log_weights(beta: float, N: int) -> tuple[np.ndarray, np.ndarray]:
    """Support {-N..N step 2} and log of C(N,(N+k)/2) * exp(beta k^2 / 2N).

    The nonnegative half is computed once and mirrored so that the weight
    table is bit-exactly symmetric in k <-> -k.
    """
    logb = _log_binomials(N)
    nonneg = np.arange(N % 2, N + 1, 2, dtype=np.int64)
    lw_pos = logb[(N + nonneg) // 2] + beta * nonneg.astype(np.float64) ** 2 / (2.0 * N)
    if N % 2 == 0:
        support = np.concatenate([-nonneg[1:][::-1], nonneg])
        lw = np.concatenate([lw_pos[1:][::-1], lw_pos])
    else:
        support = np.concatenate([-nonneg[::-1], nonneg])
        lw = np.concatenate([lw_pos[::-1], lw_pos])
    return support, lw


@dataclass(frozen=True)
class SpinSumPMF:
    """Exact distribution of the total spin sum S."""

    beta: float
    N: int
    support: np.ndarray
    probs: np.ndarray

    def prob(self, k: int) -> float:
        if (k + self.N) % 2 != 0 or abs(k) > self.N:
            raise ValueError(f"k={k} is not in the support for N={self.N}")
        return float(self.probs[(k + self.N) // 2])

    def moment(self, a: int) -> float:
        return float(np.sum(self.probs * self.support.astype(np.float64) ** a))


def log_partition(beta: float, N: int, *, cap: int = ENUMERATION_CAP) -> float:
    """Log normalization constant of the N-spin Curie-Weiss law."""
    _check_cap(N, cap)
    _, lw = _log_weights(beta, N)
    return _logsumexp(lw)


def spin_sum_pmf(beta: float, N: int, *, cap: int = ENUMERATION_CAP) -> SpinSumPMF:
    """Exact law of S = sum of N Curie-Weiss spins."""
    _check_cap(N, cap)
    support, lw = _log_weights(beta, N)
    probs = np.exp(lw - _logsumexp(lw))
    probs /= probs.sum()
    return SpinSumPMF(beta=beta, N=N, support=support, probs=probs)


def exact_config_prob(beta: float, config, *, cap: int = ENUMERATION_CAP) -> float:
    """Probability of one +-1 configuration of any length N <= cap."""
    y = np.asarray(config, dtype=np.float64)
    if y.ndim != 1 or y.size < 1:
        raise ValueError("config must be a nonempty 1-d array")
    if not np.all(np.abs(y) == 1.0):
        raise ValueError("config entries must be exactly +1 or -1")
    N = y.size
    _check_cap(N, cap)
    s = float(y.sum())
    return float(math.exp(beta * s * s / (2.0 * N) - log_partition(beta, N, cap=cap)))


def pair_correlation_exact(beta: float, N: int, *, cap: int = ENUMERATION_CAP) -> float:
    """E[Y_1 Y_2] for two spins out of N, via the spin-sum law.

    Exchangeability gives E[Y_1 Y_2] = (E[S^2] - N) / (N (N - 1)).
    """
    if N < 2:
        raise ValueError("pair correlation needs N >= 2")
    pmf = spin_sum_pmf(beta, N, cap=cap)
    return (pmf.moment(2) - N) / (N * (N - 1.0))


def product_moment_exact(
    beta: float, N: int, l: int, *, cap: int = ENUMERATION_CAP
) -> float:
    """E[Y_1 ... Y_l] for l distinct spins out of N.

    Conditional on S the configuration is uniform over arrangements, so the
    product moment is a ratio of exact integer combinatorial weights: with
    j plus-spins, sum over how many of the l picked spins are minus.
    Pairing the S and -S terms before weighting makes odd moments cancel
    to a bit-exact zero.
    """
    if not 1 <= l <= N:
        raise ValueError(f"need 1 <= l <= N, got l={l}, N={N}")
    pmf = spin_sum_pmf(beta, N, cap=cap)
    denom = math.comb(N, l)

    def signed_ways(j_plus: int) -> int:
        total = 0
        for i in range(l + 1):  # i = number of minus-spins among the l picked
            total += (-1) ** i * math.comb(N - j_plus, i) * math.comb(j_plus, l - i)
        return total

    acc = 0.0
    for s in pmf.support[pmf.support >= 0]:
        j_plus = (N + int(s)) // 2
        if s == 0:
            acc += pmf.prob(0) * (signed_ways(j_plus) / denom)
        else:
            paired = signed_ways(j_plus) + signed_ways(N - j_plus)
            acc += pmf.prob(int(s)) * (paired / denom)
    return acc
