"""Samplers for Curie-Weiss spin matrices.

Two routes are provided. The conditionally-i.i.d. sampler is exact: it
draws the latent bias from the tabulated mixing density and then fills the
matrix with independent signs. The Metropolis sampler runs single-spin-flip
dynamics on the full N-spin energy and mirrors how such ensembles are
usually simulated.

Reproducibility contract: every sampler consumes a PCG64 generator seeded
through ``make_rng(master_seed, *stream)``. Replica r of a multi-replica
experiment uses ``make_rng(master_seed, r)``, so results are identical no
matter how replicas are scheduled.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .mixing import MixingDensity, build_mixing_cdf, sample_mixing, sample_mixing_batch
from .params import CWParams, SpinMatrix

_BATCH_CHUNK = 4_000_000  # cap on uniforms drawn per chunk in batch sampling


def make_rng(master_seed: int, *stream: int) -> np.random.Generator:
    """PCG64 generator for a (master seed, stream index...) pair.

    Uses ``SeedSequence(master_seed, spawn_key=stream)``, so derived
    streams are independent and platform-stable.
    """
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(master_seed, spawn_key=stream))
    )


@lru_cache(maxsize=16)
def mixing_density_cached(beta: float, N: int, grid_size: int = 4096) -> MixingDensity:
    return build_mixing_cdf(beta, N, grid_size)


def sample_cw_matrix_definetti(
    params: CWParams,
    seed: int,
    *,
    rng: np.random.Generator | None = None,
    density: MixingDensity | None = None,
) -> SpinMatrix:
    """Exact sampler: one bias draw, then n*p conditionally i.i.d. signs.

    The p x n matrix is filled row-major from a single block of uniforms.
    Passing ``rng`` reuses an existing stream (the ``seed`` is then only
    recorded, not used); passing ``density`` skips the table rebuild.
    """
    if density is None:
        density = mixing_density_cached(params.beta, params.total_spins)
    if rng is None:
        rng = make_rng(seed)
    t = sample_mixing(density, rng)
    u = rng.random((params.p, params.n))
    entries = np.where(u < 0.5 * (1.0 + t), 1.0, -1.0)
    return SpinMatrix(
        entries=entries, params=params, seed=seed, restandardized=False, mixing_draw=t
    )


def sample_definetti_configs(
    params: CWParams,
    count: int,
    seed: int,
    *,
    density: MixingDensity | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized replica sampler for distribution-level checks.

    Returns ``(configs, biases)`` where configs is a (count, N) int8 array
    of +-1 entries (each row one flattened row-major matrix) and biases the
    per-replica mixing draws. One generator drives all replicas, drawing
    the bias first and then the N signs of each replica, in replica order.
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    N = params.total_spins
    if density is None:
        density = mixing_density_cached(params.beta, N)
    rng = make_rng(seed)
    configs = np.empty((count, N), dtype=np.int8)
    biases = np.empty(count)
    chunk = max(1, _BATCH_CHUNK // N)
    for start in range(0, count, chunk):
        stop = min(start + chunk, count)
        t = sample_mixing_batch(density, rng, stop - start)
        u = rng.random((stop - start, N))
        configs[start:stop] = np.where(u < 0.5 * (1.0 + t)[:, None], 1, -1)
        biases[start:stop] = t
    return configs, biases


def flip_log_ratio(beta: float, N: int, spin_sum: int, spin: int) -> float:
    """Log acceptance ratio for flipping one spin with value ``spin``.

    Flipping changes S to S - 2*spin, so the energy difference is
    (beta / 2N) * ((S - 2*spin)^2 - S^2) = (2*beta / N) * (1 - spin * S).
    """
    if spin not in (-1, 1):
        raise ValueError(f"spin must be +-1, got {spin}")
    return 2.0 * beta / N * (1.0 - spin * spin_sum)


def _run_metropolis(
    beta: float,
    N: int,
    sweeps: int,
    rng: np.random.Generator,
    record_every: int = 0,
) -> tuple[np.ndarray, np.ndarray]:
    """Single-spin-flip chain; returns final spins and recorded spin sums.

    Uniform site proposal, acceptance min(1, exp(delta)) with delta updated
    incrementally from the running sum; the start state is i.i.d. fair
    signs and there is no burn-in discard. One sweep is N proposals.
    """
    state = np.where(rng.random(N) < 0.5, 1, -1).tolist()
    total = sum(state)
    scale = 2.0 * beta / N
    sums = []
    for sweep in range(sweeps):
        sites = rng.integers(0, N, size=N).tolist()
        log_u = np.log(rng.random(size=N)).tolist()
        for k in range(N):
            i = sites[k]
            y = state[i]
            delta = scale * (1.0 - y * total)
            if delta >= 0.0 or log_u[k] < delta:
                state[i] = -y
                total -= 2 * y
        if record_every and (sweep + 1) % record_every == 0:
            sums.append(total)
    return np.asarray(state, dtype=np.int64), np.asarray(sums, dtype=np.int64)


def sample_cw_matrix_metropolis(
    params: CWParams,
    sweeps: int,
    seed: int,
    *,
    rng: np.random.Generator | None = None,
) -> SpinMatrix:
    """Metropolis sampler: sweeps * N proposed single-spin flips."""
    if sweeps < 1:
        raise ValueError(f"sweeps must be at least 1, got {sweeps}")
    if rng is None:
        rng = make_rng(seed)
    state, _ = _run_metropolis(params.beta, params.total_spins, sweeps, rng)
    entries = state.astype(np.float64).reshape(params.p, params.n)
    return SpinMatrix(
        entries=entries, params=params, seed=seed, restandardized=False, mixing_draw=None
    )


def metropolis_sum_trace(
    params: CWParams,
    sweeps: int,
    record_every: int,
    seed: int,
) -> tuple[SpinMatrix, np.ndarray]:
    """Run Metropolis and record the spin sum every ``record_every`` sweeps."""
    if sweeps < 1:
        raise ValueError(f"sweeps must be at least 1, got {sweeps}")
    if record_every < 1:
        raise ValueError(f"record_every must be at least 1, got {record_every}")
    rng = make_rng(seed)
    state, sums = _run_metropolis(
        params.beta, params.total_spins, sweeps, rng, record_every=record_every
    )
    entries = state.astype(np.float64).reshape(params.p, params.n)
    matrix = SpinMatrix(
        entries=entries, params=params, seed=seed, restandardized=False, mixing_draw=None
    )
    return matrix, sums
