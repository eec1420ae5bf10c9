"""Parameter and sample containers for Curie-Weiss spin matrices."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class CWParams:
    """Shape and temperature of a p x n Curie-Weiss spin matrix.

    The matrix entries form a single exchangeable family of n*p spins at
    inverse temperature beta; the phase transition sits at beta = 1.
    """

    beta: float
    p: int
    n: int

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if self.p < 1 or self.n < 1:
            raise ValueError(f"matrix shape must be at least 1x1, got {self.p}x{self.n}")

    @property
    def total_spins(self) -> int:
        """Total number of spins N = n * p."""
        return self.n * self.p

    @property
    def ratio(self) -> float:
        """Dimension-to-sample ratio p / n."""
        return self.p / self.n


@dataclass
class SpinMatrix:
    """A sampled p x n spin matrix together with its provenance.

    Raw samples hold entries that are exactly +-1. Restandardized samples
    (low-temperature regime) hold the recentered, rescaled real values.
    ``mixing_draw`` is the latent bias used by the conditionally-i.i.d.
    sampler; Metropolis samples carry ``None`` there.
    """

    entries: np.ndarray
    params: CWParams
    seed: int
    restandardized: bool = False
    mixing_draw: float | None = field(default=None)

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=np.float64)
        if self.entries.shape != (self.params.p, self.params.n):
            raise ValueError(
                f"entries shape {self.entries.shape} does not match "
                f"params ({self.params.p}, {self.params.n})"
            )
        if not self.restandardized and not np.all(np.abs(self.entries) == 1.0):
            raise ValueError("raw spin entries must be exactly +1 or -1")
