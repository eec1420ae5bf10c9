"""Exception types shared across the package."""


class NumericalError(RuntimeError):
    """A numerical routine failed its accuracy or convergence contract."""


class EigenConvergenceError(NumericalError):
    """QL iteration failed to converge for one eigenvalue."""

    def __init__(self, index: int, iterations: int):
        super().__init__(
            f"eigenvalue {index} did not converge after {iterations} QL iterations"
        )
        self.index = index
        self.iterations = iterations


class ConfigError(ValueError):
    """Invalid command-line or run configuration."""
