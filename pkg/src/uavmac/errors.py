"""Exception types shared across the package."""

from __future__ import annotations


class UavMacError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(UavMacError):
    """Raised when a configuration record violates one or more invariants.

    ``violations`` is a list of ``code: detail`` strings, one per violated
    invariant (e.g. ``nonpositive-radius``, ``zero-window``).
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DivergentFreezeError(UavMacError):
    """Freeze expectation requested at busy probability q >= 1 (pole)."""


class UndefinedMixtureError(UavMacError):
    """Traversal-time mixture undefined: no transmissions (P_b = 0) but q > 0."""


class OutsideCoverageError(UavMacError):
    """Ground position lies outside the coverage disk."""


class NoClusterError(UavMacError):
    """Coverage pass is too short for even a single chain traversal (N = 0)."""


class AbsorbedChainError(UavMacError):
    """Backoff chain has stall probability 1; the device never progresses."""


class NonConvergenceError(UavMacError):
    """Fixed-point iteration failed to reach tolerance.

    Carries the last residual and iterate so the failure is diagnosable
    rather than a silent wrong answer.
    """

    def __init__(self, residual: float, iterations: int, tx_prob, quit_prob):
        self.residual = residual
        self.iterations = iterations
        self.tx_prob = tx_prob
        self.quit_prob = quit_prob
        super().__init__(
            f"fixed point did not converge: residual {residual:.3e} "
            f"after {iterations} iterations"
        )
