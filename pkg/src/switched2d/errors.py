"""Exception types shared across the toolkit."""


class Switched2dError(Exception):
    """Base class for all toolkit errors."""


class InvalidMatrix(Switched2dError):
    """Matrix input contains non-finite entries or is not symmetric."""


class DimError(Switched2dError):
    """Dimension mismatch between matrices or blocks."""


class SingularBlock(Switched2dError):
    """A block that must be inverted is singular or too ill-conditioned."""


class DelayOrderError(Switched2dError):
    """Delay bounds are inconsistent (upper < lower, or unequal where equality is required)."""


class FaultOutOfRange(Switched2dError):
    """A sampled actuator effectiveness leaves its declared interval."""


class DwellTimeViolation(Switched2dError):
    """A switching signal violates the average dwell-time bound."""


class GridUnderflow(Switched2dError):
    """A state read falls outside the stored grid (missing history)."""


class NumericalBlowup(Switched2dError):
    """A simulated state component exceeded the finite-magnitude guard."""

    def __init__(self, i: int, j: int, value: float):
        super().__init__(f"state magnitude {value:.3e} exceeds guard at (i={i}, j={j})")
        self.i = i
        self.j = j
        self.value = value


class IncompleteModel(Switched2dError):
    """The model lacks data required by the requested operation."""


class AlphaRange(Switched2dError):
    """The decrease rate must lie strictly inside (0, 1)."""


class EnvelopeUndefined(Switched2dError):
    """The requested dwell time does not exceed the minimum admissible one."""


class ConfigError(Switched2dError):
    """A configuration document is malformed; carries the JSON path."""

    def __init__(self, path: str, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason


class SolverBreakdown(Switched2dError):
    """The interior-point iteration failed irrecoverably."""
