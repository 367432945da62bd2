"""Exception types shared across the package."""


class DegenerateInputError(ValueError):
    """Input fails a structural precondition (dependent rows, singular matrix)."""


class ContractViolationError(RuntimeError):
    """An operation was handed data that violates its certified precondition."""


class FeasibilityError(ValueError):
    """Moduli parameters lie outside the semialgebraic solution set."""


class CertificationError(RuntimeError):
    """An assembled curve failed its own certificate."""


class TranscriptionFaultError(AssertionError):
    """A transcribed closed form disagrees with its derived counterpart."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to converge; carries the best estimate."""

    def __init__(self, message: str, estimate: float):
        super().__init__(message)
        self.estimate = estimate
