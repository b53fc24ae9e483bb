"""Exception hierarchy shared by all partsum modules."""


class PartsumError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(PartsumError, ValueError):
    pass


class InvalidDistribution(PartsumError, ValueError):
    pass


class InvalidProbability(PartsumError, ValueError):
    pass


class IndexOutOfRange(PartsumError, IndexError):
    pass


class ZeroVector(PartsumError, ValueError):
    pass


class MixedSignVector(PartsumError, ValueError):
    """The vector has entries of both signs, so it is not a scaled distribution."""


class InvalidGTable(PartsumError, ValueError):
    pass


class ZeroDominantValue(PartsumError, ValueError):
    pass


class PreconditionViolated(PartsumError, ValueError):
    """A power-method precondition failed; ``condition`` names which one."""

    def __init__(self, condition: str, message: str):
        super().__init__(f"{condition}: {message}")
        self.condition = condition


class InvalidParams(PartsumError, ValueError):
    pass


class NotApplicable(PartsumError, ValueError):
    pass


class BoundaryCase(PartsumError):
    """The limit at |g(0)| == |g(S-1)| is not determined by the power method."""


class NoConvergence(PartsumError):
    """Iteration hit ``max_iter`` without meeting the tolerance.

    The partial trace and the last normalized iterate are attached so the
    caller can inspect how far the run got.
    """

    def __init__(self, message: str, trace=None, last=None):
        super().__init__(message)
        self.trace = trace
        self.last = last


class DegenerateFactorWarning(UserWarning):
    """A factor of the closed-form eigenvector product vanished."""
