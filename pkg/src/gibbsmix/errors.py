"""Exception types raised by gibbsmix."""


class GibbsMixError(Exception):
    """Base class for every error raised by this package."""


class NotHermitianError(GibbsMixError, ValueError):
    pass


class InvalidStateError(GibbsMixError, ValueError):
    """Matrix fails the density-matrix checks (trace or positivity)."""


class NoConvergenceError(GibbsMixError, ArithmeticError):
    """The Jacobi eigensolver hit its sweep cap.

    The remaining off-diagonal norm is kept on ``residual``.
    """

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class DimensionMismatchError(GibbsMixError, ValueError):
    pass


class DomainError(GibbsMixError, ValueError):
    pass


class PressureMismatchError(GibbsMixError, ValueError):
    pass


class WeightError(GibbsMixError, ValueError):
    pass


class PreconditionError(GibbsMixError, ValueError):
    pass


class DimensionTooLargeError(GibbsMixError, ValueError):
    pass
