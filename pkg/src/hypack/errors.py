"""Exception types raised by hypack."""


class HypackError(Exception):
    """Base class for all hypack errors."""


class SymbolError(HypackError, ValueError):
    """Malformed or unsupported Coxeter symbol."""


class UnsupportedSymbolError(SymbolError):
    """Symbol is well formed but has no packing-density computation."""


class DomainError(HypackError, ValueError):
    """Argument outside the domain of a formula (non-finite, negative radicand...)."""


class GeometryError(HypackError, ValueError):
    """Point or vertex does not have the classification an operation requires."""


class NumericalError(HypackError, ArithmeticError):
    """A numerical procedure failed or produced inconsistent values."""


class QuadratureError(NumericalError):
    """Adaptive quadrature did not reach the requested tolerance.

    The best available estimate is kept on the exception.
    """

    def __init__(self, message, value, error):
        super().__init__(message)
        self.value = value
        self.error = error
