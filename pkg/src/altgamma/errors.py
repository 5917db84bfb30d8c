"""Exception hierarchy shared by every evaluator."""


class AltGammaError(ValueError):
    """Base class for all errors raised by altgamma."""


class DomainError(AltGammaError):
    """An argument lies outside the domain where the function is defined."""


class PoleError(DomainError):
    """The requested point is a pole of the function."""


class ParameterError(AltGammaError):
    """A structural parameter (order, count, grid size) is out of range."""
