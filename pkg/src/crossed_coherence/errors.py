"""Exception types shared across the package."""


class CrossedError(Exception):
    """Base class for all package errors."""


class CapOverflow(CrossedError):
    """A construction needed cells above the configured dimension cap."""


class BudgetExceeded(CrossedError):
    """An enumeration or completion procedure ran out of budget."""


class InfiniteHom(CrossedError):
    """A hom-set enumeration would be infinite for the requested target."""


class UnsupportedSolver(CrossedError):
    """The word problem backend cannot decide the requested equality."""


class EndpointMismatch(CrossedError):
    """Words or elements were combined with incompatible endpoints."""


class ParseError(CrossedError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
