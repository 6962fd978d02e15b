"""Exception hierarchy.

Validation and regime errors subclass ``ValueError`` so callers that only
care about bad input can catch that; the CLI maps them to exit code 2.
"""


class EgfError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(EgfError, ValueError):
    pass


class NonPositiveM(ValidationError):
    pass


class OrderViolation(ValidationError):
    pass


class ZeroR(ValidationError):
    pass


class FullFormulaRequired(ValidationError):
    """The simplified formula was requested for a b/d < 2 family."""


class CapacityExceeded(EgfError, ValueError):
    pass


class NegativeArgument(EgfError, ValueError):
    pass


class ComputationError(EgfError, ArithmeticError):
    pass


class DerivativeVanishes(ComputationError):
    pass


class NoConvergence(ComputationError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NegativeVariance(ComputationError):
    pass


class OrderTooLarge(EgfError, ValueError):
    pass


class NotExactMode(EgfError, ValueError):
    pass


class BFileError(EgfError, ValueError):
    pass


class MalformedLine(BFileError):
    def __init__(self, lineno, content):
        super().__init__(f"line {lineno}: malformed b-file record {content!r}")
        self.lineno = lineno
        self.content = content


class NonContiguousIndex(BFileError):
    def __init__(self, lineno, expected, got):
        super().__init__(f"line {lineno}: expected index {expected}, got {got}")
        self.lineno = lineno
        self.expected = expected
        self.got = got


class EmptyBFile(BFileError):
    pass


class InvalidAnum(EgfError, ValueError):
    pass


class NetworkError(EgfError, OSError):
    def __init__(self, message, url=None, status=None):
        super().__init__(message)
        self.url = url
        self.status = status


class ParseError(BFileError):
    """A fetched or cached b-file body could not be parsed."""

    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = path
