"""Exception hierarchy shared by every module of the package."""


class TornheimError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TornheimError, ValueError):
    """Arguments outside the region where the requested quantity is defined."""


class NotPrimitive(DomainError):
    """A primitive Dirichlet character was required."""


class ParityViolation(DomainError):
    """The character parity condition of a double L-value identity fails."""


class NonConvergent(TornheimError, ArithmeticError):
    """A series limit could not be stabilised within the configured cutoffs."""

    def __init__(self, message, estimate=None, gap=None):
        super().__init__(message)
        self.estimate = estimate
        self.gap = gap


class InsufficientTerms(TornheimError, ValueError):
    """A sequence transformation was given too few terms."""


class ExpressionSyntaxError(TornheimError, SyntaxError):
    """Invalid expression text; carries 1-based line/column and expected tokens."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
        self.lineno = line
        self.offset = column

    def __str__(self):
        return self.args[0]
