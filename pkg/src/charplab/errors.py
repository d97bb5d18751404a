"""Exception hierarchy shared by every module."""


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(AlgebraError):
    """An argument is outside the mathematical domain of the operation."""


class StructuralError(AlgebraError):
    """Mismatched rings, variable counts, or other structural problems."""


class ResourceBudgetError(AlgebraError):
    """A configured computation budget was exceeded (never a wrong answer)."""


class SearchFailure(AlgebraError):
    """A certified search exhausted its retry budget without a witness."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class SpecError(AlgebraError):
    """A problem in an experiment-spec file, annotated with a position."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
