"""Exception hierarchy for the graded-logic toolkit."""

from typing import Iterable, Tuple


class FuzzyLogicError(Exception):
    """Base class for all toolkit errors."""


class DomainError(FuzzyLogicError, ValueError):
    """A value violates an operation's precondition."""


class UnsupportedVariantError(DomainError):
    """The operation is not defined for this crisp-set variant."""


class FormulaSyntaxError(DomainError):
    """Formula text does not match the grammar."""

    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()):
        self.offset = offset
        self.expected: Tuple[str, ...] = tuple(sorted(set(expected)))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class LiteralRangeError(DomainError):
    """A numeric literal lies outside [0, 1]."""

    def __init__(self, literal: str, offset: int):
        self.literal = literal
        self.offset = offset
        super().__init__(
            f"Literal {literal} at offset {offset} is outside [0, 1]"
        )


class UnboundVariableError(DomainError):
    """A formula variable has no value in the environment."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unbound variable: {name}")


class CurveFileError(DomainError):
    """A curve file is missing, unreadable or malformed."""

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"{path}: {reason}")


class UsageError(FuzzyLogicError):
    """The command line could not be understood."""
