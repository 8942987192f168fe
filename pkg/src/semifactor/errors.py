"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: usage/domain problems exit 1, exhausted
budgets exit 2, broken internal invariants exit 3.
"""


class SemifactorError(Exception):
    """Base class for all library errors."""


class UsageError(SemifactorError):
    """The caller passed arguments that violate an operation's contract."""


class DomainError(SemifactorError):
    """A value lies outside the mathematical domain of an operation."""


class BudgetError(SemifactorError):
    """A configured resource budget (nodes, candidates, degree) ran out."""


class InternalError(SemifactorError):
    """An internal self-check failed; results cannot be trusted."""


class ParseError(UsageError):
    """Syntax error in an expression, with the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExponentNotInMonoidError(UsageError):
    """An exponent in a parsed expression is not a member of the monoid."""

    def __init__(self, exponent, monoid_desc):
        super().__init__(f"exponent {exponent} is not a member of {monoid_desc}")
        self.exponent = exponent


class LengthFunctionUnavailableError(DomainError):
    """The supported length-function family has no member for this semiring."""
