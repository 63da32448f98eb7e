"""Exception hierarchy shared by all cowordmap modules.

The CLI maps these onto its exit-code contract, so new error conditions
should subclass one of the classes below rather than raising bare
ValueError out of library code.
"""

from __future__ import annotations


class CowordError(Exception):
    """Base class for all cowordmap errors."""


class ParseError(CowordError):
    """A malformed input record or file."""

    def __init__(self, message, line=None, source=None):
        self.message = message
        self.line = line
        self.source = source
        prefix = ""
        if source is not None:
            prefix += f"{source}: "
        if line is not None:
            prefix += f"line {line}: "
        super().__init__(prefix + message)


class ValidationError(CowordError):
    """Input counts violate a store invariant (strict mode)."""


class WindowRangeError(CowordError):
    """A time window falls outside the corpus year range."""


class DegenerateWindowError(CowordError):
    """A window with zero total occurrences where a share is required."""


class UnknownTermError(CowordError):
    """A label that is not part of the vocabulary."""

    def __init__(self, label, suggestions=()):
        self.label = label
        self.suggestions = tuple(suggestions)
        message = f"unknown term {label!r}"
        if self.suggestions:
            message += " (closest matches: " + ", ".join(self.suggestions) + ")"
        super().__init__(message)


class UndefinedTermError(CowordError):
    """A term with zero occurrences in the requested window."""

    def __init__(self, label, window):
        self.label = label
        self.window = window
        super().__init__(f"term {label!r} has no occurrences in window {window}")


class UndefinedActivityError(CowordError):
    """Every member of a field has a zero previous-period share."""


class BudgetExceededError(CowordError):
    """A resource budget (e.g. maximal-clique count) was exceeded."""

    def __init__(self, budget, what="maximal cliques"):
        self.budget = budget
        self.what = what
        super().__init__(f"budget of {budget} {what} exceeded")
