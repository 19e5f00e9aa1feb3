# -*- coding: utf-8 -*-
"""Exception hierarchy.

Two roots: a :class:`UserError` means the caller handed over something the
tool cannot accept, a :class:`ValidationError` means an internal guarantee did
not hold.
"""


class SplitIrregularError(Exception):
    """Base class of every error raised by this package."""


class UserError(SplitIrregularError):
    pass


class ValidationError(SplitIrregularError):
    pass


class InputError(UserError, ValueError):
    """Out-of-range vertex, bad color index, partial coloring, unrealizable profile."""


class ParseError(InputError):
    """A graph or coloring file could not be read.

    Args:
        message: what went wrong
        line_number: 1-based line of the offending text, or None for file-level errors
        line: the offending text itself
    """

    def __init__(self, message, line_number=None, line=None):
        self.line_number = line_number
        self.line = line
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super(ParseError, self).__init__(message)


class NotSplitError(UserError):
    """The graph has no clique / stable-set partition."""


class UnsupportedError(UserError):
    pass


class OracleBudgetExceeded(UserError):

    def __init__(self, edge_count, budget):
        self.edge_count = edge_count
        self.budget = budget
        super(OracleBudgetExceeded, self).__init__(
            f"Graph has {edge_count} edges, oracle budget is {budget}"
        )


class ContractError(ValidationError):
    """An operation was called on data violating its precondition."""


class ConstructionFailed(ValidationError):
    """A construction produced a coloring that does not verify clean.

    ``report`` holds the remaining :class:`ConflictReport` when one is available.
    """

    def __init__(self, message, report=None):
        self.report = report
        super(ConstructionFailed, self).__init__(message)
