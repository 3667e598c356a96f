"""
Exception hierarchy for the divmatch package.

Regular negative answers ("not bipartite", "no 2-factor", "bounded") are
return values; the exceptions below signal violated preconditions.
"""

from typing import Optional


class DivMatchError(Exception):
    """Base class for all divmatch errors."""


class UsageError(DivMatchError, ValueError):
    """Raised when an operation is called with arguments violating its preconditions."""


class GraphFormatError(UsageError):
    """
    Raised when an edge-list file cannot be parsed.

    Attributes:
        line_number: 1-based line of the offending input, if known.
    """

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
