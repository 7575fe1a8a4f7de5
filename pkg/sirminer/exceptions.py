"""Error hierarchy shared by every sirminer service.

Each class carries the process exit code the CLI maps it to.
"""


class SirError(Exception):
    """Base class for all sirminer errors"""

    exit_code = 1


class ParamError(SirError):
    """Mining or command parameters are out of range"""


class BoundsError(SirError):
    """An interval or extension falls outside [0, n-1]"""

    exit_code = 2


class MeasureNotQualified(SirError):
    """The measure does not satisfy the single-point, extension and betweenness properties"""


class DegenerateError(SirError):
    """A series has zero variance where a non-constant one is required"""

    exit_code = 2


class BudgetExceeded(SirError):
    """The oracle refused an instance larger than its budget"""


class FormatError(SirError):
    """Input file is malformed"""

    exit_code = 2


class SpecError(SirError):
    """Planted windows cannot be realised for the requested threshold"""
