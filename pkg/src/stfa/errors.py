"""Exception types raised across the package."""


class UndefinedMetricError(ValueError):
    """A metric was requested on data for which it is not defined (e.g. an all-zero grid)."""


class OutOfBandError(ValueError):
    """A frequency lies outside the representable band of a grid."""


class ParseError(ValueError):
    """A text input file could not be parsed.

    Parameters
    ----------
    message : str
        Description of the problem.
    lineno : int, optional
        1-based line number of the offending line.
    """

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class FormatError(ValueError):
    """A binary input file is malformed or truncated."""
