"""Exception types shared across the package.

Everything raised on bad inputs or degenerate data derives from
:class:`HurstlabError`, so callers (and the CLI) can distinguish
data/domain problems from programming errors.
"""


class HurstlabError(Exception):
    """Base class for all hurstlab errors."""


class ParameterError(HurstlabError, ValueError):
    """An argument is outside its mathematical domain."""


class EmptyInputError(HurstlabError, ValueError):
    """An operation received no data."""


class InsufficientScalesError(HurstlabError):
    """Fewer than two scales survive the grid constraints."""


class DegenerateSeriesError(HurstlabError):
    """The series carries no usable fluctuation (e.g. constant input)."""


class DegenerateRegressionError(HurstlabError):
    """The log-log regression has zero variance in the regressor."""


class FormatError(HurstlabError):
    """An input file does not match the expected format."""


class OrderingError(HurstlabError):
    """Timestamps are not non-decreasing."""


class EmptyResultError(HurstlabError):
    """Every session was skipped; nothing to report."""


class CellFailureError(HurstlabError):
    """Every replication of a Monte Carlo cell failed.

    Carries the number of failed replications in ``n_failed``.
    """

    def __init__(self, message: str, n_failed: int):
        super().__init__(message)
        self.n_failed = n_failed
