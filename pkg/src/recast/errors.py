"""Exception types shared across the engine."""


class RecastError(Exception):
    """Base class for all engine errors."""


class InputTooLarge(RecastError):
    """Input text exceeds the maximum allowed byte length."""


class SpanOutOfBounds(RecastError):
    """A token span does not fit the document it was applied to."""


class SpanTooLong(RecastError):
    """A multi-token span exceeds the supported replacement length."""


class EmptyDistribution(RecastError):
    """A sample distribution required for calibration is empty."""


class UndefinedCorrelation(RecastError):
    """Rank correlation is undefined (a variable has no untied pairs)."""


class EmptySample(RecastError):
    """A statistic was requested over zero trials."""
