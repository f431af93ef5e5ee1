"""
Core Exception Classes for skewblocks
"""

class SkewBlocksError(Exception):
    """Base exception for all skewblocks errors"""
    pass

class InvalidPermutationError(SkewBlocksError, ValueError):
    """Raised when text or values do not describe a permutation of 1..n"""
    pass

class PreconditionError(SkewBlocksError, ValueError):
    """Raised when an operation's precondition fails (message names the predicate)"""
    pass

class ResourceGuardError(SkewBlocksError):
    """Raised when an enumeration would exceed the configured length ceiling"""
    pass

class ConfigurationError(SkewBlocksError):
    """Raised when there is a configuration issue"""
    pass

class SeriesError(SkewBlocksError, ValueError):
    """Base exception for truncated series precondition failures"""
    pass


class NotACountingSeriesError(SeriesError):
    """Raised when a series that must count objects has a negative coefficient"""
    pass


class SerializationError(SkewBlocksError, ValueError):
    """Raised when a CSV/JSON emission cannot be read back"""
    pass
