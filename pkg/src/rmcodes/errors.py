"""Exception hierarchy shared by every module."""


class RMCodesError(Exception):
    pass


class InvalidArgument(RMCodesError, ValueError):
    """Malformed input: not a permutation, digit out of radix, bad parameters."""


class UncorrectableError(RMCodesError):
    """The received word cannot be decoded by the requested decoder."""


class ConstructionFailure(RMCodesError):
    """A search-based construction ran out of candidates."""


class InfeasibleParameters(RMCodesError):
    """No code parameters satisfy the construction's length equations."""
