"""Shared exception types."""


class BoundExceededError(RuntimeError):
    """An enumeration or size bound would be exceeded."""


class WindowExceededError(BoundExceededError):
    """A weight or twist falls outside the materialized window."""


class InvariantError(RuntimeError):
    """An internal consistency check failed.

    Raised when a quantity the library computes two ways disagrees with
    itself. Indicates a bug, not bad input.
    """
