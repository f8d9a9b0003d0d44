"""Exception types shared across the package."""
from __future__ import annotations


class ChiboundError(Exception):
    pass


class CapExceededError(ChiboundError, ValueError):
    """Input exceeds a configured exact-solver size cap."""


class SearchTimeout(ChiboundError, TimeoutError):
    """A search ran past its deadline."""


class ImproperColoringError(ChiboundError, ValueError):
    pass


class NotMemberError(ChiboundError, ValueError):
    """Input graph is outside the class an algorithm requires.

    ``witness`` embeds the offending pattern into the input graph.
    """

    def __init__(self, message: str, witness=None, pattern=None):
        super().__init__(message)
        self.witness = witness
        self.pattern = pattern


class CertificateError(ChiboundError, ValueError):
    """Malformed willow certificate or embedding."""


class NonUniquePathError(ChiboundError, ValueError):
    """Orientation has two distinct directed paths between a pair of vertices."""


class CyclicOrientationError(ChiboundError, ValueError):
    pass


class ConstructionError(ChiboundError, RuntimeError):
    """A construction failed its own verification."""
