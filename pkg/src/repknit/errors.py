"""Exception hierarchy.

Every failure that a caller can provoke with legal-looking input gets its
own class, so the CLI can name the module and the offending slot/vertex in
its exit message.
"""


class RepknitError(Exception):
    """Base class for all structured errors raised by this package."""


class ConfigError(RepknitError):
    """Malformed configuration file; the message names the offending field."""


class HeightMismatch(RepknitError):
    """A height function violating the decrement rule along an arrow."""

    def __init__(self, arrow, got_source, got_target):
        self.arrow = arrow
        super().__init__(
            f"height mismatch on arrow {arrow.source}->{arrow.target}: "
            f"expected xi({arrow.target}) = xi({arrow.source}) - 1, "
            f"got {got_source} -> {got_target}"
        )


class WindowTooSmall(RepknitError):
    """A computation touched the boundary margin of its window."""


class KnitError(RepknitError):
    """Internal inconsistency while knitting (e.g. a negative dimension)."""


class AmbiguousProjectiveInsertion(RepknitError):
    """Two distinct projectives match the same mesh start."""


class AmbiguousIdentification(RepknitError):
    """A dimension-vector lookup in the knitted window was not unique."""


class NotDominant(RepknitError):
    """A pair (V, W) violating the dominance inequality at some slot."""


class WSupportNotProjective(RepknitError):
    """W is supported on a slot that carries no projective in the window."""


class CapExceeded(RepknitError):
    """Graded dimensions did not stabilize below the path-length cap."""


class CoverNotSurjective(RepknitError):
    """An explicit projective cover failed its surjectivity check."""
