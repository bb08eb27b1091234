"""Exception types shared by all layers."""


class BGTiltError(Exception):
    """Base class for all library errors."""


class ParseError(BGTiltError):
    """Malformed graph or walk text."""


class ValidationError(BGTiltError):
    """A structurally invalid Brauer graph.

    ``category`` is one of: DuplicateHalfEdge, UnpairedHalfEdge,
    FixedPointPairing, Disconnected, BadMultiplicity.
    """

    def __init__(self, category, message):
        super().__init__(f"{category}: {message}")
        self.category = category


class UnknownEdge(BGTiltError):
    pass


class UnknownVertex(BGTiltError):
    pass


class NotAWalk(BGTiltError):
    """The consecutive-source condition fails."""


class NoSignature(BGTiltError):
    """The half-walk admits no alternating, edge-consistent signature."""


class SignMismatch(BGTiltError):
    """Explicit signs contradict the forced alternating signature."""


class GraphMismatch(BGTiltError):
    """Operands live on different graphs."""


class NotShortString(BGTiltError):
    """A differential entry is not a short path."""


class SummandOverlap(BGTiltError):
    """A projective summand appears in both degrees of a two-term complex."""


class Disconnected(BGTiltError):
    """A complex decomposes into blocks; decompose before converting."""


class NotEnumerable(BGTiltError):
    """Admissible walks form an infinite set and no cap was supplied."""


class InternalInvariantViolation(BGTiltError):
    """A theorem-backed invariant failed; indicates an implementation bug."""


class InvalidString(BGTiltError):
    """A word is not a valid string of the quotient algebra."""
