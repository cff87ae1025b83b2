"""Exception hierarchy shared by the arc algebra, the engine and the builders."""


class IFSError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class InvalidArc(IFSError):
    """Arc endpoint outside the ambient space."""


class AmbientMismatch(IFSError):
    """Operands live on different ambient spaces."""


class EmptySet(IFSError):
    """Operation needs a nonempty arc set."""


class NotAHomeomorphism(IFSError):
    """Breakpoints do not describe an increasing homeomorphism."""


class OutOfDomain(IFSError):
    """Point outside the ambient space of a map."""


class InsufficientDepth(IFSError):
    """Trace too short for the requested analysis."""


class EvidenceContradictsMetadata(IFSError):
    """Finite evidence matches an excluded case or disagrees with the declared class."""


class InvalidGeometry(IFSError):
    """Builder arguments violate the nesting/disjointness a construction needs."""


class InfeasibleSlopes(IFSError):
    """Requested slope bound cannot be met by a monotone map."""


class DepthExceedsData(IFSError):
    """Gap data does not reach the recursion position being matched."""


class Overflow(Exception):
    """Resource cap exceeded (CLI exit code 2).

    ``partial`` holds whatever was computed before the cap was hit.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
