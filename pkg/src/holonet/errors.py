"""Exception hierarchy shared by every holonet component."""

from typing import Optional


class HolonetError(ValueError):
    """Base class for all holonet failures."""


class GroupSpecError(HolonetError):
    """Generator set violates the group description rules."""


class DimensionMismatchError(HolonetError):
    """Two group elements (or an element and a spec) have different matrix dimensions."""


class EnumerationTooLargeError(HolonetError):
    """The requested word enumeration exceeds the word cap."""


class NetworkError(HolonetError):
    """Invalid network construction or query."""


class FrozenNetworkError(NetworkError):
    """Mutation attempted on a frozen network."""


class DuplicateEdgeError(NetworkError):
    """Edge would break the one-edge-per-kind-per-pair rule."""


class IllegalEdgeKindError(NetworkError):
    """Edge kind is not allowed in the network's mode."""


class UnknownVertexError(NetworkError):
    """Vertex id outside 0..V-1."""


class InvalidPathError(NetworkError):
    """Path steps are not incident, reference missing edges, or are not closed when required."""


class NegativeEdgeError(NetworkError):
    """Geodesics requested on a network with negative distance edges."""


class QuantizationError(HolonetError):
    """A weighted edge cannot be subdivided under the current rule."""


class LatticeError(HolonetError):
    """Lattice operation on a network that is not a lattice, or on an absent axis."""


class CoarseLatticeError(LatticeError):
    """A lattice edge needs more than one phase quantum."""


class ExprSyntaxError(HolonetError):
    """Malformed connection expression."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownIdentifierError(ExprSyntaxError):
    """Identifier other than x, y, sin, cos or exp."""


class EvaluationError(HolonetError):
    """Expression evaluation failed (division by zero or a non-finite result)."""


class FileFormatError(HolonetError):
    """Malformed network, complex, group or loop file."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class VerificationError(HolonetError):
    """A discrete loop phase differs from its continuum target by more than the tolerance."""
