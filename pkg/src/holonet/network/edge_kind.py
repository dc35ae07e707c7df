from typing import Annotated, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

NetworkMode = Literal["dual", "combined", "split"]

NETWORK_MODES: Tuple[str, ...] = ("dual", "combined", "split")


class _EdgeKindBase(BaseModel):
    model_config = ConfigDict(frozen=True)

    @property
    def directed(self) -> bool:
        return True

    @property
    def phase_generator(self) -> Optional[int]:
        """Generator index of the quantum this edge carries, None for kinds without one."""
        return None

    @property
    def length_sign(self) -> int:
        """Units of length contributed per traversal: +1, -1 or 0."""
        return 0

    @property
    def multiplicity_key(self) -> Tuple:
        """Two edges on one vertex pair may not share this key."""
        raise NotImplementedError

    @property
    def sort_key(self) -> Tuple:
        raise NotImplementedError


class PhaseKind(_EdgeKindBase):
    """Lengthless directed edge carrying one quantum exp(eta_i)."""

    tag: Literal["phase"] = "phase"
    generator: int = Field(..., ge=0)

    @property
    def phase_generator(self) -> Optional[int]:
        return self.generator

    @property
    def multiplicity_key(self) -> Tuple:
        return ("phase", self.generator)

    @property
    def sort_key(self) -> Tuple:
        return ("phase", self.generator, 0)


class DistanceKind(_EdgeKindBase):
    """Undirected unit of signed length."""

    tag: Literal["dist"] = "dist"
    sign: Literal[1, -1] = 1

    @property
    def directed(self) -> bool:
        return False

    @property
    def length_sign(self) -> int:
        return self.sign

    @property
    def multiplicity_key(self) -> Tuple:
        return ("dist",)

    @property
    def sort_key(self) -> Tuple:
        return ("dist", 0, self.sign)


class CombinedKind(_EdgeKindBase):
    """Directed edge carrying one positive unit of length and one quantum of generator i."""

    tag: Literal["comb"] = "comb"
    generator: int = Field(0, ge=0)

    @property
    def phase_generator(self) -> Optional[int]:
        return self.generator

    @property
    def length_sign(self) -> int:
        return 1

    @property
    def multiplicity_key(self) -> Tuple:
        return ("comb", self.generator)

    @property
    def sort_key(self) -> Tuple:
        return ("comb", self.generator, 0)


class SignedPhaseKind(_EdgeKindBase):
    """Directed edge carrying a quantum of generator i and one unit of length with the given sign."""

    tag: Literal["sphase"] = "sphase"
    generator: int = Field(0, ge=0)
    sign: Literal[1, -1] = 1

    @property
    def phase_generator(self) -> Optional[int]:
        return self.generator

    @property
    def length_sign(self) -> int:
        return self.sign

    @property
    def multiplicity_key(self) -> Tuple:
        return ("sphase", self.generator)

    @property
    def sort_key(self) -> Tuple:
        return ("sphase", self.generator, self.sign)


EdgeKind = Annotated[
    Union[PhaseKind, DistanceKind, CombinedKind, SignedPhaseKind],
    Field(discriminator="tag"),
]

MODE_KINDS = {
    "dual": (PhaseKind, DistanceKind),
    "combined": (CombinedKind,),
    "split": (SignedPhaseKind,),
}


class Edge(BaseModel):
    """An edge record; for directed kinds (u, v) is the forward direction."""

    model_config = ConfigDict(frozen=True)

    u: int = Field(..., ge=0)
    v: int = Field(..., ge=0)
    kind: EdgeKind

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    @property
    def sort_key(self) -> Tuple:
        return (self.u, self.v) + self.kind.sort_key

    def other(self, vertex: int) -> int:
        return self.v if vertex == self.u else self.u

    def reversed(self) -> "Edge":
        return Edge(u=self.v, v=self.u, kind=self.kind)
