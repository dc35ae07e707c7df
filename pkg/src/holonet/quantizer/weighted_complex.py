import logging
import math
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

logger = logging.getLogger(__name__)


class WeightedEdge(BaseModel):
    """An edge of the 1-skeleton with a signed, nonzero length."""

    model_config = ConfigDict(frozen=True)

    u: int = Field(..., ge=0)
    v: int = Field(..., ge=0)
    length: float = Field(..., description="Signed length l; negative for timelike/split-signature edges")

    @field_validator("length")
    @classmethod
    def validate_length(cls, v: float) -> float:
        if not math.isfinite(v) or v == 0:
            raise ValueError(f"edge length must be finite and nonzero, got {v}")
        return v

    @model_validator(mode="after")
    def validate_endpoints(self):
        if self.u == self.v:
            raise ValueError(f"self-loop at vertex {self.u}")
        return self


class WeightedComplex(BaseModel):
    """Simplicial 1-skeleton whose edges carry real lengths."""

    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(..., ge=0)
    edges: List[WeightedEdge] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_edges(self):
        seen = set()
        for edge in self.edges:
            if edge.u >= self.vertex_count or edge.v >= self.vertex_count:
                raise ValueError(f"edge ({edge.u}, {edge.v}) references a vertex outside 0..{self.vertex_count - 1}")
            pair = (min(edge.u, edge.v), max(edge.u, edge.v))
            if pair in seen:
                raise ValueError(f"duplicate edge on pair {pair}")
            seen.add(pair)
        return self

    @property
    def has_negative_lengths(self) -> bool:
        return any(edge.length < 0 for edge in self.edges)


class QuantizeRule(BaseModel):
    """
    How lengths become unit-edge counts.

    `epsilon` is the observability scale; the count is floor(|l| / 2 epsilon)
    under the default rule. The unit length defaults to 2 epsilon so that the
    reconstructed length m * unit is within 2 epsilon of |l|.
    """

    model_config = ConfigDict(frozen=True)

    epsilon: float = Field(..., gt=0, description="Scale below which length changes are unobservable")
    unit_length: Optional[float] = Field(None, gt=0, description="Length of one unit edge, default 2*epsilon")
    count_rule: Literal["floor", "round"] = Field("floor", description="How |l| / 2 epsilon becomes a count")
    zero_policy: Literal["clamp", "error"] = Field("clamp", description="What to do when the count is 0")

    @field_validator("epsilon", "unit_length")
    @classmethod
    def validate_finite(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and not math.isfinite(v):
            raise ValueError(f"value must be finite, got {v}")
        return v

    @model_validator(mode="after")
    def default_unit_length(self):
        """Fill in unit_length = 2 * epsilon when not given."""
        if self.unit_length is None:
            object.__setattr__(self, "unit_length", 2.0 * self.epsilon)
        return self

    def raw_count(self, length: float) -> int:
        """Unit count before the zero policy is applied."""
        ratio = abs(length) / (2.0 * self.epsilon)
        if self.count_rule == "floor":
            return math.floor(ratio)
        return math.floor(ratio + 0.5)
