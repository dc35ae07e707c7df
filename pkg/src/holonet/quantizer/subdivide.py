import logging
from typing import List

from pydantic import BaseModel, Field

from ..errors import QuantizationError
from ..network import CombinedKind, DistanceKind, Network, NetworkMode, SignedPhaseKind
from .weighted_complex import QuantizeRule, WeightedComplex, WeightedEdge

logger = logging.getLogger(__name__)


def unit_count(edge: WeightedEdge, rule: QuantizeRule, index: int = 0) -> int:
    """
    Number of unit edges replacing `edge`, after the zero-count policy.

    Raises:
        QuantizationError: If the count is 0 and the policy is `error`
    """
    m = rule.raw_count(edge.length)
    if m > 0:
        return m
    if rule.zero_policy == "error":
        raise QuantizationError(
            f"edge {index} ({edge.u}, {edge.v}) of length {edge.length} is shorter than 2*epsilon={2 * rule.epsilon}"
        )
    logger.warning(
        "edge %s (%s, %s) of length %s quantizes to 0 units, clamping to 1",
        index,
        edge.u,
        edge.v,
        edge.length,
    )
    return 1


def subdivide(complex_: WeightedComplex, rule: QuantizeRule, mode: NetworkMode = "dual") -> Network:
    """
    Replace every weighted edge (u, v, l) by a chain of m unit edges.

    Original vertex ids are kept; the m-1 intermediate vertices of each chain are
    allocated in edge order, then in chain order. Dual networks get Distance(sign l)
    edges, combined networks Combined(0) edges and split networks
    SignedPhase(0, sign l) edges; directed chains point from u to v.

    Returns:
        Network: The frozen unit-edge network

    Raises:
        QuantizationError: On a negative length in a combined network, or a zero count under the `error` policy
    """
    if mode == "combined" and complex_.has_negative_lengths:
        raise QuantizationError("combined networks cannot carry negative lengths")

    counts = [unit_count(edge, rule, index) for index, edge in enumerate(complex_.edges)]

    net = Network(mode=mode, unit_length=rule.unit_length, vertex_count=complex_.vertex_count)
    for edge, m in zip(complex_.edges, counts):
        sign = 1 if edge.length > 0 else -1
        if mode == "dual":
            kind = DistanceKind(sign=sign)
        elif mode == "combined":
            kind = CombinedKind(generator=0)
        else:
            kind = SignedPhaseKind(generator=0, sign=sign)

        chain = [edge.u, *net.add_vertices(m - 1), edge.v]
        for a, b in zip(chain, chain[1:]):
            net.add_edge(a, b, kind)

    logger.debug("subdivided %s edges into %s unit edges", len(complex_.edges), net.edge_count)
    return net.freeze()


class EdgeReconstruction(BaseModel):
    """Per-edge reconstruction: |m * unit - |l||."""

    index: int
    length: float
    count: int
    error: float


class ReconstructionReport(BaseModel):
    """How well unit counts reproduce the original lengths."""

    edges: List[EdgeReconstruction] = Field(default_factory=list)
    max_error: float = 0.0
    mean_error: float = 0.0

    def summary(self) -> str:
        return f"edges={len(self.edges)} max_error={self.max_error!r} mean_error={self.mean_error!r}"


def reconstruction_error(complex_: WeightedComplex, rule: QuantizeRule) -> ReconstructionReport:
    """
    Absolute error of every edge's reconstructed length.

    With the default unit 2 epsilon and the floor rule every error is below 2 epsilon.
    Edges whose count is 0 are reported with the clamped count of 1 under the
    `clamp` policy and with the raw count of 0 under `error`; nothing is raised.
    """
    rows = []
    for index, edge in enumerate(complex_.edges):
        m = rule.raw_count(edge.length)
        if m == 0 and rule.zero_policy == "clamp":
            m = 1
        rows.append(
            EdgeReconstruction(index=index, length=edge.length, count=m, error=abs(m * rule.unit_length - abs(edge.length)))
        )
    if not rows:
        return ReconstructionReport()
    errors = [row.error for row in rows]
    return ReconstructionReport(edges=rows, max_error=max(errors), mean_error=sum(errors) / len(errors))
