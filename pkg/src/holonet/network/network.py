import logging
import math
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..errors import (
    DuplicateEdgeError,
    FrozenNetworkError,
    IllegalEdgeKindError,
    NetworkError,
    UnknownVertexError,
)
from .edge_kind import MODE_KINDS, NETWORK_MODES, CombinedKind, Edge, EdgeKind, NetworkMode

logger = logging.getLogger(__name__)


class Network:
    """
    Multigraph of typed unit edges.

    Vertices are dense ids 0..V-1. Every edge is stored as an `Edge` record whose
    (u, v) order is the forward direction of directed kinds. The network is mutable
    until `freeze()`. Edge ids are insertion indices and never change; the
    canonical (u, v, kind) order exists only in the serialized text.
    """

    def __init__(self, mode: NetworkMode = "dual", unit_length: float = 1.0, vertex_count: int = 0):
        if mode not in NETWORK_MODES:
            raise NetworkError(f"unknown network mode {mode!r}, expected one of {NETWORK_MODES}")
        if not (math.isfinite(unit_length) and unit_length > 0):
            raise NetworkError(f"unit length must be a positive real, got {unit_length}")
        if vertex_count < 0:
            raise NetworkError(f"vertex count must be non-negative, got {vertex_count}")

        self._mode: NetworkMode = mode
        self._unit_length = float(unit_length)
        self._vertex_count = vertex_count
        self._edges: List[Edge] = []
        self._pair_index: Dict[Tuple[int, int], List[int]] = {}
        self._frozen = False
        self._distance_graph: Optional[nx.Graph] = None

    @property
    def mode(self) -> NetworkMode:
        return self._mode

    @property
    def unit_length(self) -> float:
        return self._unit_length

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(self._edges)

    @property
    def frozen(self) -> bool:
        return self._frozen

    def __repr__(self) -> str:
        state = "frozen" if self._frozen else "open"
        return f"Network(mode={self._mode}, V={self._vertex_count}, E={len(self._edges)}, {state})"

    def _check_mutable(self) -> None:
        if self._frozen:
            raise FrozenNetworkError("network is frozen")

    def check_vertex(self, vertex: int) -> None:
        if not 0 <= vertex < self._vertex_count:
            raise UnknownVertexError(f"unknown vertex {vertex} (network has {self._vertex_count})")

    def add_vertex(self) -> int:
        self._check_mutable()
        self._vertex_count += 1
        self._distance_graph = None
        return self._vertex_count - 1

    def add_vertices(self, count: int) -> range:
        self._check_mutable()
        first = self._vertex_count
        self._vertex_count += count
        self._distance_graph = None
        return range(first, self._vertex_count)

    def _check_kind(self, kind: EdgeKind) -> None:
        if not isinstance(kind, MODE_KINDS[self._mode]):
            raise IllegalEdgeKindError(f"{kind.tag} edges are not allowed in {self._mode} networks")
        if isinstance(kind, CombinedKind) and kind.generator != 0:
            raise IllegalEdgeKindError("combined networks carry a single generator (index 0)")

    def add_edge(self, u: int, v: int, kind: EdgeKind) -> int:
        """
        Add an edge with (u, v) as its forward direction.

        Returns:
            int: The new edge id

        Raises:
            FrozenNetworkError: If the network is frozen
            UnknownVertexError: If u or v does not exist
            IllegalEdgeKindError: If the kind is not legal in this mode, or u == v
            DuplicateEdgeError: If the pair already holds an edge of the same kind
        """
        self._check_mutable()
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise IllegalEdgeKindError(f"self-loop at vertex {u}")
        self._check_kind(kind)

        edge = Edge(u=u, v=v, kind=kind)
        siblings = self._pair_index.get(edge.pair, [])
        if any(self._edges[e].kind.multiplicity_key == kind.multiplicity_key for e in siblings):
            raise DuplicateEdgeError(f"pair {edge.pair} already has a {kind.tag} edge of this type")

        eid = len(self._edges)
        self._edges.append(edge)
        self._pair_index.setdefault(edge.pair, []).append(eid)
        self._distance_graph = None
        return eid

    def reverse_edge(self, eid: int) -> None:
        """Flip the stored direction of a directed edge."""
        self._check_mutable()
        edge = self.edge(eid)
        if not edge.kind.directed:
            raise IllegalEdgeKindError(f"edge {eid} is undirected")
        self._edges[eid] = edge.reversed()

    def edge(self, eid: int) -> Edge:
        if not 0 <= eid < len(self._edges):
            raise NetworkError(f"unknown edge id {eid}")
        return self._edges[eid]

    def edges_between(self, u: int, v: int) -> List[int]:
        """Ids of every edge joining u and v, in either direction."""
        pair = (u, v) if u < v else (v, u)
        return list(self._pair_index.get(pair, []))

    def find_edge(self, u: int, v: int, multiplicity_key: Tuple) -> Optional[int]:
        """The edge on pair {u, v} with the given multiplicity key, if any."""
        for eid in self.edges_between(u, v):
            if self._edges[eid].kind.multiplicity_key == multiplicity_key:
                return eid
        return None

    def has_negative_edges(self) -> bool:
        return any(edge.kind.length_sign < 0 for edge in self._edges)

    def generators_used(self) -> List[int]:
        return sorted({e.kind.phase_generator for e in self._edges if e.kind.phase_generator is not None})

    def freeze(self) -> "Network":
        """Make the network immutable; edge ids are kept."""
        if self._frozen:
            return self
        self._frozen = True
        logger.debug("froze %r", self)
        return self

    def distance_graph(self) -> nx.Graph:
        """Simple graph of the length-carrying edges; phase edges are not traversable for distance."""
        if self._distance_graph is None:
            graph = nx.Graph()
            graph.add_nodes_from(range(self._vertex_count))
            graph.add_edges_from((e.u, e.v) for e in self._edges if e.kind.length_sign != 0)
            self._distance_graph = graph
        return self._distance_graph
