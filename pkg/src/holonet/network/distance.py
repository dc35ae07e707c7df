"""Signed path lengths and breadth-first geodesics."""

from typing import Optional

import networkx as nx
import numpy as np

from ..errors import NegativeEdgeError
from .network import Network
from .path import Path, trace_path


def path_length(net: Network, path: Path) -> float:
    """unit_length * (positive-unit steps - negative-unit steps); phase edges are lengthless."""
    trace_path(net, path)
    units = sum(net.edge(step.edge).kind.length_sign for step in path.steps)
    return net.unit_length * units


def _check_geodesic_network(net: Network) -> None:
    if net.has_negative_edges():
        raise NegativeEdgeError("geodesics are undefined on networks with negative distance edges")


def geodesic_distance(net: Network, u: int, v: int) -> Optional[float]:
    """
    Fewest length-carrying edges between u and v, times the unit length.

    Returns:
        The distance, or None when v is unreachable from u

    Raises:
        UnknownVertexError: If u or v does not exist
        NegativeEdgeError: If the network has negative distance edges
    """
    net.check_vertex(u)
    net.check_vertex(v)
    _check_geodesic_network(net)
    if u == v:
        return 0.0
    try:
        hops = nx.shortest_path_length(net.distance_graph(), u, v)
    except nx.NetworkXNoPath:
        return None
    return hops * net.unit_length


def all_pairs_geodesic(net: Network) -> np.ndarray:
    """V x V matrix of geodesic distances, inf where unreachable."""
    _check_geodesic_network(net)
    distances = np.full((net.vertex_count, net.vertex_count), np.inf)
    for source, lengths in nx.all_pairs_shortest_path_length(net.distance_graph()):
        for target, hops in lengths.items():
            distances[source, target] = hops * net.unit_length
    return distances
