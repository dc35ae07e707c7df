import logging

from ..network import CombinedKind, DistanceKind, Network, PhaseKind
from .embedded_network import EmbeddedNetwork
from .lattice_spec import LatticeSpec

logger = logging.getLogger(__name__)


def build_lattice(spec: LatticeSpec) -> EmbeddedNetwork:
    """
    Build the triangulated grid described by `spec`, unfrozen.

    Edges are added horizontal first, then vertical, then diagonal. In dual mode each
    lattice edge becomes a Distance(+1) edge plus a Phase(0) edge; in combined mode a
    single Combined(0) edge. Directed edges start out pointing along +axis, waiting
    for a direction assignment.
    """
    net = Network(mode=spec.mode, unit_length=spec.spacing, vertex_count=spec.vertex_count)
    embedded = EmbeddedNetwork(net, spec)
    for edge in embedded.lattice_edges():
        if spec.mode == "dual":
            net.add_edge(edge.tail, edge.head, DistanceKind(sign=1))
            net.add_edge(edge.tail, edge.head, PhaseKind(generator=0))
        else:
            net.add_edge(edge.tail, edge.head, CombinedKind(generator=0))
    logger.debug("built %sx%s %s lattice with %s edges", spec.rows, spec.cols, spec.mode, net.edge_count)
    return embedded
