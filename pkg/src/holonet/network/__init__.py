from .distance import all_pairs_geodesic, geodesic_distance, path_length
from .edge_kind import (
    NETWORK_MODES,
    CombinedKind,
    DistanceKind,
    Edge,
    EdgeKind,
    NetworkMode,
    PhaseKind,
    SignedPhaseKind,
)
from .holonomy import loop_holonomy, path_holonomy, path_quanta, wilson_loop
from .network import Network
from .path import Path, PathStep, is_closed, path_end, path_from_vertices, reverse_path, trace_path

__all__ = [
    "NETWORK_MODES",
    "CombinedKind",
    "DistanceKind",
    "Edge",
    "EdgeKind",
    "Network",
    "NetworkMode",
    "Path",
    "PathStep",
    "PhaseKind",
    "SignedPhaseKind",
    "all_pairs_geodesic",
    "geodesic_distance",
    "is_closed",
    "loop_holonomy",
    "path_end",
    "path_from_vertices",
    "path_holonomy",
    "path_length",
    "path_quanta",
    "reverse_path",
    "trace_path",
    "wilson_loop",
]
