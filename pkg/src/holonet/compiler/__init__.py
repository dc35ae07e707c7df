from .build_lattice import build_lattice
from .directions import (
    apply_rate_plan,
    assign_axis_directions,
    compile_connection,
    edge_phases,
    forward_pattern,
)
from .embedded_network import EmbeddedNetwork, LatticeEdge
from .lattice_spec import AXES, Axis, LatticeMode, LatticeSpec, RatePlan

__all__ = [
    "AXES",
    "Axis",
    "EmbeddedNetwork",
    "LatticeEdge",
    "LatticeMode",
    "LatticeSpec",
    "RatePlan",
    "apply_rate_plan",
    "assign_axis_directions",
    "build_lattice",
    "compile_connection",
    "edge_phases",
    "forward_pattern",
]
