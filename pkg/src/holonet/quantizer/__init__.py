from .subdivide import EdgeReconstruction, ReconstructionReport, reconstruction_error, subdivide, unit_count
from .weighted_complex import QuantizeRule, WeightedComplex, WeightedEdge

__all__ = [
    "EdgeReconstruction",
    "QuantizeRule",
    "ReconstructionReport",
    "WeightedComplex",
    "WeightedEdge",
    "reconstruction_error",
    "subdivide",
    "unit_count",
]
