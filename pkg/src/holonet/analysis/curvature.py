import logging
from typing import Dict

from pydantic import BaseModel, ConfigDict, Field

from ..compiler.embedded_network import EmbeddedNetwork
from ..errors import GroupSpecError, LatticeError
from ..group_core import GroupSpec

logger = logging.getLogger(__name__)


class Plaquette(BaseModel):
    """Elementary triangle of cell (row, col); `upper` is the half above the diagonal."""

    model_config = ConfigDict(frozen=True)

    row: int = Field(..., ge=0)
    col: int = Field(..., ge=0)
    upper: bool = False

    @property
    def sort_key(self):
        return (self.row, self.col, self.upper)


def _require_lattice(net) -> EmbeddedNetwork:
    if not isinstance(net, EmbeddedNetwork):
        raise LatticeError(f"plaquettes need an embedded lattice, got {type(net).__name__}")
    return net


def plaquette_quanta(net: EmbeddedNetwork) -> Dict[Plaquette, int]:
    """
    Net quanta around every elementary triangle, counter-clockwise.

    With s = +1 for an edge pointing along +axis and -1 otherwise:
    lower(r, c) = s_h(r, c) + s_v(r, c+1) - s_d(r, c) and
    upper(r, c) = s_d(r, c) - s_h(r+1, c) - s_v(r, c).
    Keys are ordered by (row, col, upper).
    """
    net = _require_lattice(net)
    rows, cols = net.spec.rows, net.spec.cols
    if rows < 2 or cols < 2:
        return {}
    h = net.axis_signs("horizontal")
    v = net.axis_signs("vertical")
    d = net.axis_signs("diagonal")
    lower = h[:-1, :] + v[:, 1:] - d
    upper = d - h[1:, :] - v[:, :-1]

    quanta: Dict[Plaquette, int] = {}
    for r in range(rows - 1):
        for c in range(cols - 1):
            quanta[Plaquette(row=r, col=c, upper=False)] = int(lower[r, c])
            quanta[Plaquette(row=r, col=c, upper=True)] = int(upper[r, c])
    return quanta


def plaquette_curvature(net: EmbeddedNetwork, spec: GroupSpec) -> Dict[Plaquette, float]:
    """
    Discrete curvature per triangle: eps' times its boundary quanta over its area a^2 / 2.

    Raises:
        GroupSpecError: If the group is not U(1)
        LatticeError: If `net` is not an embedded lattice
    """
    if spec.dim != 1 or spec.d != 1:
        raise GroupSpecError(f"curvature is defined for U(1) lattices, got dim={spec.dim}, d={spec.d}")
    net = _require_lattice(net)
    quantum = float(spec.generators[0][0, 0].imag)
    area = net.spec.triangle_area
    curvature = {plaquette: quantum * q / area for plaquette, q in plaquette_quanta(net).items()}
    logger.debug("computed curvature of %s triangles", len(curvature))
    return curvature
