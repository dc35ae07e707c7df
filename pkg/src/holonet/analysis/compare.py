"""Discrete loop phases against their continuum targets."""

import logging
import math
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..compiler.embedded_network import EmbeddedNetwork
from ..errors import GroupSpecError, InvalidPathError, NetworkError
from ..group_core import GroupSpec
from ..network import Path, is_closed, path_quanta
from .connection_field import ConnectionField
from .line_integral import line_integral, segment_integral

logger = logging.getLogger(__name__)

CSV_HEADER = ("loop_id", "discrete_phase", "continuum_phase", "circle_distance")


def wrap_phase(angle: float) -> float:
    """Representative of `angle` in (-pi, pi]."""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


class LoopComparison(BaseModel):
    """Discrete versus continuum phase of one closed loop."""

    model_config = ConfigDict(frozen=True)

    loop_id: str
    quanta: int
    discrete_phase: float
    continuum_phase: float
    circle_distance: float

    def csv_row(self) -> Tuple[str, str, str, str]:
        return (self.loop_id, repr(self.discrete_phase), repr(self.continuum_phase), repr(self.circle_distance))


def _u1_quantum(spec: GroupSpec) -> float:
    if spec.dim != 1 or spec.d != 1:
        raise GroupSpecError(f"loop phases are compared for U(1) groups, got dim={spec.dim}, d={spec.d}")
    return float(spec.generators[0][0, 0].imag)


def _comparison(loop_id: str, quanta: int, quantum: float, continuum: float) -> LoopComparison:
    discrete = quantum * quanta
    return LoopComparison(
        loop_id=loop_id,
        quanta=quanta,
        discrete_phase=discrete,
        continuum_phase=continuum,
        circle_distance=abs(wrap_phase(discrete - continuum)),
    )


def compare_loop(
    net: EmbeddedNetwork,
    loop: Path,
    conn: ConnectionField,
    spec: GroupSpec,
    tol: float = 1e-10,
    loop_id: str = "loop",
) -> LoopComparison:
    """
    Compare eps' times the loop's net quanta with the integral of A around its polygon.

    Raises:
        GroupSpecError: If the group is not U(1)
        NetworkError: If the lattice is not frozen
        InvalidPathError: If the loop is invalid or not closed
    """
    quantum = _u1_quantum(spec)
    if not net.frozen:
        raise NetworkError("loops are compared on frozen lattices only")
    if not is_closed(net.network, loop):
        raise InvalidPathError(f"loop {loop_id} does not return to vertex {loop.start}")

    quanta = path_quanta(net.network, loop).get(0, 0)
    continuum = line_integral(conn, net.polygon(loop), tol) if len(loop) else 0.0
    return _comparison(loop_id, quanta, quantum, continuum)


class RectangleIndex:
    """
    Per-line prefix sums of edge quanta and edge phases.

    The boundary of any axis-aligned rectangle is two row segments and two column
    segments, so its quanta and its continuum phase both come from four prefix
    differences.
    """

    def __init__(self, net: EmbeddedNetwork, conn: ConnectionField, tol: float = 1e-10):
        spec = net.spec
        self._rows, self._cols = spec.rows, spec.cols
        zero_col = np.zeros((spec.rows, 1), dtype=np.int64)
        zero_row = np.zeros((1, spec.cols), dtype=np.int64)
        self._row_quanta = np.concatenate([zero_col, np.cumsum(net.axis_signs("horizontal"), axis=1)], axis=1)
        self._col_quanta = np.concatenate([zero_row, np.cumsum(net.axis_signs("vertical"), axis=0)], axis=0)

        row_phase = np.zeros((spec.rows, spec.cols))
        for line in net.lines("horizontal"):
            for edge in line:
                row_phase[edge.row, edge.col + 1] = segment_integral(
                    conn, spec.position(edge.tail), spec.position(edge.head), tol
                )
        col_phase = np.zeros((spec.rows, spec.cols))
        for line in net.lines("vertical"):
            for edge in line:
                col_phase[edge.row + 1, edge.col] = segment_integral(
                    conn, spec.position(edge.tail), spec.position(edge.head), tol
                )
        self._row_phase = np.cumsum(row_phase, axis=1)
        self._col_phase = np.cumsum(col_phase, axis=0)

    @staticmethod
    def _boundary(rows_prefix, cols_prefix, row: int, col: int, height: int, width: int):
        top, right = row + height, col + width
        return (
            (rows_prefix[row, right] - rows_prefix[row, col])
            + (cols_prefix[top, right] - cols_prefix[row, right])
            - (rows_prefix[top, right] - rows_prefix[top, col])
            - (cols_prefix[top, col] - cols_prefix[row, col])
        )

    def quanta(self, row: int, col: int, height: int, width: int) -> int:
        return int(self._boundary(self._row_quanta, self._col_quanta, row, col, height, width))

    def phase(self, row: int, col: int, height: int, width: int) -> float:
        return float(self._boundary(self._row_phase, self._col_phase, row, col, height, width))


def rectangle_quanta(net: EmbeddedNetwork, row: int, col: int, height: int, width: int) -> int:
    """Net quanta counter-clockwise around a rectangle, from the edge direction bits alone."""
    net.rectangle_vertices(row, col, height, width)
    return RectangleIndex(net, ConnectionField()).quanta(row, col, height, width)


def compare_rectangles(
    net: EmbeddedNetwork,
    conn: ConnectionField,
    spec: GroupSpec,
    tol: float = 1e-10,
    min_area: float = 0.0,
    even_sides: bool = False,
) -> List[LoopComparison]:
    """
    compare_loop for every axis-aligned rectangle of the lattice.

    Rectangles are ordered by (row, col, height, width) and named
    rect_r<row>_c<col>_h<height>_w<width>. `min_area` (in squared length units)
    and `even_sides` restrict the selection.
    """
    quantum = _u1_quantum(spec)
    if not net.frozen:
        raise NetworkError("loops are compared on frozen lattices only")

    rows, cols, a = net.spec.rows, net.spec.cols, net.spec.spacing
    index = RectangleIndex(net, conn, tol / 4.0)
    results = []
    for row in range(rows - 1):
        for col in range(cols - 1):
            for height in range(1, rows - row):
                for width in range(1, cols - col):
                    if even_sides and (height % 2 or width % 2):
                        continue
                    if height * width * a * a < min_area:
                        continue
                    results.append(
                        _comparison(
                            f"rect_r{row}_c{col}_h{height}_w{width}",
                            index.quanta(row, col, height, width),
                            quantum,
                            index.phase(row, col, height, width),
                        )
                    )
    logger.info("compared %s rectangles", len(results))
    return results
