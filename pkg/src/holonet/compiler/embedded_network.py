import logging
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..errors import FrozenNetworkError, LatticeError
from ..network import Network, Path, PathStep, trace_path
from .lattice_spec import AXES, Axis, LatticeSpec

logger = logging.getLogger(__name__)

Point = Tuple[float, float]


class LatticeEdge(NamedTuple):
    """One lattice edge; tail -> head is the +axis direction."""

    axis: Axis
    row: int
    col: int
    tail: int
    head: int


class EmbeddedNetwork:
    """
    A lattice network together with its planar embedding.

    Vertex r * cols + c sits at (c * a, r * a). Every lattice edge carries exactly
    one phase quantum edge (Phase(0) in dual mode, Combined(0) in combined mode);
    whether that edge points along +axis is the edge's direction bit.
    """

    def __init__(self, network: Network, spec: LatticeSpec):
        if network.vertex_count != spec.vertex_count:
            raise LatticeError(f"network has {network.vertex_count} vertices, a {spec.rows}x{spec.cols} lattice needs {spec.vertex_count}")
        if network.mode != spec.mode:
            raise LatticeError(f"network mode {network.mode} does not match lattice mode {spec.mode}")
        self._network = network
        self._spec = spec
        self._quantum_key = ("phase", 0) if spec.mode == "dual" else ("comb", 0)

    @property
    def network(self) -> Network:
        return self._network

    @property
    def spec(self) -> LatticeSpec:
        return self._spec

    @property
    def frozen(self) -> bool:
        return self._network.frozen

    def __repr__(self) -> str:
        return f"EmbeddedNetwork({self._spec.rows}x{self._spec.cols}, a={self._spec.spacing}, {self._network!r})"

    def freeze(self) -> "EmbeddedNetwork":
        self._network.freeze()
        return self

    def position(self, vertex: int) -> Point:
        self._network.check_vertex(vertex)
        return self._spec.position(vertex)

    def coordinates(self) -> Dict[int, Point]:
        return {v: self._spec.position(v) for v in range(self._spec.vertex_count)}

    # Lattice geometry

    def has_axis(self, axis: Axis) -> bool:
        return self._spec.edge_count(axis) > 0

    def lines(self, axis: Axis) -> List[List[LatticeEdge]]:
        """
        Axis-aligned lines, each listed in +axis order.

        Horizontal lines are rows (bottom first), vertical lines are columns (left
        first), diagonal lines follow constant col - row walking up-right, ordered by
        col - row.
        """
        rows, cols, vertex = self._spec.rows, self._spec.cols, self._spec.vertex
        if axis == "horizontal":
            return [
                [LatticeEdge(axis, r, c, vertex(r, c), vertex(r, c + 1)) for c in range(cols - 1)]
                for r in range(rows)
                if cols > 1
            ]
        if axis == "vertical":
            return [
                [LatticeEdge(axis, r, c, vertex(r, c), vertex(r + 1, c)) for r in range(rows - 1)]
                for c in range(cols)
                if rows > 1
            ]
        lines = []
        for offset in range(-(rows - 2), cols - 1):
            r, c = (0, offset) if offset >= 0 else (-offset, 0)
            line = []
            while r + 1 < rows and c + 1 < cols:
                line.append(LatticeEdge(axis, r, c, vertex(r, c), vertex(r + 1, c + 1)))
                r, c = r + 1, c + 1
            if line:
                lines.append(line)
        return lines

    def lattice_edges(self, axis: Optional[Axis] = None) -> List[LatticeEdge]:
        """Lattice edges of one axis (or all, horizontal then vertical then diagonal) in (row, col) order."""
        axes = AXES if axis is None else (axis,)
        out = []
        for ax in axes:
            out.extend(sorted((e for line in self.lines(ax) for e in line), key=lambda e: (e.row, e.col)))
        return out

    # Direction bits

    def phase_edge(self, a: int, b: int) -> int:
        """Id of the quantum-carrying edge between two adjacent vertices."""
        eid = self._network.find_edge(a, b, self._quantum_key)
        if eid is None:
            raise LatticeError(f"no phase edge joins {a} and {b}")
        return eid

    def is_forward(self, edge: LatticeEdge) -> bool:
        return self._network.edge(self.phase_edge(edge.tail, edge.head)).u == edge.tail

    def set_forward(self, edge: LatticeEdge, forward: bool) -> None:
        if self._network.frozen:
            raise FrozenNetworkError("cannot assign directions on a frozen lattice")
        if self.is_forward(edge) != forward:
            self._network.reverse_edge(self.phase_edge(edge.tail, edge.head))

    def axis_signs(self, axis: Axis) -> np.ndarray:
        """
        +1 / -1 per lattice edge of the axis, indexed [row, col] of the edge's tail.

        Shapes: horizontal (R, C-1), vertical (R-1, C), diagonal (R-1, C-1).
        """
        rows, cols = self._spec.rows, self._spec.cols
        shape = {"horizontal": (rows, cols - 1), "vertical": (rows - 1, cols), "diagonal": (rows - 1, cols - 1)}[axis]
        signs = np.zeros(shape, dtype=np.int64)
        for line in self.lines(axis):
            for edge in line:
                signs[edge.row, edge.col] = 1 if self.is_forward(edge) else -1
        return signs

    # Loops

    def path_through(self, vertices: Sequence[int]) -> Path:
        """Path over the phase edges joining consecutive vertices."""
        steps = []
        for a, b in zip(vertices, vertices[1:]):
            eid = self.phase_edge(a, b)
            steps.append(PathStep(edge=eid, forward=self._network.edge(eid).u == a))
        return Path(start=vertices[0], steps=tuple(steps))

    def rectangle_vertices(self, row: int, col: int, height: int, width: int) -> List[int]:
        """Closed counter-clockwise vertex walk around a rectangle, starting at its lower-left corner."""
        if height < 1 or width < 1:
            raise LatticeError(f"rectangle sides must be positive, got {height}x{width}")
        if row < 0 or col < 0 or row + height >= self._spec.rows or col + width >= self._spec.cols:
            raise LatticeError(f"rectangle at ({row}, {col}) of size {height}x{width} leaves the lattice")
        vertex = self._spec.vertex
        walk = [vertex(row, c) for c in range(col, col + width)]
        walk += [vertex(r, col + width) for r in range(row, row + height)]
        walk += [vertex(row + height, c) for c in range(col + width, col, -1)]
        walk += [vertex(r, col) for r in range(row + height, row - 1, -1)]
        return walk

    def rectangle_loop(self, row: int, col: int, height: int, width: int) -> Path:
        return self.path_through(self.rectangle_vertices(row, col, height, width))

    def triangle_vertices(self, row: int, col: int, upper: bool) -> List[int]:
        """
        Closed counter-clockwise walk around an elementary triangle of cell (row, col).

        The lower triangle is (r,c) -> (r,c+1) -> (r+1,c+1); the upper one is
        (r,c) -> (r+1,c+1) -> (r+1,c).
        """
        if not (0 <= row < self._spec.rows - 1 and 0 <= col < self._spec.cols - 1):
            raise LatticeError(f"cell ({row}, {col}) is outside the lattice")
        vertex = self._spec.vertex
        origin, diagonal = vertex(row, col), vertex(row + 1, col + 1)
        if upper:
            return [origin, diagonal, vertex(row + 1, col), origin]
        return [origin, vertex(row, col + 1), diagonal, origin]

    def plaquette_loop(self, row: int, col: int, upper: bool) -> Path:
        return self.path_through(self.triangle_vertices(row, col, upper))

    def polygon(self, path: Path) -> List[Point]:
        """Embedded positions of the vertices a path visits."""
        return [self._spec.position(v) for v in trace_path(self._network, path)]

    @classmethod
    def from_network(cls, network: Network, coordinates: Mapping[int, Point]) -> "EmbeddedNetwork":
        """
        Recover the lattice structure of a network from its vertex coordinates.

        The column count is the number of leading vertices on the first row, the
        spacing is read off vertex 1 (or vertex C when there is a single column), and
        every coordinate and lattice edge must then match exactly.

        Raises:
            LatticeError: If the network is not a lattice built by build_lattice
        """
        if network.mode not in ("dual", "combined"):
            raise LatticeError(f"{network.mode} networks are never lattices")
        total = network.vertex_count
        if total == 0 or len(coordinates) != total or any(v not in coordinates for v in range(total)):
            raise LatticeError("lattice recovery needs a coordinate for every vertex")

        y0 = coordinates[0][1]
        cols = 1
        while cols < total and coordinates[cols][1] == y0:
            cols += 1
        if total % cols:
            raise LatticeError(f"{total} vertices do not form rows of {cols}")
        rows = total // cols
        if cols > 1:
            spacing = coordinates[1][0]
        elif rows > 1:
            spacing = coordinates[cols][1]
        else:
            spacing = network.unit_length

        try:
            spec = LatticeSpec(rows=rows, cols=cols, spacing=spacing, mode=network.mode)
        except ValueError as e:
            raise LatticeError(f"coordinates do not describe a lattice: {e}") from e
        for v in range(total):
            if tuple(coordinates[v]) != spec.position(v):
                raise LatticeError(f"vertex {v} at {tuple(coordinates[v])} is off the {rows}x{cols} grid")

        embedded = cls(network, spec)
        per_edge = 2 if spec.mode == "dual" else 1
        if network.edge_count != per_edge * spec.lattice_edge_count:
            raise LatticeError(f"{network.edge_count} edges, a {rows}x{cols} {spec.mode} lattice has {per_edge * spec.lattice_edge_count}")
        for edge in embedded.lattice_edges():
            embedded.phase_edge(edge.tail, edge.head)
            if spec.mode == "dual" and network.find_edge(edge.tail, edge.head, ("dist",)) is None:
                raise LatticeError(f"no distance edge joins {edge.tail} and {edge.head}")
        logger.debug("recovered %r", embedded)
        return embedded
