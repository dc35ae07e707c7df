"""
Direction assignment on lattices.

Both entry points run one-dimensional error diffusion along every axis-aligned
line: `assign_axis_directions` realises a constant forward fraction, while
`compile_connection` quantises the per-edge phases of a target connection.
"""

import logging
from fractions import Fraction
from typing import Dict, List

from ..analysis.connection_field import ConnectionField
from ..analysis.line_integral import segment_integral
from ..errors import CoarseLatticeError, FrozenNetworkError, GroupSpecError, LatticeError
from ..group_core import GroupSpec
from ..utils.parallel import ordered_map
from ..utils.tolerances import COARSENESS_SLACK
from .embedded_network import EmbeddedNetwork, LatticeEdge
from .lattice_spec import AXES, Axis, RatePlan

logger = logging.getLogger(__name__)


def forward_pattern(length: int, fraction: float) -> List[bool]:
    """
    Forward bits for `length` consecutive edges at forward fraction f.

    For f >= 1/2 an accumulator gains f per edge; the edge is forward when it reaches
    1, which then is subtracted. f < 1/2 is the edge-wise reversal of the 1 - f
    pattern. Every prefix of k edges therefore has floor(kf) or ceil(kf) forward
    edges. Arithmetic is exact on the rational nearest to f.
    """
    if not 0.0 <= fraction <= 1.0:
        raise LatticeError(f"forward fraction must lie in [0, 1], got {fraction}")
    if fraction < 0.5:
        return [not bit for bit in forward_pattern(length, 1.0 - fraction)]

    step = Fraction(fraction).limit_denominator(10**9)
    acc = Fraction(0)
    bits = []
    for _ in range(length):
        acc += step
        if acc >= 1:
            acc -= 1
            bits.append(True)
        else:
            bits.append(False)
    return bits


def _check_open(net: EmbeddedNetwork) -> None:
    if net.frozen:
        raise FrozenNetworkError("directions can only be assigned before the lattice is frozen")


def assign_axis_directions(net: EmbeddedNetwork, axis: Axis, fraction: float) -> None:
    """
    Point a fraction f of the edges on every `axis` line along +axis.

    f = 0.5 alternates starting with a reversed edge, f = 1 is all forward, f = 0 all
    reversed.

    Raises:
        FrozenNetworkError: If the lattice is frozen
        LatticeError: If the lattice has no edges on `axis`, or f is outside [0, 1]
    """
    _check_open(net)
    if axis not in AXES:
        raise LatticeError(f"unknown axis {axis!r}")
    if not net.has_axis(axis):
        raise LatticeError(f"a {net.spec.rows}x{net.spec.cols} lattice has no {axis} edges")

    for line in net.lines(axis):
        for edge, forward in zip(line, forward_pattern(len(line), fraction)):
            net.set_forward(edge, forward)
    logger.debug("assigned %s directions at fraction %s", axis, fraction)


def apply_rate_plan(net: EmbeddedNetwork, plan: RatePlan) -> None:
    """assign_axis_directions for every axis the lattice has."""
    for axis in AXES:
        if net.has_axis(axis):
            assign_axis_directions(net, axis, plan.fraction(axis))


def _edge_phase(net: EmbeddedNetwork, conn: ConnectionField, edge: LatticeEdge, tol: float) -> float:
    return segment_integral(conn, net.spec.position(edge.tail), net.spec.position(edge.head), tol)


def edge_phases(net: EmbeddedNetwork, conn: ConnectionField, tol: float = 1e-10) -> Dict[LatticeEdge, float]:
    """Target phase of every lattice edge: the integral of A from tail to head."""
    edges = net.lattice_edges()
    phases = ordered_map(lambda edge: _edge_phase(net, conn, edge, tol), edges)
    return dict(zip(edges, phases))


def compile_connection(net: EmbeddedNetwork, conn: ConnectionField, spec: GroupSpec, tol: float = 1e-10) -> None:
    """
    Choose every edge direction so that lattice holonomy follows the connection `conn`.

    With quantum q = Im(eta_0), each lattice edge wants t = theta / q quanta where
    theta is the integral of A along it. Walking each line in +axis order, an edge
    points forward exactly when the running target (this edge included) is at least
    the running net quanta so far. That keeps |net quanta - sum t| <= 1 on every
    prefix of every line.

    Raises:
        GroupSpecError: If the group is not U(1)
        FrozenNetworkError: If the lattice is frozen
        CoarseLatticeError: If some edge needs more than one quantum; nothing is
            changed in that case
        EvaluationError: If A is undefined somewhere on the lattice
    """
    if spec.dim != 1 or spec.d != 1:
        raise GroupSpecError(f"connections compile only onto U(1) lattices, got dim={spec.dim}, d={spec.d}")
    _check_open(net)
    quantum = float(spec.generators[0][0, 0].imag)

    phases = edge_phases(net, conn, tol)
    limit = abs(quantum) * (1.0 + COARSENESS_SLACK)
    for edge, theta in phases.items():
        if abs(theta) > limit:
            raise CoarseLatticeError(
                f"{edge.axis} edge {edge.tail}->{edge.head} needs phase {theta:.6g} but one quantum is "
                f"{abs(quantum):.6g}; refine the spacing or raise eps'"
            )

    for axis in AXES:
        for line in net.lines(axis):
            target = 0.0
            quanta = 0
            for edge in line:
                target += phases[edge] / quantum
                forward = target - quanta >= 0
                quanta += 1 if forward else -1
                net.set_forward(edge, forward)
    logger.info("compiled connection (%s, %s) onto %r", conn.ax_text, conn.ay_text, net)
