"""Group-valued parallel transport along paths of a network."""

import logging
from typing import Dict

import numpy as np

from ..errors import GroupSpecError, InvalidPathError
from ..group_core import GroupElement, GroupSpec
from .network import Network
from .path import Path, trace_path

logger = logging.getLogger(__name__)


def path_quanta(net: Network, path: Path) -> Dict[int, int]:
    """
    Net quanta per generator index: +1 for every forward traversal of a
    phase-carrying edge, -1 for every reverse one. Generators that never occur are
    omitted.
    """
    trace_path(net, path)
    quanta: Dict[int, int] = {}
    for step in path.steps:
        generator = net.edge(step.edge).kind.phase_generator
        if generator is not None:
            quanta[generator] = quanta.get(generator, 0) + (1 if step.forward else -1)
    return {i: q for i, q in sorted(quanta.items()) if q != 0}


def path_holonomy(net: Network, path: Path, spec: GroupSpec) -> GroupElement:
    """
    Holonomy accumulated along the path.

    Starting from the identity, each forward traversal of a generator-i edge
    right-multiplies by exp(eta_i), each reverse one by its inverse; distance edges
    contribute nothing. For dim=1 groups the result is evaluated from the integer
    quanta, so it carries no rounding drift.

    Raises:
        InvalidPathError: If the path is not valid in `net`
        GroupSpecError: If an edge uses a generator index >= d
    """
    trace_path(net, path)
    for generator in net.generators_used():
        if generator >= spec.d:
            raise GroupSpecError(f"network uses generator {generator} but the group has d={spec.d}")

    if spec.dim == 1:
        quanta = path_quanta(net, path)
        return GroupElement(value=np.exp(quanta.get(0, 0) * spec.generators[0]))

    forward = spec.exponentials()
    backward = [e.conj().T for e in forward]
    value = np.eye(spec.dim, dtype=complex)
    for step in path.steps:
        generator = net.edge(step.edge).kind.phase_generator
        if generator is not None:
            value = value @ (forward[generator] if step.forward else backward[generator])
    return GroupElement(value=value)


def loop_holonomy(net: Network, path: Path, spec: GroupSpec) -> GroupElement:
    """
    Holonomy around a closed path.

    For non-abelian groups the value depends on the base point only up to
    conjugation; its conjugacy class (and any U(1) value) does not.

    Raises:
        InvalidPathError: If the path does not end where it starts
    """
    visited = trace_path(net, path)
    if visited[-1] != path.start:
        raise InvalidPathError(f"loop starts at {path.start} but ends at {visited[-1]}")
    return path_holonomy(net, path, spec)


def wilson_loop(net: Network, path: Path, spec: GroupSpec) -> complex:
    """Normalised trace tr(H)/dim of the loop holonomy."""
    holonomy = loop_holonomy(net, path, spec)
    return complex(np.trace(holonomy.value) / spec.dim)
