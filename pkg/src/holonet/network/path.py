from typing import Iterable, List, Literal, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..errors import InvalidPathError
from .network import Network


class PathStep(BaseModel):
    """One edge traversal; `forward` means from the edge's u to its v."""

    model_config = ConfigDict(frozen=True)

    edge: int = Field(..., ge=0)
    forward: bool = True


class Path(BaseModel):
    """A start vertex followed by a sequence of edge traversals."""

    model_config = ConfigDict(frozen=True)

    start: int = Field(..., ge=0)
    steps: Tuple[PathStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    @classmethod
    def from_steps(cls, start: int, steps: Iterable[Tuple[int, bool]]) -> "Path":
        return cls(start=start, steps=tuple(PathStep(edge=e, forward=f) for e, f in steps))

    def concat(self, other: "Path") -> "Path":
        """This path followed by `other`; incidence is checked when the result is traced."""
        return Path(start=self.start, steps=self.steps + other.steps)


def trace_path(net: Network, path: Path) -> List[int]:
    """
    Vertices visited by the path, start included.

    Distance edges are undirected and may be crossed from either end whatever the
    step's orientation; directed edges must be entered at u when forward and at v
    when reversed.

    Raises:
        InvalidPathError: If a step references a missing edge or is not incident
    """
    if not 0 <= path.start < net.vertex_count:
        raise InvalidPathError(f"path starts at unknown vertex {path.start}")

    current = path.start
    visited = [current]
    for index, step in enumerate(path.steps):
        if step.edge >= net.edge_count:
            raise InvalidPathError(f"step {index} references unknown edge {step.edge}")
        edge = net.edge(step.edge)
        if not edge.kind.directed and current in (edge.u, edge.v):
            current = edge.other(current)
        elif step.forward and current == edge.u:
            current = edge.v
        elif not step.forward and current == edge.v:
            current = edge.u
        else:
            direction = "forward" if step.forward else "reverse"
            raise InvalidPathError(
                f"step {index} ({direction} over edge {step.edge} = {edge.u}->{edge.v}) does not leave vertex {current}"
            )
        visited.append(current)
    return visited


def path_end(net: Network, path: Path) -> int:
    return trace_path(net, path)[-1]


def is_closed(net: Network, path: Path) -> bool:
    return path_end(net, path) == path.start


def reverse_path(net: Network, path: Path) -> Path:
    """The same edges walked backwards from the end vertex."""
    end = path_end(net, path)
    return Path(
        start=end,
        steps=tuple(PathStep(edge=s.edge, forward=not s.forward) for s in reversed(path.steps)),
    )


def path_from_vertices(
    net: Network,
    vertices: Sequence[int],
    prefer: Literal["phase", "distance"] = "phase",
) -> Path:
    """
    Path through consecutive vertices.

    Between each pair the edge of the preferred family is used (phase-carrying
    edges, or length-carrying ones); the other family is a fallback. More than one
    candidate in the chosen family is ambiguous.

    Raises:
        InvalidPathError: If a pair has no edge, or the choice is ambiguous
    """
    if not vertices:
        raise InvalidPathError("a path needs at least one vertex")
    for vertex in vertices:
        if not 0 <= vertex < net.vertex_count:
            raise InvalidPathError(f"unknown vertex {vertex}")

    steps = []
    for a, b in zip(vertices, vertices[1:]):
        candidates = net.edges_between(a, b)
        if not candidates:
            raise InvalidPathError(f"no edge joins {a} and {b}")
        phase = [e for e in candidates if net.edge(e).kind.phase_generator is not None]
        length = [e for e in candidates if net.edge(e).kind.length_sign != 0]
        first, second = (phase, length) if prefer == "phase" else (length, phase)
        chosen = first or second
        if len(chosen) > 1:
            raise InvalidPathError(f"{len(chosen)} edges join {a} and {b}, the path is ambiguous")
        eid = chosen[0]
        edge = net.edge(eid)
        steps.append(PathStep(edge=eid, forward=(edge.u == a)))
    return Path(start=vertices[0], steps=tuple(steps))
