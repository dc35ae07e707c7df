"""
Canonical text formats.

Network file:

    holonet v1
    mode dual|combined|split
    unit <unit length>
    group u1 eps=<eps'>                      (optional; or the general form:)
    group dim=<k> d=<d> eps=<eps'>
    gen <i> <2 k^2 reals, row-major re im pairs>
    vertices <V>
    coord <v> <x> <y>                        (optional, increasing v)
    edge <u> <v> phase <i> | dist +|- | comb <i> | sphase <i> +|-

Weighted complex file: `complex v=<V>` then `wedge <u> <v> <l>` lines.
Loops file: `<loop id> v0,v1,...,vk` lines.

Blank lines and lines starting with # are ignored when reading. Reals are written
with repr so every value survives a round trip exactly.
"""

import logging
import math
import os
import tempfile
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..errors import FileFormatError, NetworkError
from ..group_core import GroupElement, GroupSpec
from ..network import NETWORK_MODES, CombinedKind, DistanceKind, EdgeKind, Network, PhaseKind, SignedPhaseKind
from ..quantizer import WeightedComplex, WeightedEdge

logger = logging.getLogger(__name__)

MAGIC = "holonet v1"

Line = Tuple[int, List[str]]
Point = Tuple[float, float]


class NetworkDocument(BaseModel):
    """Everything a network file holds."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    network: Network
    group: Optional[GroupSpec] = None
    coordinates: Dict[int, Point] = Field(default_factory=dict)


def _lines(text: str) -> Iterator[Line]:
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped.split()


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise FileFormatError(f"{what} must be an integer, got {token!r}", line) from e


def _float(token: str, line: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError as e:
        raise FileFormatError(f"{what} must be a real number, got {token!r}", line) from e
    if not math.isfinite(value):
        raise FileFormatError(f"{what} must be finite, got {token!r}", line)
    return value


def _sign(token: str, line: int) -> int:
    if token not in ("+", "-"):
        raise FileFormatError(f"sign must be + or -, got {token!r}", line)
    return 1 if token == "+" else -1


def _expect_fields(tokens: List[str], count: int, line: int, usage: str) -> None:
    if len(tokens) != count:
        raise FileFormatError(f"expected `{usage}`", line)


# Group block


def format_group(spec: GroupSpec) -> List[str]:
    if spec.is_u1_shorthand():
        return [f"group u1 eps={spec.eps!r}"]
    out = [f"group dim={spec.dim} d={spec.d} eps={spec.eps!r}"]
    for i, eta in enumerate(spec.generators):
        reals = []
        for z in eta.ravel():
            reals += [repr(float(z.real)), repr(float(z.imag))]
        out.append(f"gen {i} " + " ".join(reals))
    return out


def _parse_group_header(tokens: List[str], line: int) -> Tuple[Optional[int], int, float]:
    """(dim, d, eps) from a `group` line; dim is None for the u1 shorthand."""
    if len(tokens) == 3 and tokens[1] == "u1" and tokens[2].startswith("eps="):
        return None, 1, _float(tokens[2][4:], line, "eps")

    values = {}
    for token in tokens[1:]:
        key, sep, value = token.partition("=")
        if not sep or key not in ("dim", "d", "eps") or key in values:
            raise FileFormatError(f"unexpected group field {token!r}", line)
        values[key] = value
    if set(values) != {"dim", "d", "eps"}:
        raise FileFormatError("expected `group u1 eps=<eps>` or `group dim=<k> d=<d> eps=<eps>`", line)
    dim = _int(values["dim"], line, "dim")
    d = _int(values["d"], line, "d")
    if dim < 1 or d < 1:
        raise FileFormatError("dim and d must be positive", line)
    return dim, d, _float(values["eps"], line, "eps")


def _parse_gen(tokens: List[str], line: int, index: int, dim: int) -> np.ndarray:
    if len(tokens) < 2 or tokens[0] != "gen" or _int(tokens[1], line, "generator index") != index:
        raise FileFormatError(f"expected `gen {index} ...`", line)
    reals = [_float(t, line, "generator entry") for t in tokens[2:]]
    if len(reals) != 2 * dim * dim:
        raise FileFormatError(f"generator {index} needs {2 * dim * dim} reals, got {len(reals)}", line)
    pairs = np.array(reals).reshape(dim * dim, 2)
    return (pairs[:, 0] + 1j * pairs[:, 1]).reshape(dim, dim)


def _read_group(header: Line, rest: Iterator[Line]) -> GroupSpec:
    line, tokens = header
    dim, d, eps = _parse_group_header(tokens, line)
    generators = []
    if dim is not None:
        for index in range(d):
            try:
                gen_line, gen_tokens = next(rest)
            except StopIteration:
                raise FileFormatError(f"group block ends before generator {index}", line) from None
            generators.append(_parse_gen(gen_tokens, gen_line, index, dim))
    try:
        if dim is None:
            return GroupSpec.u1(eps)
        return GroupSpec(dim=dim, generators=generators, eps=eps)
    except ValueError as e:
        raise FileFormatError(f"invalid group: {e}", line) from e


def parse_group(text: str) -> GroupSpec:
    """A standalone group block."""
    lines = _lines(text)
    try:
        header = next(lines)
    except StopIteration:
        raise FileFormatError("empty group file") from None
    if header[1][0] != "group":
        raise FileFormatError("a group file starts with a `group` line", header[0])
    spec = _read_group(header, lines)
    for line, _ in lines:
        raise FileFormatError("unexpected content after the group block", line)
    return spec


def parse_element(text: str, spec: GroupSpec) -> GroupElement:
    """
    A group element given on the command line.

    For dim=1 a single real is a phase in radians; otherwise 2 dim^2 reals give the
    row-major (re, im) entries. Commas count as whitespace.
    """
    tokens = text.replace(",", " ").split()
    if spec.dim == 1 and len(tokens) == 1:
        return GroupElement.from_phase(_float(tokens[0], None, "phase"))
    if len(tokens) != 2 * spec.dim * spec.dim:
        raise FileFormatError(f"expected {2 * spec.dim * spec.dim} reals for a {spec.dim}x{spec.dim} element")
    reals = np.array([_float(t, None, "matrix entry") for t in tokens]).reshape(-1, 2)
    return GroupElement(value=(reals[:, 0] + 1j * reals[:, 1]).reshape(spec.dim, spec.dim))


# Network file


def format_edge_kind(kind: EdgeKind) -> str:
    if isinstance(kind, PhaseKind):
        return f"phase {kind.generator}"
    if isinstance(kind, DistanceKind):
        return "dist " + ("+" if kind.sign > 0 else "-")
    if isinstance(kind, CombinedKind):
        return f"comb {kind.generator}"
    return f"sphase {kind.generator} " + ("+" if kind.sign > 0 else "-")


def _parse_edge_kind(tokens: List[str], line: int) -> EdgeKind:
    tag, args = tokens[0], tokens[1:]
    if tag == "phase" and len(args) == 1:
        return PhaseKind(generator=_int(args[0], line, "generator index"))
    if tag == "dist" and len(args) == 1:
        return DistanceKind(sign=_sign(args[0], line))
    if tag == "comb" and len(args) == 1:
        return CombinedKind(generator=_int(args[0], line, "generator index"))
    if tag == "sphase" and len(args) == 2:
        return SignedPhaseKind(generator=_int(args[0], line, "generator index"), sign=_sign(args[1], line))
    raise FileFormatError(f"unknown edge kind `{' '.join(tokens)}`", line)


def serialize_network(doc: NetworkDocument) -> str:
    """
    Canonical text of a frozen network. Edges are written in (u, v, kind) order,
    so a parsed file numbers its edges in that order.

    Raises:
        NetworkError: If the network is not frozen
    """
    net = doc.network
    if not net.frozen:
        raise NetworkError("only frozen networks have a canonical serialization")
    out = [MAGIC, f"mode {net.mode}", f"unit {net.unit_length!r}"]
    if doc.group is not None:
        out += format_group(doc.group)
    out.append(f"vertices {net.vertex_count}")
    for v in sorted(doc.coordinates):
        x, y = doc.coordinates[v]
        out.append(f"coord {v} {float(x)!r} {float(y)!r}")
    for edge in sorted(net.edges, key=lambda e: e.sort_key):
        out.append(f"edge {edge.u} {edge.v} {format_edge_kind(edge.kind)}")
    return "\n".join(out) + "\n"


def parse_network(text: str) -> NetworkDocument:
    """
    Read a network file; the network comes back frozen.

    Raises:
        FileFormatError: On any malformed, missing, repeated or unknown line
    """
    lines = _lines(text)
    first = next(lines, None)
    if first is None or first[1] != MAGIC.split():
        raise FileFormatError(f"missing `{MAGIC}` header", first[0] if first else None)

    header: Dict[str, object] = {}
    net: Optional[Network] = None
    coordinates: Dict[int, Point] = {}
    seen_edges = False

    for line, tokens in lines:
        key = tokens[0]
        if net is None:
            if key in header:
                raise FileFormatError(f"repeated `{key}` line", line)
            if key == "mode":
                _expect_fields(tokens, 2, line, "mode dual|combined|split")
                if tokens[1] not in NETWORK_MODES:
                    raise FileFormatError(f"unknown mode {tokens[1]!r}", line)
                header["mode"] = tokens[1]
            elif key == "unit":
                _expect_fields(tokens, 2, line, "unit <length>")
                header["unit"] = _float(tokens[1], line, "unit length")
            elif key == "group":
                header["group"] = _read_group((line, tokens), lines)
            elif key == "vertices":
                _expect_fields(tokens, 2, line, "vertices <count>")
                missing = [k for k in ("mode", "unit") if k not in header]
                if missing:
                    raise FileFormatError(f"`vertices` before {' and '.join(missing)}", line)
                count = _int(tokens[1], line, "vertex count")
                try:
                    net = Network(mode=header["mode"], unit_length=header["unit"], vertex_count=count)
                except NetworkError as e:
                    raise FileFormatError(str(e), line) from e
            else:
                raise FileFormatError(f"unknown header key {key!r}", line)
        elif key == "coord":
            _expect_fields(tokens, 4, line, "coord <v> <x> <y>")
            if seen_edges:
                raise FileFormatError("coord lines must precede edge lines", line)
            v = _int(tokens[1], line, "vertex")
            if not 0 <= v < net.vertex_count or (coordinates and v <= max(coordinates)):
                raise FileFormatError(f"coord for vertex {v} is out of range or out of order", line)
            coordinates[v] = (_float(tokens[2], line, "x"), _float(tokens[3], line, "y"))
        elif key == "edge":
            if len(tokens) < 5:
                raise FileFormatError("expected `edge <u> <v> <kind> ...`", line)
            seen_edges = True
            u, v = _int(tokens[1], line, "vertex"), _int(tokens[2], line, "vertex")
            kind = _parse_edge_kind(tokens[3:], line)
            try:
                net.add_edge(u, v, kind)
            except NetworkError as e:
                raise FileFormatError(str(e), line) from e
        else:
            raise FileFormatError(f"unexpected line `{' '.join(tokens)}`", line)

    if net is None:
        raise FileFormatError("missing `vertices` line")
    return NetworkDocument(network=net.freeze(), group=header.get("group"), coordinates=coordinates)


# Weighted complexes and loop lists


def serialize_complex(complex_: WeightedComplex) -> str:
    out = [f"complex v={complex_.vertex_count}"]
    out += [f"wedge {e.u} {e.v} {e.length!r}" for e in complex_.edges]
    return "\n".join(out) + "\n"


def parse_complex(text: str) -> WeightedComplex:
    """
    Read a weighted complex file.

    Raises:
        FileFormatError: On malformed lines
    """
    lines = _lines(text)
    first = next(lines, None)
    if first is None or len(first[1]) != 2 or first[1][0] != "complex" or not first[1][1].startswith("v="):
        raise FileFormatError("missing `complex v=<V>` header", first[0] if first else None)
    vertex_count = _int(first[1][1][2:], first[0], "vertex count")
    if vertex_count < 0:
        raise FileFormatError("vertex count must be non-negative", first[0])

    edges = []
    for line, tokens in lines:
        if tokens[0] != "wedge":
            raise FileFormatError(f"unexpected line `{' '.join(tokens)}`", line)
        _expect_fields(tokens, 4, line, "wedge <u> <v> <length>")
        u, v = _int(tokens[1], line, "vertex"), _int(tokens[2], line, "vertex")
        length = _float(tokens[3], line, "length")
        try:
            edges.append(WeightedEdge(u=u, v=v, length=length))
        except ValueError as e:
            raise FileFormatError(f"invalid edge: {e}", line) from e
    try:
        return WeightedComplex(vertex_count=vertex_count, edges=edges)
    except ValueError as e:
        raise FileFormatError(f"invalid complex: {e}", first[0]) from e


def parse_vertex_list(text: str, line: Optional[int] = None) -> List[int]:
    """`v0,v1,...,vk` as integers."""
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(not t for t in tokens):
        raise FileFormatError(f"malformed vertex list {text!r}", line)
    return [_int(t, line, "vertex") for t in tokens]


def parse_loops(text: str) -> List[Tuple[str, List[int]]]:
    """Named vertex loops, in file order."""
    loops = []
    seen = set()
    for line, tokens in _lines(text):
        _expect_fields(tokens, 2, line, "<loop id> v0,v1,...")
        loop_id = tokens[0]
        if loop_id in seen:
            raise FileFormatError(f"repeated loop id {loop_id!r}", line)
        seen.add(loop_id)
        loops.append((loop_id, parse_vertex_list(tokens[1], line)))
    return loops


def write_text_atomic(path: str, text: str) -> None:
    """Write through a temporary file in the same directory and rename it into place."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, temp_path = tempfile.mkstemp(prefix=".holonet-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.unlink(temp_path)
        raise
    logger.debug("wrote %s", path)


def read_text(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()
