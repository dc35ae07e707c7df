"""
holonet command line.

Exit codes: 0 success, 1 unreadable input (file format or expression syntax),
2 invalid request or constraint violation, 3 lattice too coarse for the requested
connection, 4 verification failed.
"""

import argparse
import csv
import io
import logging
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from .. import __version__
from ..analysis import CSV_HEADER, ConnectionField, compare_loop, compare_rectangles
from ..compiler import AXES, EmbeddedNetwork, LatticeSpec, RatePlan, assign_axis_directions, build_lattice, compile_connection
from ..errors import CoarseLatticeError, ExprSyntaxError, FileFormatError, HolonetError, NegativeEdgeError
from ..group_core import GroupSpec, best_word, mesh_cover_radius
from ..network import geodesic_distance, loop_holonomy, path_from_vertices, path_holonomy, path_length, path_quanta
from ..quantizer import QuantizeRule, reconstruction_error, subdivide
from ..utils.settings import get_log_level, load_environment
from .network_file import (
    NetworkDocument,
    parse_complex,
    parse_element,
    parse_group,
    parse_loops,
    parse_network,
    parse_vertex_list,
    read_text,
    serialize_network,
    write_text_atomic,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_COARSE = 3
EXIT_VERIFY = 4


def cmd_subdivide(args: argparse.Namespace) -> int:
    complex_ = parse_complex(read_text(args.input))
    rule = QuantizeRule(epsilon=args.epsilon, unit_length=args.unit, count_rule=args.rule, zero_policy=args.zero)
    net = subdivide(complex_, rule, args.mode)
    group = GroupSpec.u1(args.eps_prime) if args.eps_prime is not None else None

    write_text_atomic(args.output, serialize_network(NetworkDocument(network=net, group=group)))
    print(f"vertices {net.vertex_count} edges {net.edge_count}")
    print(reconstruction_error(complex_, rule).summary())
    return EXIT_OK


def cmd_lattice(args: argparse.Namespace) -> int:
    fractions = {axis: getattr(args, flag) for axis, flag in zip(AXES, ("fx", "fy", "fd"))}
    given = {axis: f for axis, f in fractions.items() if f is not None}
    if given and (args.Ax is not None or args.Ay is not None):
        raise HolonetError("give either direction fractions (--fx/--fy/--fd) or a connection (--Ax/--Ay), not both")

    spec = LatticeSpec(rows=args.rows, cols=args.cols, spacing=args.spacing, mode=args.mode)
    group = GroupSpec.u1(args.eps_prime)
    lattice = build_lattice(spec)

    if args.Ax is not None or args.Ay is not None:
        conn = ConnectionField.parse(args.Ax or "0", args.Ay or "0")
        compile_connection(lattice, conn, group, tol=args.quad_tol)
    else:
        plan = RatePlan(**given)
        for axis in AXES:
            if axis in given or lattice.has_axis(axis):
                assign_axis_directions(lattice, axis, plan.fraction(axis))

    lattice.freeze()
    doc = NetworkDocument(network=lattice.network, group=group, coordinates=lattice.coordinates())
    write_text_atomic(args.output, serialize_network(doc))
    print(f"vertices {lattice.network.vertex_count} edges {lattice.network.edge_count}")
    return EXIT_OK


def _format_matrix(value) -> List[str]:
    return [" ".join(repr(complex(z)) for z in row) for row in value]


def cmd_holonomy(args: argparse.Namespace) -> int:
    doc = parse_network(read_text(args.input))
    net, group = doc.network, doc.group
    vertices = parse_vertex_list(args.path)
    path = path_from_vertices(net, vertices, prefer="phase")
    length_path = path_from_vertices(net, vertices, prefer="distance")

    quanta = path_quanta(net, path)
    d = group.d if group is not None else max(net.generators_used(), default=0) + 1
    print("quanta " + " ".join(str(quanta.get(i, 0)) for i in range(d)))

    if group is not None:
        holonomy = loop_holonomy(net, path, group) if args.loop else path_holonomy(net, path, group)
        if holonomy.dim == 1:
            print(f"phase {holonomy.phase!r}")
        else:
            print("matrix")
            for row in _format_matrix(holonomy.value):
                print(row)
    elif args.loop and vertices[-1] != vertices[0]:
        raise HolonetError(f"path {args.path} is not closed")

    print(f"length {path_length(net, length_path)!r}")

    if not args.loop:
        try:
            geodesic = geodesic_distance(net, vertices[0], vertices[-1])
        except NegativeEdgeError:
            print("geodesic undefined")
        else:
            print("geodesic unreachable" if geodesic is None else f"geodesic {geodesic!r}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    doc = parse_network(read_text(args.input))
    if doc.group is None:
        raise HolonetError(f"{args.input} has no group block")
    lattice = EmbeddedNetwork.from_network(doc.network, doc.coordinates)
    conn = ConnectionField.parse(args.Ax, args.Ay)

    if args.all_rects:
        results = compare_rectangles(
            lattice, conn, doc.group, tol=args.quad_tol, min_area=args.min_area, even_sides=args.even_sides
        )
    else:
        results = [
            compare_loop(lattice, lattice.path_through(vertices), conn, doc.group, tol=args.quad_tol, loop_id=loop_id)
            for loop_id, vertices in parse_loops(read_text(args.loops))
        ]

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(result.csv_row() for result in results)
    write_text_atomic(args.report, buffer.getvalue())

    failures = [r for r in results if r.circle_distance > args.tol]
    worst = max((r.circle_distance for r in results), default=0.0)
    print(f"loops {len(results)} failures {len(failures)} max_distance {worst!r}")
    for failure in failures[:10]:
        logger.warning("loop %s off by %s", failure.loop_id, failure.circle_distance)
    return EXIT_VERIFY if failures else EXIT_OK


def cmd_group(args: argparse.Namespace) -> int:
    spec = parse_group(read_text(args.group_file))
    if args.mesh:
        print(f"radius {mesh_cover_radius(spec, args.n, args.samples, args.seed)!r}")
    else:
        alpha, distance = best_word(spec, parse_element(args.approximate, spec), args.n)
        print(f"alpha={alpha}")
        print(f"distance {distance!r}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="holonet", description="Distance and holonomy from typed directed-edge networks")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("subdivide", help="quantize a weighted complex into a unit-edge network")
    sub.add_argument("--input", required=True, help="weighted complex file")
    sub.add_argument("--epsilon", type=float, required=True, help="observability scale")
    sub.add_argument("--unit", type=float, default=None, help="unit edge length (default 2*epsilon)")
    sub.add_argument("--rule", choices=("floor", "round"), default="floor")
    sub.add_argument("--zero", choices=("clamp", "error"), default="clamp", help="policy for edges shorter than 2*epsilon")
    sub.add_argument("--mode", choices=("dual", "combined", "split"), default="dual")
    sub.add_argument("--eps-prime", type=float, default=None, help="write a U(1) group block with this quantum")
    sub.add_argument("--output", required=True)
    sub.set_defaults(handler=cmd_subdivide)

    sub = commands.add_parser("lattice", help="build a triangulated lattice and assign edge directions")
    sub.add_argument("--rows", type=int, required=True)
    sub.add_argument("--cols", type=int, required=True)
    sub.add_argument("--spacing", type=float, default=1.0)
    sub.add_argument("--mode", choices=("dual", "combined"), default="dual")
    sub.add_argument("--eps-prime", type=float, required=True, help="phase quantum per directed edge")
    sub.add_argument("--fx", type=float, default=None, help="forward fraction of horizontal edges")
    sub.add_argument("--fy", type=float, default=None, help="forward fraction of vertical edges")
    sub.add_argument("--fd", type=float, default=None, help="forward fraction of diagonal edges")
    sub.add_argument("--Ax", default=None, help="x component of the target connection")
    sub.add_argument("--Ay", default=None, help="y component of the target connection")
    sub.add_argument("--quad-tol", type=float, default=1e-10, help="quadrature tolerance per edge")
    sub.add_argument("--output", required=True)
    sub.set_defaults(handler=cmd_lattice)

    sub = commands.add_parser("holonomy", help="holonomy and length along a vertex path")
    sub.add_argument("--input", required=True, help="network file")
    sub.add_argument("--path", required=True, help="comma separated vertices v0,v1,...")
    sub.add_argument("--loop", action="store_true", help="require the path to be closed")
    sub.set_defaults(handler=cmd_holonomy)

    sub = commands.add_parser("verify", help="compare lattice loop phases with a continuum connection")
    sub.add_argument("--input", required=True, help="lattice network file")
    sub.add_argument("--Ax", default="0")
    sub.add_argument("--Ay", default="0")
    loops = sub.add_mutually_exclusive_group(required=True)
    loops.add_argument("--loops", help="file of `<id> v0,v1,...` loops")
    loops.add_argument("--all-rects", action="store_true", help="every axis-aligned rectangle")
    sub.add_argument("--min-area", type=float, default=0.0, help="skip rectangles smaller than this")
    sub.add_argument("--even-sides", action="store_true", help="only rectangles with even side counts")
    sub.add_argument("--tol", type=float, default=1e-9, help="largest acceptable circle distance")
    sub.add_argument("--quad-tol", type=float, default=1e-10)
    sub.add_argument("--report", required=True, help="CSV output path")
    sub.set_defaults(handler=cmd_verify)

    sub = commands.add_parser("group", help="generator-word approximation and mesh radius")
    sub.add_argument("--group-file", required=True)
    action = sub.add_mutually_exclusive_group(required=True)
    action.add_argument("--approximate", help="phase (U(1)) or 2*dim^2 reals (re im pairs)")
    action.add_argument("--mesh", action="store_true")
    sub.add_argument("--n", type=int, required=True, help="largest word norm")
    sub.add_argument("--samples", type=int, default=100)
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(handler=cmd_group)

    return parser


def configure_logging() -> None:
    logging.basicConfig(
        level=get_log_level(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_environment()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INVALID

    try:
        configure_logging()
        return args.handler(args)
    except (FileFormatError, ExprSyntaxError) as e:
        print(f"holonet: error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except CoarseLatticeError as e:
        print(f"holonet: error: {e}", file=sys.stderr)
        return EXIT_COARSE
    except (HolonetError, ValidationError, ValueError, OSError) as e:
        print(f"holonet: error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
