"""
Unit tests for lattice construction, rate plans and connection compilation.
"""

import numpy as np
import pytest
from pydantic import ValidationError

from holonet.analysis import ConnectionField, compare_rectangles
from holonet.cli.network_file import NetworkDocument, serialize_network
from holonet.compiler import (
    AXES,
    EmbeddedNetwork,
    LatticeSpec,
    RatePlan,
    assign_axis_directions,
    build_lattice,
    compile_connection,
    edge_phases,
    forward_pattern,
)
from holonet.errors import CoarseLatticeError, FrozenNetworkError, GroupSpecError, LatticeError
from holonet.group_core import GroupSpec
from holonet.network import path_quanta


def quanta_along(lattice, vertices):
    return path_quanta(lattice.network, lattice.path_through(vertices)).get(0, 0)


@pytest.mark.unit
class TestLatticeSpec:
    """LatticeSpec and RatePlan."""

    @pytest.mark.parametrize("rows,cols,count", [(2, 2, 5), (1, 5, 4), (3, 3, 16), (1, 1, 0)])
    def test_edge_counts(self, rows, cols, count):
        """R(C-1) + C(R-1) + (R-1)(C-1)."""
        assert LatticeSpec(rows=rows, cols=cols).lattice_edge_count == count

    def test_positions(self):
        """Vertex r*C + c sits at (c a, r a)."""
        spec = LatticeSpec(rows=3, cols=4, spacing=0.5)
        assert spec.vertex(2, 1) == 9
        assert spec.position(9) == (0.5, 1.0)
        assert spec.grid_position(7) == (1, 3)
        assert spec.triangle_area == 0.125

    def test_rejects_bad_spacing(self):
        """Spacing is positive and finite."""
        with pytest.raises(ValidationError):
            LatticeSpec(rows=2, cols=2, spacing=0.0)
        with pytest.raises(ValidationError):
            LatticeSpec(rows=2, cols=2, spacing=float("nan"))

    def test_rate_plan(self):
        """Fractions default to 0.5 and map to rates 2f - 1."""
        plan = RatePlan(vertical=1.0)
        assert plan.rate("horizontal") == 0.0
        assert plan.rate("vertical") == 1.0
        assert RatePlan.from_rates(diagonal=-1.0).diagonal == 0.0
        with pytest.raises(ValidationError):
            RatePlan(horizontal=1.5)


@pytest.mark.unit
class TestBuildLattice:
    """build_lattice() and the EmbeddedNetwork view."""

    def test_dual_edges(self):
        """Dual lattices carry a distance and a phase edge per lattice edge."""
        lattice = build_lattice(LatticeSpec(rows=3, cols=3))
        assert lattice.network.edge_count == 32
        assert not lattice.frozen
        assert all(lattice.is_forward(edge) for edge in lattice.lattice_edges())

    def test_combined_edges(self):
        """Combined lattices carry one directed edge per lattice edge."""
        lattice = build_lattice(LatticeSpec(rows=2, cols=2, mode="combined"))
        assert lattice.network.edge_count == 5
        assert lattice.network.unit_length == 1.0

    def test_diagonal_lines(self):
        """Diagonal lines run over col - row, each walking up-right."""
        lattice = build_lattice(LatticeSpec(rows=3, cols=4))
        lines = lattice.lines("diagonal")
        assert [len(line) for line in lines] == [1, 2, 2, 1]
        assert [(e.tail, e.head) for e in lines[1]] == [(0, 5), (5, 10)]

    def test_rectangle_walk(self):
        """Counter-clockwise from the lower-left corner."""
        lattice = build_lattice(LatticeSpec(rows=3, cols=3))
        assert lattice.rectangle_vertices(0, 0, 1, 2) == [0, 1, 2, 5, 4, 3, 0]
        with pytest.raises(LatticeError):
            lattice.rectangle_vertices(1, 1, 2, 1)
        with pytest.raises(LatticeError):
            lattice.rectangle_vertices(0, 0, 0, 1)

    def test_from_network_recovers_spec(self):
        """Coordinates plus edges give the lattice back."""
        lattice = build_lattice(LatticeSpec(rows=3, cols=4, spacing=0.25)).freeze()
        recovered = EmbeddedNetwork.from_network(lattice.network, lattice.coordinates())
        assert recovered.spec == lattice.spec

    def test_from_network_rejects_off_grid(self):
        """A moved vertex is not a lattice."""
        lattice = build_lattice(LatticeSpec(rows=2, cols=2)).freeze()
        coords = lattice.coordinates()
        coords[3] = (1.0, 1.5)
        with pytest.raises(LatticeError):
            EmbeddedNetwork.from_network(lattice.network, coords)


@pytest.mark.unit
class TestForwardPattern:
    """forward_pattern() error diffusion."""

    def test_half_alternates(self):
        """f = 0.5 starts with a reversed edge."""
        assert forward_pattern(4, 0.5) == [False, True, False, True]

    def test_seven_tenths(self):
        """f = 0.7 gives exactly 7 forward edges out of 10."""
        assert sum(forward_pattern(10, 0.7)) == 7

    def test_extremes(self):
        """f = 1 and f = 0."""
        assert forward_pattern(5, 1.0) == [True] * 5
        assert forward_pattern(5, 0.0) == [False] * 5

    @pytest.mark.parametrize("fraction", [0.0, 0.1, 0.3, 1 / 3, 0.5, 0.61803, 0.7, 0.99, 1.0])
    def test_prefix_bound(self, fraction):
        """Every prefix has within one of f k forward edges."""
        bits = forward_pattern(500, fraction)
        counts = np.cumsum(bits)
        k = np.arange(1, 501)
        assert np.all(np.abs(counts - fraction * k) <= 1.0)

    @pytest.mark.parametrize("fraction", [0.2, 0.45, 0.7, 0.85])
    def test_complement_reverses(self, fraction):
        """f and 1 - f are edge-wise reversals of each other."""
        assert forward_pattern(64, 1.0 - fraction) == [not bit for bit in forward_pattern(64, fraction)]

    def test_rejects_out_of_range(self):
        """f outside [0, 1]."""
        with pytest.raises(LatticeError):
            forward_pattern(3, -0.1)


@pytest.mark.unit
class TestRatePlans:
    """assign_axis_directions() and apply_rate_plan()."""

    def test_uniform_vertical(self, make_lattice):
        """f = 1 on a column of 10 edges accumulates 10 quanta."""
        lattice = make_lattice(11, 1, vertical=1.0)
        assert quanta_along(lattice, list(range(11))) == 10

    def test_alternating_row_cancels(self, make_lattice):
        """f = 0.5 on a row of 10 edges nets 0."""
        lattice = make_lattice(1, 11)
        assert quanta_along(lattice, list(range(11))) == 0

    def test_partial_row(self, make_lattice):
        """f = 0.7 on 10 edges nets 7 - 3 = 4."""
        lattice = make_lattice(1, 11, horizontal=0.7)
        assert quanta_along(lattice, list(range(11))) == 4

    def test_frozen_lattice(self, make_lattice):
        """Directions are fixed once frozen."""
        lattice = make_lattice(3, 3)
        with pytest.raises(FrozenNetworkError):
            assign_axis_directions(lattice, "horizontal", 0.5)

    def test_missing_axis(self, make_lattice):
        """A single row has no diagonals."""
        lattice = make_lattice(1, 5, freeze=False)
        with pytest.raises(LatticeError):
            assign_axis_directions(lattice, "diagonal", 0.5)

    def test_out_of_range_fraction(self, make_lattice):
        """f = 1.5 is rejected."""
        lattice = make_lattice(3, 3, freeze=False)
        with pytest.raises(LatticeError):
            assign_axis_directions(lattice, "horizontal", 1.5)

    def test_deterministic(self, make_lattice):
        """Identical plans serialize identically."""
        docs = [
            serialize_network(NetworkDocument(network=lattice.network, coordinates=lattice.coordinates()))
            for lattice in (make_lattice(6, 7, horizontal=0.3, diagonal=0.8) for _ in range(2))
        ]
        assert docs[0] == docs[1]

    def test_complementary_plans_reverse(self, make_lattice):
        """f and 1 - f give opposite signs on every edge."""
        a = make_lattice(5, 6, horizontal=0.3, vertical=0.9, diagonal=0.55)
        b = make_lattice(5, 6, horizontal=0.7, vertical=0.1, diagonal=0.45)
        for axis in AXES:
            np.testing.assert_array_equal(a.axis_signs(axis), -b.axis_signs(axis))


@pytest.mark.unit
class TestCompileConnection:
    """compile_connection()."""

    def test_zero_connection_alternates(self, make_lattice, u1):
        """A = 0 starts every line forward and then alternates."""
        lattice = make_lattice(4, 5, freeze=False)
        compile_connection(lattice, ConnectionField(), u1)
        for axis in AXES:
            for line in lattice.lines(axis):
                assert [lattice.is_forward(e) for e in line] == [i % 2 == 0 for i in range(len(line))]

    def test_near_quantum_field_saturates(self, make_lattice, u1):
        """A_y just below eps'/a points every vertical and diagonal edge forward."""
        lattice = make_lattice(10, 10, freeze=False)
        compile_connection(lattice, ConnectionField.parse("0", "0.099"), u1)
        assert np.all(lattice.axis_signs("vertical") == 1)
        assert np.all(lattice.axis_signs("diagonal") == 1)
        assert abs(quanta_along(lattice.freeze(), list(range(0, 100, 10)))) == 9

    def test_prefix_bound(self, make_lattice, u1):
        """Every line prefix stays within one quantum of its target."""
        lattice = make_lattice(8, 8, freeze=False)
        conn = ConnectionField.parse("0.03*sin(y)", "0.01*x - 0.005*y")
        compile_connection(lattice, conn, u1)
        phases = edge_phases(lattice, conn)
        for axis in AXES:
            for line in lattice.lines(axis):
                target = np.cumsum([phases[e] / 0.1 for e in line])
                quanta = np.cumsum([1 if lattice.is_forward(e) else -1 for e in line])
                assert np.all(np.abs(quanta - target) <= 1.0 + 1e-9)

    def test_landau_flux(self, make_lattice):
        """A = B x dy reproduces the enclosed flux within eight quanta."""
        spec = GroupSpec.u1(0.2)
        lattice = make_lattice(10, 10, freeze=False)
        conn = ConnectionField.parse("0", "0.01*x")
        compile_connection(lattice, conn, spec)
        for row in compare_rectangles(lattice.freeze(), conn, spec, min_area=9.0):
            assert row.circle_distance <= 8 * 0.2 + 1e-9

    def test_coarse_lattice_changes_nothing(self, make_lattice):
        """A per-edge phase above eps' is rejected before any edge turns."""
        lattice = make_lattice(5, 5, freeze=False, horizontal=1.0, vertical=1.0, diagonal=1.0)
        with pytest.raises(CoarseLatticeError):
            compile_connection(lattice, ConnectionField.parse("0", "0.1*x"), GroupSpec.u1(0.2))
        for axis in AXES:
            assert np.all(lattice.axis_signs(axis) == 1)

    def test_rejects_non_abelian(self, make_lattice, su2):
        """Only U(1) connections compile."""
        with pytest.raises(GroupSpecError):
            compile_connection(make_lattice(3, 3, freeze=False), ConnectionField(), su2)

    def test_rejects_frozen(self, make_lattice, u1):
        """Frozen lattices cannot be recompiled."""
        with pytest.raises(FrozenNetworkError):
            compile_connection(make_lattice(3, 3), ConnectionField(), u1)

    def test_short_loops_bounded(self, make_lattice, u1):
        """After A = 0, closed walks of up to six edges net at most 4 quanta."""
        lattice = make_lattice(10, 10, freeze=False)
        compile_connection(lattice, ConnectionField(), u1)
        adjacency = {v: [] for v in range(100)}
        for edge in lattice.lattice_edges():
            s = 1 if lattice.is_forward(edge) else -1
            adjacency[edge.tail].append((edge.head, s))
            adjacency[edge.head].append((edge.tail, -s))

        worst = 0
        for start in (0, 33, 45, 99):
            stack = [(start, 0, 0)]
            while stack:
                vertex, depth, total = stack.pop()
                if depth and vertex == start:
                    worst = max(worst, abs(total))
                if depth == 6:
                    continue
                for nxt, s in adjacency[vertex]:
                    stack.append((nxt, depth + 1, total + s))
        assert worst <= 4
