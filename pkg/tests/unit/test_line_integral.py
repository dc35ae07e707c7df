"""
Unit tests for adaptive Simpson quadrature and polyline integrals.
"""

import math

import pytest

from holonet.analysis import ConnectionField, integrate_adaptive_simpson, line_integral, segment_integral
from holonet.errors import EvaluationError, HolonetError

UNIT_SQUARE = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.0, 0.0)]


def regular_polygon(n, radius=1.0):
    points = [(radius * math.cos(2 * math.pi * k / n), radius * math.sin(2 * math.pi * k / n)) for k in range(n)]
    return points + [points[0]]


@pytest.mark.unit
class TestSimpson:
    """integrate_adaptive_simpson()."""

    def test_sin(self):
        """Integral of sin over [0, pi] is 2."""
        assert integrate_adaptive_simpson(math.sin, 0.0, math.pi) == pytest.approx(2.0, abs=1e-9)

    def test_polynomial_exact(self):
        """Cubics are exact under Simpson."""
        assert integrate_adaptive_simpson(lambda t: t**3 - t, 0.0, 2.0) == pytest.approx(2.0, abs=1e-12)

    def test_empty_interval(self):
        """a == b gives 0."""
        assert integrate_adaptive_simpson(math.exp, 1.0, 1.0) == 0.0

    def test_rejects_bad_tolerance(self):
        """tol must be positive."""
        with pytest.raises(HolonetError):
            integrate_adaptive_simpson(math.sin, 0.0, 1.0, tol=0.0)

    def test_sharp_peak(self):
        """Adaptive refinement resolves a narrow Gaussian."""
        result = integrate_adaptive_simpson(lambda t: math.exp(-((t - 0.3) ** 2) / 1e-4), 0.0, 1.0, tol=1e-12)
        assert result == pytest.approx(math.sqrt(math.pi * 1e-4), rel=1e-7)


@pytest.mark.unit
class TestLineIntegral:
    """line_integral() and segment_integral()."""

    def test_zero_connection(self):
        """A = 0 integrates to 0 on any loop."""
        assert line_integral(ConnectionField(), UNIT_SQUARE) == 0.0

    def test_uniform_field_flux(self):
        """A = (0, 0.2 x) has flux 0.2 through the unit square."""
        conn = ConnectionField.parse("0", "0.2*x")
        assert line_integral(conn, UNIT_SQUARE) == pytest.approx(0.2, abs=1e-12)

    def test_symmetric_gauge_matches(self):
        """Gauge change by a gradient leaves closed-loop integrals unchanged."""
        landau = ConnectionField.parse("0", "0.3*x")
        symmetric = ConnectionField.parse("-0.15*y", "0.15*x")
        loop = regular_polygon(17, radius=2.0)
        assert line_integral(landau, loop) == pytest.approx(line_integral(symmetric, loop), abs=1e-9)

    def test_winding_number(self):
        """The angular form winds 2 pi around a 64-gon."""
        conn = ConnectionField.parse("-y/(x^2+y^2)", "x/(x^2+y^2)")
        assert line_integral(conn, regular_polygon(64)) == pytest.approx(2 * math.pi, abs=1e-3)

    def test_additivity(self):
        """Integral over a concatenation is the sum of the parts."""
        conn = ConnectionField.parse("sin(y)", "x*y")
        first = [(0.0, 0.0), (1.0, 0.5), (2.0, 2.0)]
        second = [(2.0, 2.0), (0.5, 3.0), (-1.0, 1.0)]
        whole = first + second[1:]
        assert line_integral(conn, whole) == pytest.approx(
            line_integral(conn, first) + line_integral(conn, second), abs=1e-8
        )

    def test_reversal_negates_exactly(self):
        """Reversing a polyline negates the value bit for bit."""
        conn = ConnectionField.parse("exp(-x^2)*y", "cos(x*y)")
        polyline = [(0.0, 0.0), (1.5, 0.2), (0.7, 2.0), (-1.0, 0.4)]
        assert line_integral(conn, polyline[::-1]) == -line_integral(conn, polyline)

    def test_segment_direction(self):
        """segment_integral(q, p) == -segment_integral(p, q)."""
        conn = ConnectionField.parse("x^2", "y")
        forward = segment_integral(conn, (0.0, 0.0), (1.0, 1.0))
        assert segment_integral(conn, (1.0, 1.0), (0.0, 0.0)) == -forward
        assert forward == pytest.approx(1.0 / 3.0 + 0.5)
        assert segment_integral(conn, (1.0, 1.0), (1.0, 1.0)) == 0.0

    def test_needs_two_points(self):
        """A single point is not a polyline."""
        with pytest.raises(HolonetError):
            line_integral(ConnectionField(), [(0.0, 0.0)])

    def test_rejects_bad_tolerance(self):
        """tol must be positive."""
        with pytest.raises(HolonetError):
            line_integral(ConnectionField(), UNIT_SQUARE, tol=-1.0)

    def test_undefined_on_path(self):
        """1/x through x = 0 cannot be integrated."""
        conn = ConnectionField.parse("1/x", "0")
        with pytest.raises(EvaluationError):
            line_integral(conn, [(-1.0, 0.0), (1.0, 0.0)])
