"""Line integrals of a connection along polylines by adaptive Simpson quadrature."""

import logging
import math
from typing import Callable, Sequence, Tuple

from ..errors import HolonetError
from .connection_field import ConnectionField

logger = logging.getLogger(__name__)

Point = Tuple[float, float]

MAX_DEPTH = 50
MIN_DEPTH = 2


def integrate_adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_depth: int = MAX_DEPTH,
) -> float:
    """
    Integrate f over [a, b] by adaptive Simpson's rule.

    Intervals are halved until the two-panel estimate agrees with the one-panel
    estimate to 15 * tol (the tolerance is split between halves), and the accepted
    value carries the Richardson correction. The first MIN_DEPTH levels are always
    split so that a lucky agreement at three nodes cannot end the recursion.

    Args:
        f: Integrand
        a: Lower limit
        b: Upper limit
        tol: Absolute error tolerance
        max_depth: Recursion cap; intervals at the cap are accepted as they are

    Returns:
        float: The integral estimate
    """
    if tol <= 0:
        raise HolonetError(f"tolerance must be positive, got {tol}")
    if a == b:
        return 0.0

    def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
        return h / 3.0 * (fa + 4.0 * fm + fb)

    def _adaptive(a: float, b: float, fa: float, fm: float, fb: float, whole: float, depth: int, tol: float) -> float:
        m = (a + b) / 2.0
        h = (b - a) / 4.0
        flm = f((a + m) / 2.0)
        frm = f((m + b) / 2.0)
        left = _simpson(fa, flm, fm, h)
        right = _simpson(fm, frm, fb, h)
        error_estimate = (left + right - whole) / 15.0

        if depth >= MIN_DEPTH and (depth >= max_depth or abs(error_estimate) < tol):
            if depth >= max_depth:
                logger.debug("adaptive Simpson hit depth %s on [%s, %s]", max_depth, a, b)
            return left + right + error_estimate

        return _adaptive(a, m, fa, flm, fm, left, depth + 1, tol / 2.0) + _adaptive(
            m, b, fm, frm, fb, right, depth + 1, tol / 2.0
        )

    fa, fm, fb = f(a), f((a + b) / 2.0), f(b)
    return _adaptive(a, b, fa, fm, fb, _simpson(fa, fm, fb, (b - a) / 2.0), 0, tol)


def segment_integral(conn: ConnectionField, p: Point, q: Point, tol: float = 1e-10) -> float:
    """
    Integral of A along the straight segment p -> q.

    The quadrature always runs from the lexicographically smaller endpoint, so the
    value for q -> p is the exact negative of the value for p -> q.

    Raises:
        EvaluationError: If A is undefined at a quadrature node
    """
    p = (float(p[0]), float(p[1]))
    q = (float(q[0]), float(q[1]))
    if p == q:
        return 0.0
    if q < p:
        return -segment_integral(conn, q, p, tol)
    return integrate_adaptive_simpson(conn.along(p, q), 0.0, 1.0, tol)


def line_integral(conn: ConnectionField, polyline: Sequence[Point], tol: float = 1e-10) -> float:
    """
    Integral of A_x dx + A_y dy along a polyline.

    Each of the k segments is integrated to tolerance tol / k and the segment values
    are summed with math.fsum, so the result is additive under concatenation and
    changes sign exactly under reversal.

    Raises:
        HolonetError: On fewer than two points or a non-positive tolerance
        EvaluationError: If A is undefined at a quadrature node
    """
    points = list(polyline)
    if len(points) < 2:
        raise HolonetError(f"a polyline needs at least two points, got {len(points)}")
    if not tol > 0:
        raise HolonetError(f"tolerance must be positive, got {tol}")

    segment_tol = tol / (len(points) - 1)
    return math.fsum(segment_integral(conn, p, q, segment_tol) for p, q in zip(points, points[1:]))
