# expr, connection_field and line_integral must load before compare and
# curvature: the compiler imports them while compare imports the compiler.
from .expr import BinOp, Call, Expr, Neg, Num, Var, compile_expr, evaluate, parse_expr, tokenize, unparse
from .connection_field import ConnectionField
from .line_integral import integrate_adaptive_simpson, line_integral, segment_integral
from .compare import (
    CSV_HEADER,
    LoopComparison,
    RectangleIndex,
    compare_loop,
    compare_rectangles,
    rectangle_quanta,
    wrap_phase,
)
from .curvature import Plaquette, plaquette_curvature, plaquette_quanta

__all__ = [
    "CSV_HEADER",
    "BinOp",
    "Call",
    "ConnectionField",
    "Expr",
    "LoopComparison",
    "Neg",
    "Num",
    "Plaquette",
    "RectangleIndex",
    "Var",
    "compare_loop",
    "compare_rectangles",
    "compile_expr",
    "evaluate",
    "integrate_adaptive_simpson",
    "line_integral",
    "parse_expr",
    "plaquette_curvature",
    "plaquette_quanta",
    "rectangle_quanta",
    "segment_integral",
    "tokenize",
    "unparse",
]
