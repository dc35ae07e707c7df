from typing import Callable, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from .expr import Evaluator, Expr, Num, compile_expr, parse_expr, unparse


class ConnectionField(BaseModel):
    """
    A U(1) connection 1-form A = A_x dx + A_y dy on the plane.

    Build it from text with `ConnectionField.parse`; syntax errors surface as
    ExprSyntaxError with the offset into the offending component.
    """

    model_config = ConfigDict(frozen=True)

    ax: Expr = Field(default_factory=lambda: Num(value=0.0), description="A_x(x, y)")
    ay: Expr = Field(default_factory=lambda: Num(value=0.0), description="A_y(x, y)")

    _compiled: Optional[Tuple[Evaluator, Evaluator]] = PrivateAttr(default=None)

    @classmethod
    def parse(cls, ax_text: str = "0", ay_text: str = "0") -> "ConnectionField":
        return cls(ax=parse_expr(ax_text), ay=parse_expr(ay_text))

    @property
    def ax_text(self) -> str:
        return unparse(self.ax)

    @property
    def ay_text(self) -> str:
        return unparse(self.ay)

    def _evaluators(self) -> Tuple[Evaluator, Evaluator]:
        if self._compiled is None:
            self._compiled = (compile_expr(self.ax), compile_expr(self.ay))
        return self._compiled

    def at(self, x: float, y: float) -> Tuple[float, float]:
        """(A_x, A_y) at a point; raises EvaluationError where undefined."""
        fx, fy = self._evaluators()
        return float(fx(x, y)), float(fy(x, y))

    def along(self, p: Tuple[float, float], q: Tuple[float, float]) -> Callable[[float], float]:
        """
        Pullback of A to the segment p -> q parametrised by t in [0, 1]:
        t -> A(p + t (q - p)) . (q - p).
        """
        fx, fy = self._evaluators()
        (x0, y0), (x1, y1) = p, q
        dx, dy = x1 - x0, y1 - y0

        def integrand(t: float) -> float:
            x, y = x0 + t * dx, y0 + t * dy
            value = 0.0
            if dx:
                value += float(fx(x, y)) * dx
            if dy:
                value += float(fy(x, y)) * dy
            return value

        return integrand
