"""
Connection-component expressions.

Grammar (whitespace insignificant):

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := primary ("^" unary)?
    primary := NUMBER | "x" | "y" | FUNC "(" expr ")" | "(" expr ")"
    FUNC    := "sin" | "cos" | "exp"

so ^ binds tighter than unary minus, which binds tighter than * and /; ^ is
right associative and the other binary operators are left associative.
"""

import re
from typing import Callable, List, Literal, NamedTuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..errors import EvaluationError, ExprSyntaxError, UnknownIdentifierError

FUNCTIONS = {"sin": np.sin, "cos": np.cos, "exp": np.exp}
VARIABLES = ("x", "y")


class Num(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float


class Var(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: Literal["x", "y"]


class Neg(BaseModel):
    model_config = ConfigDict(frozen=True)

    operand: "Expr"


class BinOp(BaseModel):
    model_config = ConfigDict(frozen=True)

    op: Literal["+", "-", "*", "/", "^"]
    left: "Expr"
    right: "Expr"


class Call(BaseModel):
    model_config = ConfigDict(frozen=True)

    func: Literal["sin", "cos", "exp"]
    arg: "Expr"


Expr = Union[Num, Var, Neg, BinOp, Call]

for _node in (Neg, BinOp, Call):
    _node.model_rebuild()


class Token(NamedTuple):
    kind: str  # "num", "ident", "op" or "end"
    text: str
    offset: int


_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^()])"
    r")"
)


def tokenize(text: str) -> List[Token]:
    """
    Split an expression into tokens, each tagged with its byte offset.

    Raises:
        ExprSyntaxError: On a character that starts no token
    """
    for offset, ch in enumerate(text):
        if ord(ch) > 127:
            raise ExprSyntaxError(f"non-ASCII character {ch!r}", offset)

    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.lastgroup is None:
            offset = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ExprSyntaxError(f"unexpected character {text[offset]!r}", offset)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, text: str) -> None:
        if self.current.text != text or self.current.kind != "op":
            found = repr(self.current.text) if self.current.kind != "end" else "end of input"
            raise ExprSyntaxError(f"expected {text!r}, found {found}", self.current.offset)
        self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        if self.current.kind != "end":
            raise ExprSyntaxError(f"unexpected {self.current.text!r}", self.current.offset)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self.advance().text
            node = BinOp(op=op, left=node, right=self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.current.kind == "op" and self.current.text in "*/":
            op = self.advance().text
            node = BinOp(op=op, left=node, right=self.unary())
        return node

    def unary(self) -> Expr:
        if self.current.kind == "op" and self.current.text == "-":
            self.advance()
            return Neg(operand=self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.primary()
        if self.current.kind == "op" and self.current.text == "^":
            self.advance()
            return BinOp(op="^", left=base, right=self.unary())
        return base

    def primary(self) -> Expr:
        token = self.current
        if token.kind == "num":
            self.advance()
            return Num(value=float(token.text))
        if token.kind == "ident":
            self.advance()
            if token.text in VARIABLES:
                return Var(name=token.text)
            if token.text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(func=token.text, arg=arg)
            raise UnknownIdentifierError(f"unknown identifier {token.text!r}", token.offset)
        if token.kind == "op" and token.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        found = repr(token.text) if token.kind != "end" else "end of input"
        raise ExprSyntaxError(f"expected a number, variable, function or '(', found {found}", token.offset)


def parse_expr(text: str) -> Expr:
    """
    Parse an expression in x and y.

    Raises:
        ExprSyntaxError: With the byte offset of the offending token
        UnknownIdentifierError: For names other than x, y, sin, cos, exp
    """
    return _Parser(text).parse()


def unparse(node: Expr) -> str:
    """Fully parenthesised text that parses back to the same tree."""
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"(-{unparse(node.operand)})"
    if isinstance(node, Call):
        return f"{node.func}({unparse(node.arg)})"
    return f"({unparse(node.left)} {node.op} {unparse(node.right)})"


Evaluator = Callable[[Union[float, np.ndarray], Union[float, np.ndarray]], Union[float, np.ndarray]]


def _compile(node: Expr) -> Evaluator:
    if isinstance(node, Num):
        value = node.value
        return lambda x, y: value
    if isinstance(node, Var):
        return (lambda x, y: x) if node.name == "x" else (lambda x, y: y)
    if isinstance(node, Neg):
        operand = _compile(node.operand)
        return lambda x, y: -operand(x, y)
    if isinstance(node, Call):
        func = FUNCTIONS[node.func]
        arg = _compile(node.arg)
        return lambda x, y: func(arg(x, y))

    left, right = _compile(node.left), _compile(node.right)
    if node.op == "+":
        return lambda x, y: left(x, y) + right(x, y)
    if node.op == "-":
        return lambda x, y: left(x, y) - right(x, y)
    if node.op == "*":
        return lambda x, y: left(x, y) * right(x, y)
    if node.op == "^":
        return lambda x, y: np.power(left(x, y), right(x, y))

    def divide(x, y):
        denominator = right(x, y)
        if np.any(np.asarray(denominator) == 0):
            raise EvaluationError(f"division by zero at x={x}, y={y}")
        return left(x, y) / denominator

    return divide


def compile_expr(node: Expr) -> Evaluator:
    """
    Turn a tree into a function of (x, y) accepting floats or numpy arrays.

    The function raises EvaluationError on division by zero or a non-finite result.
    """
    inner = _compile(node)

    def evaluate(x, y):
        with np.errstate(all="ignore"):
            result = inner(x, y)
        if not np.all(np.isfinite(result)):
            raise EvaluationError(f"non-finite value at x={x}, y={y}")
        return result

    return evaluate


def evaluate(node: Expr, x: float, y: float) -> float:
    """Evaluate a tree at a single point."""
    return float(compile_expr(node)(x, y))
