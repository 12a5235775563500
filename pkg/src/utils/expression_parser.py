"""
Expression Parser
Recursive-descent parser for polynomial and Laurent expressions

Grammar (highest precedence first):
    power   := primary ('^' ['-'] INT)?
    unary   := '-' unary | power
    term    := unary (('*' | '/') unary | unary)*      juxtaposition multiplies
    expr    := term (('+' | '-') term)*
    primary := INT ['/' INT] | IDENT | '(' expr ')'
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Union

from ..core.errors import ParseError, UnknownVariableError, ZeroInputError
from ..core.laurent import LaurentPoly
from ..core.orders import GREVLEX, MonomialOrder
from ..core.poly import Poly, PolyRing

# Set up logging
logger = logging.getLogger(__name__)

Value = Union[Poly, LaurentPoly]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


OPERATORS = "+-*/^"


def tokenize(src: str) -> List[Token]:
    """Split into INT, IDENT, OP, LPAREN, RPAREN, COMMA and a final EOF; offsets are UTF-8 byte offsets"""
    tokens: List[Token] = []
    pos = 0
    offset = 0
    while pos < len(src):
        ch = src[pos]
        if ch.isspace():
            pos += 1
            offset += len(ch.encode("utf-8"))
            continue
        start, start_offset = pos, offset
        if ch.isdigit():
            while pos < len(src) and src[pos].isdigit():
                pos += 1
            kind = "INT"
        elif ch.isalpha() or ch == "_":
            while pos < len(src) and (src[pos].isalnum() or src[pos] == "_"):
                pos += 1
            kind = "IDENT"
        elif ch in OPERATORS:
            pos += 1
            kind = "OP"
        elif ch == "(":
            pos += 1
            kind = "LPAREN"
        elif ch == ")":
            pos += 1
            kind = "RPAREN"
        elif ch == ",":
            pos += 1
            kind = "COMMA"
        else:
            raise ParseError(f"unexpected character {ch!r}", offset, src)
        text = src[start:pos]
        offset += len(text.encode("utf-8"))
        tokens.append(Token(kind, text, start_offset))
    tokens.append(Token("EOF", "", offset))
    return tokens


# ---------------------------------------------------------------------------
# Syntax tree
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Int:
    value: int
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Rational:
    num: int
    den: int
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Group:
    inner: "Node"
    offset: int = field(default=0, compare=False)


Node = Union[Int, Rational, Var, Neg, BinOp, Pow, Group]


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: Optional[Token] = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(message, tok.offset, self.src)

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            wanted = text or kind.lower()
            found = tok.text or "end of input"
            raise self.error(f"expected {wanted}, found {found}")
        return self.advance()

    def at_op(self, ops: str) -> bool:
        tok = self.peek()
        return tok.kind == "OP" and tok.text in ops

    def starts_primary(self) -> bool:
        return self.peek().kind in ("INT", "IDENT", "LPAREN")

    def expr(self) -> Node:
        node = self.term()
        while self.at_op("+-"):
            tok = self.advance()
            node = BinOp(tok.text, node, self.term(), tok.offset)
        return node

    def term(self) -> Node:
        node = self.unary()
        while True:
            if self.at_op("*/"):
                tok = self.advance()
                node = BinOp(tok.text, node, self.unary(), tok.offset)
            elif self.starts_primary():
                offset = self.peek().offset
                node = BinOp("*", node, self.unary(), offset)
            else:
                return node

    def unary(self) -> Node:
        if self.at_op("-"):
            tok = self.advance()
            return Neg(self.unary(), tok.offset)
        return self.power()

    def power(self) -> Node:
        base = self.primary()
        if not self.at_op("^"):
            return base
        tok = self.advance()
        sign = 1
        if self.at_op("-"):
            self.advance()
            sign = -1
        if self.peek().kind != "INT":
            raise self.error("malformed exponent: expected an integer")
        exponent = sign * int(self.advance().text)
        if self.at_op("^"):
            raise self.error("malformed exponent: chained powers need parentheses")
        return Pow(base, exponent, tok.offset)

    def primary(self) -> Node:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            if self.at_op("/") and self.tokens[self.pos + 1].kind == "INT":
                self.advance()
                den = self.advance()
                return Rational(int(tok.text), int(den.text), tok.offset)
            return Int(int(tok.text), tok.offset)
        if tok.kind == "IDENT":
            self.advance()
            return Var(tok.text, tok.offset)
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.expr()
            self.expect("RPAREN")
            return Group(inner, tok.offset)
        if tok.kind == "EOF":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected '{tok.text}'")


def parse_expr(src: str) -> Node:
    parser = _Parser(src)
    if parser.peek().kind == "EOF":
        raise parser.error("empty expression")
    node = parser.expr()
    parser.expect("EOF")
    return node


def parse_expr_list(src: str) -> List[Node]:
    """Comma-separated expressions"""
    parser = _Parser(src)
    nodes = []
    while True:
        if parser.peek().kind in ("EOF", "COMMA"):
            raise parser.error("empty expression")
        nodes.append(parser.expr())
        if parser.peek().kind == "EOF":
            return nodes
        parser.expect("COMMA")


def to_text(node: Node) -> str:
    """Print a tree so that parse_expr gives it back"""
    if isinstance(node, Int):
        return str(node.value)
    if isinstance(node, Rational):
        return f"{node.num}/{node.den}"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return "-" + to_text(node.operand)
    if isinstance(node, Group):
        return "(" + to_text(node.inner) + ")"
    if isinstance(node, Pow):
        return f"{to_text(node.base)}^{node.exponent}"
    if isinstance(node, BinOp):
        sep = f" {node.op} " if node.op in "+-" else node.op
        return to_text(node.left) + sep + to_text(node.right)
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParseContext:
    """Variables and field of the target ring, with an optional Laurent variable"""

    ring: PolyRing
    laurent_var: Optional[str] = None

    def __post_init__(self):
        if self.laurent_var is not None and self.laurent_var not in self.ring.variables:
            raise UnknownVariableError(f"Laurent variable '{self.laurent_var}' is not among {list(self.ring.variables)}")

    @property
    def coeff_ring(self) -> PolyRing:
        return self.ring.drop([self.laurent_var]) if self.laurent_var else self.ring

    def constant(self, c) -> Value:
        if self.laurent_var:
            return LaurentPoly.monomial(self.coeff_ring, self.laurent_var, 0, c)
        return self.ring.const(c)

    def variable(self, name: str) -> Value:
        if name == self.laurent_var:
            return LaurentPoly.monomial(self.coeff_ring, name, 1, 1)
        if self.laurent_var:
            return LaurentPoly(self.coeff_ring, self.laurent_var, {0: self.coeff_ring.var(name)})
        return self.ring.var(name)


def _is_unit(value: Value) -> bool:
    if isinstance(value, LaurentPoly):
        return value.is_unit_monomial()
    return value.is_constant() and not value.is_zero()


def _inverse(value: Value) -> Value:
    if isinstance(value, LaurentPoly):
        return value ** -1
    return value.ring.const(value.ring.field.inv(value.constant_term()))


def evaluate(node: Node, ctx: ParseContext, src: str = "") -> Value:
    field_spec = ctx.ring.field
    if isinstance(node, Int):
        return ctx.constant(node.value)
    if isinstance(node, Rational):
        if node.den == 0:
            raise ParseError("division by zero", node.offset, src)
        try:
            return ctx.constant(field_spec.normalize(Fraction(node.num, node.den)))
        except ZeroInputError:
            raise ParseError(f"{node.num}/{node.den} has no value in {field_spec}", node.offset, src)
    if isinstance(node, Var):
        if node.name not in ctx.ring.variables:
            raise UnknownVariableError(f"unknown variable '{node.name}' at byte {node.offset}")
        return ctx.variable(node.name)
    if isinstance(node, Group):
        return evaluate(node.inner, ctx, src)
    if isinstance(node, Neg):
        return -evaluate(node.operand, ctx, src)
    if isinstance(node, Pow):
        base = evaluate(node.base, ctx, src)
        if node.exponent < 0:
            if not isinstance(base, LaurentPoly):
                raise ParseError("negative exponents need a Laurent variable", node.offset, src)
            if not base.is_unit_monomial():
                raise ParseError("negative exponent of a non-unit", node.offset, src)
        return base ** node.exponent
    if isinstance(node, BinOp):
        left = evaluate(node.left, ctx, src)
        right = evaluate(node.right, ctx, src)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if not _is_unit(right):
            raise ParseError("division by a non-unit", node.offset, src)
        return left * _inverse(right)
    raise TypeError(f"not an expression node: {node!r}")


def parse_poly(src: str, ctx: ParseContext) -> Value:
    """Parse and evaluate one expression in the context ring"""
    return evaluate(parse_expr(src), ctx, src)


def parse_poly_list(src: str, ctx: ParseContext) -> List[Value]:
    return [evaluate(node, ctx, src) for node in parse_expr_list(src)]


def make_context(variables: str, field_spec, laurent: Optional[str] = None, order: MonomialOrder = GREVLEX) -> ParseContext:
    """Context from a comma-separated variable list such as 'x,y,z'"""
    names = tuple(v.strip() for v in variables.split(",") if v.strip())
    if not names and laurent is None:
        raise ParseError("no variables declared", 0, variables)
    if laurent is not None and laurent not in names:
        names = names + (laurent,)
    return ParseContext(PolyRing(field_spec, names, order), laurent)
