"""Single-variable expression trees: parsing, evaluation, forward-mode derivatives.

Grammar (recursive descent, no implicit multiplication):

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | power
    power  := atom ("^" factor)?          # right-associative
    atom   := NUMBER | "x" | FUNC "(" expr ")" | "(" expr ")"
    FUNC   := "ln" | "exp" | "sqrt" | "abs" | "sin" | "cos"
    NUMBER := decimal literal with optional exponent

Evaluation accepts floats or numpy arrays and follows numpy broadcasting.
Derivatives are computed by walking the tree once with (value, derivative)
pairs; the value channel performs exactly the same primitive operations as
plain evaluation, so the two agree bit for bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import NamedTuple, Union

import numpy as np

FUNCTIONS = ("ln", "exp", "sqrt", "abs", "sin", "cos")


class ExprError(ValueError):
    """Base class for expression errors."""


class ExprSyntaxError(ExprError):
    def __init__(self, offset: int, expected):
        self.offset = offset
        self.expected = frozenset(expected)
        super().__init__(
            "syntax error at offset %d: expected %s"
            % (offset, " or ".join(sorted(self.expected)))
        )


class UnknownIdentifierError(ExprError):
    def __init__(self, name: str, offset: int):
        self.name = name
        self.offset = offset
        super().__init__("unknown identifier %r at offset %d" % (name, offset))


class DomainError(ExprError):
    """Raised when a node is evaluated outside its mathematical domain."""

    def __init__(self, node_text: str, value, reason: str):
        self.node_text = node_text
        self.value = value
        super().__init__("%s in %r (argument value %s)" % (reason, node_text, value))


# ---------------------------------------------------------------------------
# Tree nodes


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    fn: str  # member of FUNCTIONS
    arg: "Node"


Node = Union[Num, Var, Neg, BinOp, Call]


class Dual(NamedTuple):
    value: float
    deriv: float


# ---------------------------------------------------------------------------
# Tokenizer

_TOKEN = re.compile(
    r"(?P<num>(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<sym>[-+*/^()])"
)

_ATOM_EXPECTED = ("number", "'x'", "function", "'('", "'-'")


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if m is None:
            raise ExprSyntaxError(i, _ATOM_EXPECTED)
        kind = m.lastgroup
        tokens.append((kind, m.group(), i))
        i = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_sym(self, sym: str):
        kind, text, off = self.peek()
        if kind == "sym" and text == sym:
            return self.advance()
        raise ExprSyntaxError(off, ("'%s'" % sym,))

    def parse_expr(self) -> Node:
        node = self.parse_term()
        while True:
            kind, text, _ = self.peek()
            if kind == "sym" and text in "+-":
                self.advance()
                node = BinOp(text, node, self.parse_term())
            else:
                return node

    def parse_term(self) -> Node:
        node = self.parse_factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "sym" and text in "*/":
                self.advance()
                node = BinOp(text, node, self.parse_factor())
            else:
                return node

    def parse_factor(self) -> Node:
        kind, text, _ = self.peek()
        if kind == "sym" and text == "-":
            self.advance()
            return Neg(self.parse_factor())
        return self.parse_power()

    def parse_power(self) -> Node:
        base = self.parse_atom()
        kind, text, _ = self.peek()
        if kind == "sym" and text == "^":
            self.advance()
            return BinOp("^", base, self.parse_factor())
        return base

    def parse_atom(self) -> Node:
        kind, text, off = self.peek()
        if kind == "num":
            self.advance()
            return Num(float(text))
        if kind == "ident":
            self.advance()
            if text == "x":
                return Var()
            if text in FUNCTIONS:
                self.expect_sym("(")
                inner = self.parse_expr()
                self.expect_sym(")")
                return Call(text, inner)
            raise UnknownIdentifierError(text, off)
        if kind == "sym" and text == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect_sym(")")
            return inner
        raise ExprSyntaxError(off, _ATOM_EXPECTED)


# ---------------------------------------------------------------------------
# Evaluation helpers

def _first_offender(arg, mask) -> float:
    # mask is truthy where the argument is out of domain
    flat = np.ravel(np.broadcast_to(arg, np.shape(mask)))
    bad = np.flatnonzero(np.ravel(mask))
    return float(flat[bad[0]]) if bad.size else float(flat[0])


def _check_domain(node: Node, arg, mask, reason: str):
    if np.any(mask):
        raise DomainError(serialize(node), _first_offender(arg, mask), reason)


def integer_exponent(node: Node):
    """Structural integer-exponent detection: a literal with zero fractional
    part, possibly under unary minus. Returns the int, or None."""
    sign = 1
    while isinstance(node, Neg):
        sign = -sign
        node = node.arg
    if isinstance(node, Num) and float(node.value).is_integer() and abs(node.value) <= 2**53:
        return sign * int(node.value)
    return None


def _pow_value(node: BinOp, base, expo_node: Node, expo_value):
    n = integer_exponent(expo_node)
    if n is not None:
        if n < 0:
            _check_domain(node, base, base == 0, "zero base with negative exponent")
        return np.power(base, n)
    _check_domain(node, base, base <= 0, "non-integer exponent requires positive base")
    return np.power(base, expo_value)


def _eval_value(node: Node, x):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return x
    if isinstance(node, Neg):
        return -_eval_value(node.arg, x)
    if isinstance(node, BinOp):
        lv = _eval_value(node.left, x)
        if node.op == "^":
            rv = None if integer_exponent(node.right) is not None else _eval_value(node.right, x)
            return _pow_value(node, lv, node.right, rv)
        rv = _eval_value(node.right, x)
        if node.op == "+":
            return lv + rv
        if node.op == "-":
            return lv - rv
        if node.op == "*":
            return lv * rv
        _check_domain(node, rv, rv == 0, "division by zero")
        return lv / rv
    av = _eval_value(node.arg, x)
    if node.fn == "ln":
        _check_domain(node, av, av <= 0, "logarithm of non-positive value")
        return np.log(av)
    if node.fn == "exp":
        return np.exp(av)
    if node.fn == "sqrt":
        _check_domain(node, av, av < 0, "square root of negative value")
        return np.sqrt(av)
    if node.fn == "abs":
        return np.abs(av)
    if node.fn == "sin":
        return np.sin(av)
    return np.cos(av)


def _eval_dual(node: Node, x):
    # Returns (value, derivative). The value channel repeats _eval_value's
    # operations verbatim so the two paths agree bit for bit.
    if isinstance(node, Num):
        return node.value, 0.0
    if isinstance(node, Var):
        return x, 1.0
    if isinstance(node, Neg):
        v, d = _eval_dual(node.arg, x)
        return -v, -d
    if isinstance(node, BinOp):
        lv, ld = _eval_dual(node.left, x)
        if node.op == "^":
            n = integer_exponent(node.right)
            if n is not None:
                v = _pow_value(node, lv, node.right, None)
                if n == 0:
                    return v, ld * 0.0
                return v, n * np.power(lv, n - 1) * ld
            rv, rd = _eval_dual(node.right, x)
            v = _pow_value(node, lv, node.right, rv)
            return v, v * (rd * np.log(lv) + rv * ld / lv)
        rv, rd = _eval_dual(node.right, x)
        if node.op == "+":
            return lv + rv, ld + rd
        if node.op == "-":
            return lv - rv, ld - rd
        if node.op == "*":
            return lv * rv, ld * rv + lv * rd
        _check_domain(node, rv, rv == 0, "division by zero")
        return lv / rv, (ld * rv - lv * rd) / (rv * rv)
    av, ad = _eval_dual(node.arg, x)
    if node.fn == "ln":
        _check_domain(node, av, av <= 0, "logarithm of non-positive value")
        return np.log(av), ad / av
    if node.fn == "exp":
        v = np.exp(av)
        return v, v * ad
    if node.fn == "sqrt":
        _check_domain(node, av, av < 0, "square root of negative value")
        v = np.sqrt(av)
        return v, ad / (2.0 * v)
    if node.fn == "abs":
        # derivative taken as sign(av), with sign(0) = 0 (documented caveat)
        return np.abs(av), np.sign(av) * ad
    if node.fn == "sin":
        return np.sin(av), np.cos(av) * ad
    return np.cos(av), -np.sin(av) * ad


# ---------------------------------------------------------------------------
# Serialization (minimal parentheses; reparsing yields the identical tree)

_SUM, _PROD, _NEG, _POW, _ATOM = 1, 2, 3, 4, 5


def _prec(node: Node) -> int:
    if isinstance(node, BinOp):
        if node.op in "+-":
            return _SUM
        if node.op in "*/":
            return _PROD
        return _POW
    if isinstance(node, Neg):
        return _NEG
    if isinstance(node, Num) and node.value < 0:
        return _NEG
    return _ATOM


def _num_text(value: float) -> str:
    if float(value).is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(float(value))


def serialize(node: Node) -> str:
    if isinstance(node, Num):
        return _num_text(node.value)
    if isinstance(node, Var):
        return "x"
    if isinstance(node, Neg):
        inner = serialize(node.arg)
        if _prec(node.arg) < _NEG:  # sums and products need parens under unary minus
            inner = "(" + inner + ")"
        return "-" + inner
    if isinstance(node, Call):
        return "%s(%s)" % (node.fn, serialize(node.arg))
    left, right = serialize(node.left), serialize(node.right)
    if node.op in "+-":
        if _prec(node.right) <= _SUM:
            right = "(" + right + ")"
        return left + node.op + right
    if node.op in "*/":
        if _prec(node.left) < _PROD:
            left = "(" + left + ")"
        if _prec(node.right) <= _PROD:
            right = "(" + right + ")"
        return left + node.op + right
    # power: base must be an atom, exponent is a factor
    if _prec(node.left) < _ATOM:
        left = "(" + left + ")"
    if _prec(node.right) in (_SUM, _PROD):
        right = "(" + right + ")"
    return left + "^" + right


# ---------------------------------------------------------------------------
# Public surface


@dataclass(frozen=True)
class Expression:
    """A parsed expression. Structural equality ignores the source text."""

    root: Node
    source: str = field(compare=False, default="")

    def eval(self, x):
        return _eval_value(self.root, x)

    def eval_dual(self, x) -> Dual:
        v, d = _eval_dual(self.root, x)
        return Dual(v, d)

    def serialize(self) -> str:
        return serialize(self.root)

    def __call__(self, x):
        return _eval_value(self.root, x)

    def __str__(self) -> str:
        return self.serialize()


def parse(text: str) -> Expression:
    parser = _Parser(text)
    root = parser.parse_expr()
    kind, _, off = parser.peek()
    if kind != "end":
        raise ExprSyntaxError(off, ("'+'", "'-'", "'*'", "'/'", "'^'", "end of input"))
    return Expression(root, text)
