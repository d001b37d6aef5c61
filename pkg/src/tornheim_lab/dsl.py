"""A small expression language over the library.

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := ["-"] (number | "i" | call | "(" expr ")")
    call   := name "(" args [";" args] ")"
    number := decimal | integer "/" integer

Functions: T(s,t,u; x,y)  zeta(s; x)  zetaR(s)  K(a,b; x,y)  U(a,b; x,y)
L(a,b; phi,chi,psi)  tau(chi)  binom(n,k)  chi(k,i).

Literals are exact rationals, so twists like 1/3 reach the evaluators
without rounding.  A number written directly against ``i`` (``0.5i``) is
shorthand for ``0.5*i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .dirichlet import DirichletCharacter, character, double_L, gauss_sum
from .errors import DomainError, ExpressionSyntaxError, TornheimError
from .series import SummationConfig, ValueWithError
from .tornheim import K_closed_form, T, U_value, binom
from .zeta import periodic_zeta, riemann_zeta


# -- AST ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Number:
    value: Fraction
    text: str


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    twists: tuple | None = None


# name -> (arguments before ";", arguments after ";" or None when no ";" is allowed)
ARITY = {
    "T": (3, 2),
    "zeta": (1, 1),
    "zetaR": (1, None),
    "K": (2, 2),
    "U": (2, 2),
    "L": (2, 3),
    "tau": (1, None),
    "binom": (2, None),
    "chi": (2, None),
}


# -- lexer --------------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+|\n)
  | (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/(),;])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # num, int, name, op, end
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    out, pos, line, col = [], 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind, tok = m.lastgroup, m.group()
        if kind == "num":
            after = m.end()
            if after < len(text) and text[after] == "i" and not re.match(r"[A-Za-z_0-9]", text[after + 1:after + 2]):
                out.append(Token("imagnum", tok, line, col))
                pos, col = after + 1, col + len(tok) + 1
                continue
            kind = "int" if tok.isdigit() else "num"
        if kind == "ws":
            if tok == "\n":
                line, col = line + 1, 1
            else:
                col += len(tok)
        else:
            out.append(Token(kind, tok, line, col))
            col += len(tok)
        pos = m.end()
    out.append(Token("end", "", line, col))
    return out


# -- parser ---------------------------------------------------------------------------

_ATOM_START = ("number", "'i'", "name", "'('", "'-'")


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected, tok: Token | None = None):
        tok = tok or self.tok
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExpressionSyntaxError(f"unexpected {what}", tok.line, tok.column, expected)

    def is_op(self, *ops) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def take(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, op: str, also=()):
        if not self.is_op(op):
            self.fail((f"'{op}'",) + tuple(also))
        return self.take()

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            self.fail(("'+'", "'-'", "'*'", "'/'", "end of input"))
        return node

    def expr(self):
        node = self.term()
        while self.is_op("+", "-"):
            op = self.take().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.is_op("*", "/"):
            op = self.take().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        if self.is_op("-"):
            self.take()
            return Neg(self.atom())
        return self.atom()

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.take()
            nxt = self.toks[self.i + 1] if self.i + 1 < len(self.toks) else None
            if self.is_op("/") and nxt is not None and nxt.kind == "int":
                self.take()
                den = self.take()
                if int(den.text) == 0:
                    raise ExpressionSyntaxError("zero denominator in rational literal", den.line, den.column,
                                                ("positive integer",))
                return Number(Fraction(int(t.text), int(den.text)), f"{t.text}/{den.text}")
            return Number(Fraction(int(t.text)), t.text)
        if t.kind == "num":
            self.take()
            return Number(Fraction(t.text), t.text)
        if t.kind == "imagnum":
            self.take()
            return BinOp("*", Number(Fraction(t.text), t.text), Imag())
        if t.kind == "name":
            self.take()
            if t.text == "i":
                return Imag()
            if t.text not in ARITY:
                raise ExpressionSyntaxError(f"unknown function {t.text!r}", t.line, t.column,
                                            tuple(sorted(ARITY)) + ("'i'",))
            return self.call(t)
        if self.is_op("("):
            self.take()
            node = self.expr()
            self.expect(")", ("'+'", "'-'", "'*'", "'/'"))
            return node
        self.fail(_ATOM_START)

    def call(self, name_tok: Token):
        name = name_tok.text
        before, after = ARITY[name]
        self.expect("(")
        args = self.arglist(before, ";" if after is not None else ")")
        twists = None
        if after is not None:
            self.expect(";")
            twists = self.arglist(after, ")")
        self.expect(")")
        return Call(name, tuple(args), None if twists is None else tuple(twists))

    def arglist(self, count, closer):
        args = [self.expr()]
        while len(args) < count:
            if not self.is_op(","):
                self.fail(("','",), self.tok)
            self.take()
            args.append(self.expr())
        if self.is_op(","):
            self.fail((f"'{closer}'",))
        return args


def parse_expression(text: str):
    """Parse text into an AST; ExpressionSyntaxError carries line, column and the expected tokens."""
    return _Parser(text).parse()


# -- printer ----------------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _glues_to_slash(node) -> bool:
    # an integer or rational literal right after "/" would merge into one literal
    return isinstance(node, Number) and (node.text.isdigit() or "/" in node.text)


def to_text(node) -> str:
    """Canonical text; parsing it gives back an equal AST."""
    return _show(node, 0)


def _show(node, ctx: int) -> str:
    if isinstance(node, Number):
        return node.text
    if isinstance(node, Imag):
        return "i"
    if isinstance(node, Neg):
        return "-" + _atom(node.operand)
    if isinstance(node, Call):
        inner = ", ".join(to_text(a) for a in node.args)
        if node.twists is not None:
            inner += "; " + ", ".join(to_text(a) for a in node.twists)
        return f"{node.name}({inner})"
    p = _PREC[node.op]
    left = _show(node.left, p)
    right = _show(node.right, p + 1)
    if node.op == "/" and _glues_to_slash(node.right):
        right = f"({right})"
    text = f"{left} {node.op} {right}" if p == 1 else f"{left}{node.op}{right}"
    return f"({text})" if p < ctx else text


def _atom(node) -> str:
    text = to_text(node)
    if isinstance(node, (BinOp, Neg)):
        return f"({text})"
    return text


# -- evaluation ---------------------------------------------------------------------------


def _exact(v, where: str):
    """A Python number from an exact value (Fraction or zero-error ValueWithError)."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, ValueWithError) and v.abs_err == 0:
        z = v.value
        return z.real if z.imag == 0 else z
    raise DomainError(f"{where} must be an exact number")


def _exponent(v):
    v = _exact(v, "exponent")
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else float(v)
    return v


def _twist(v):
    v = _exact(v, "twist")
    if isinstance(v, complex):
        raise DomainError("twist must be real")
    return v


def _integer(v, what="argument"):
    v = _exact(v, what)
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    if isinstance(v, float) and v.is_integer():
        return int(v)
    raise DomainError(f"{what} must be an integer")


def _char(v) -> DirichletCharacter:
    if not isinstance(v, DirichletCharacter):
        raise DomainError("expected a character chi(k, i)")
    return v


def _lift(v) -> ValueWithError:
    if isinstance(v, DirichletCharacter):
        raise DomainError("a character cannot take part in arithmetic")
    if isinstance(v, Fraction):
        return ValueWithError(complex(v))
    return v


def _arith(op, a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        if op == "/":
            if b == 0:
                raise DomainError("division by zero")
            return a / b
        return {"+": a + b, "-": a - b, "*": a * b}[op]
    x, y = _lift(a), _lift(b)
    if op == "/":
        try:
            return x / y
        except ZeroDivisionError:
            raise DomainError("division by zero") from None
    return {"+": x + y, "-": x - y, "*": x * y}[op]


def _call(node: Call, args, twists, cfg):
    name = node.name
    if name == "T":
        s, t, u = (_exponent(a) for a in args)
        return T(s, t, u, _twist(twists[0]), _twist(twists[1]), cfg)
    if name == "zeta":
        return periodic_zeta(_exponent(args[0]), _twist(twists[0]), cfg)
    if name == "zetaR":
        return riemann_zeta(_exponent(args[0]))
    if name in ("K", "U"):
        a, b = (_integer(v, "index") for v in args)
        fn = K_closed_form if name == "K" else U_value
        return fn(a, b, _twist(twists[0]), _twist(twists[1]), cfg)
    if name == "L":
        a, b = (_integer(v, "index") for v in args)
        return double_L(a, b, *(_char(c) for c in twists), cfg)
    if name == "tau":
        return ValueWithError(gauss_sum(_char(args[0])))
    if name == "binom":
        return Fraction(binom(*(_integer(v) for v in args)))
    if name == "chi":
        return character(*(_integer(v) for v in args))
    raise DomainError(f"unknown function {name!r}")


def _tag(exc: Exception, node) -> Exception:
    if getattr(exc, "expression", None) is None:
        exc.expression = to_text(node)
        if exc.args:
            exc.args = (f"in {exc.expression}: {exc.args[0]}",) + exc.args[1:]
    return exc


def evaluate(node, cfg: SummationConfig | None = None):
    """Value of an AST: Fraction when exact, else ValueWithError (or a character).

    Errors raised inside a call are re-raised with the offending
    subexpression attached as ``exc.expression``.
    """
    if isinstance(node, Number):
        return node.value
    if isinstance(node, Imag):
        return ValueWithError(1j)
    if isinstance(node, Neg):
        v = evaluate(node.operand, cfg)
        return -v if isinstance(v, Fraction) else -_lift(v)
    if isinstance(node, BinOp):
        a, b = evaluate(node.left, cfg), evaluate(node.right, cfg)
        try:
            return _arith(node.op, a, b)
        except (TornheimError, ArithmeticError) as exc:
            raise _tag(exc, node)
    args = [evaluate(a, cfg) for a in node.args]
    twists = [evaluate(a, cfg) for a in node.twists] if node.twists is not None else None
    try:
        return _call(node, args, twists, cfg)
    except (TornheimError, ArithmeticError, ValueError) as exc:
        raise _tag(exc, node)


def as_value(v) -> ValueWithError:
    """Normalise an evaluation result to ValueWithError."""
    return _lift(v)


def evaluate_text(text: str, cfg: SummationConfig | None = None):
    return evaluate(parse_expression(text), cfg)
