"""A small expression language for q-series.

Grammar (whitespace-insensitive, no implicit multiplication)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | factor
    factor := atom ("^" factor)?
    atom   := INT | NAME | "(" expr ")" | call
    call   := NAME "(" expr ("," expr)* ")"

"+", "-" and "*" are left-associative, "^" is right-associative.  Built-in
calls: ``poch(a, step, count|inf)``, ``qbinom(m, k)``, ``binom(m, k)`` and
``sum(var, lo, hi, body)``.  Exponents, Pochhammer steps/counts, binom
arguments and sum bounds live in integer context; q and the aux variables
z, x, y are series-valued and may not appear there.  A negative exponent on
a series denotes the multiplicative inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Union

from .errors import (
    DslError,
    NonIntegerExponent,
    ParseError,
    UnboundVariable,
)
from .series import AUX_VARS, MultiSeries, QSeries, poch_finite, poch_infinite, qbinom

RESERVED = {"q", "z", "x", "y", "inf"}


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-" or "*"
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: "Expr"


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


Expr = Union[Int, Name, Neg, BinOp, Pow, Call]


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_SYMBOLS = "+-*^(),"


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, one of _SYMBOLS, or EOF
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"unexpected {tok.kind if tok.kind != 'EOF' else 'end of input'}"
                + (f" {tok.text!r}" if tok.text else ""),
                tok.line,
                tok.col,
                expected=kind,
            )
        return self.advance()

    def parse(self) -> Expr:
        e = self.expr()
        tok = self.peek()
        if tok.kind != "EOF":
            raise ParseError(
                f"trailing input starting at {tok.text!r}",
                tok.line,
                tok.col,
                expected="end of input",
            )
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            e = BinOp(op, e, self.term())
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.peek().kind == "*":
            self.advance()
            e = BinOp("*", e, self.unary())
        return e

    def unary(self) -> Expr:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.factor()

    def factor(self) -> Expr:
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            return Pow(base, self.factor())
        return base

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return Int(int(tok.text))
        if tok.kind == "NAME":
            self.advance()
            if self.peek().kind == "(":
                self.advance()
                args = [self.expr()]
                while self.peek().kind == ",":
                    self.advance()
                    args.append(self.expr())
                self.expect(")")
                return Call(tok.text, tuple(args))
            return Name(tok.text)
        if tok.kind == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(
            f"unexpected {tok.kind if tok.kind != 'EOF' else 'end of input'}"
            + (f" {tok.text!r}" if tok.text else ""),
            tok.line,
            tok.col,
            expected="INT, NAME or '('",
        )


def parse(text: str) -> Expr:
    """Parse source text into an AST; raises ParseError with a position."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def eval_int(e: Expr, bindings: dict) -> int:
    """Evaluate an expression in integer context."""
    if isinstance(e, Int):
        return e.value
    if isinstance(e, Name):
        if e.ident in RESERVED:
            raise NonIntegerExponent(
                f"{e.ident!r} is series-valued and cannot be used as an integer"
            )
        if e.ident not in bindings:
            raise UnboundVariable(f"unbound variable {e.ident!r}")
        return bindings[e.ident]
    if isinstance(e, Neg):
        return -eval_int(e.operand, bindings)
    if isinstance(e, BinOp):
        l = eval_int(e.left, bindings)
        r = eval_int(e.right, bindings)
        return l + r if e.op == "+" else l - r if e.op == "-" else l * r
    if isinstance(e, Pow):
        base = eval_int(e.base, bindings)
        exp = eval_int(e.exponent, bindings)
        if exp < 0:
            raise NonIntegerExponent("negative exponent in integer context")
        return base**exp
    if isinstance(e, Call):
        if e.func == "binom":
            if len(e.args) != 2:
                raise DslError("binom takes exactly 2 arguments")
            m = eval_int(e.args[0], bindings)
            k = eval_int(e.args[1], bindings)
            if k < 0 or m < 0:
                return 0
            return comb(m, k) if k <= m else 0
        raise NonIntegerExponent(
            f"call to {e.func!r} is series-valued and cannot be used as an integer"
        )
    raise DslError(f"cannot evaluate {e!r} as an integer")


def _reciprocal(ms: MultiSeries, trunc: Optional[int]) -> MultiSeries:
    # a single monomial with coefficient +-1 has an exact Laurent reciprocal;
    # anything else needs a unit constant term
    if len(ms.entries) == 1:
        (mono, qs), = ms.entries.items()
        if len(qs.coeffs) == 1:
            (e, c), = qs.coeffs.items()
            if c in (1, -1):
                inv_mono = tuple(-v for v in mono)
                return MultiSeries(
                    {inv_mono: QSeries({-e: c})}, None
                ).truncate(ms.trunc)
    return ms.invert_unit(trunc)


def eval_series(e: Expr, bindings: dict, trunc: Optional[int]) -> MultiSeries:
    """Evaluate an expression in series context."""
    if isinstance(e, Int):
        return MultiSeries.const(e.value)
    if isinstance(e, Name):
        if e.ident == "q":
            return MultiSeries.q(1)
        if e.ident in AUX_VARS:
            return MultiSeries.gen(e.ident)
        if e.ident == "inf":
            raise DslError("'inf' is only valid as the count argument of poch")
        if e.ident not in bindings:
            raise UnboundVariable(f"unbound variable {e.ident!r}")
        return MultiSeries.const(bindings[e.ident])
    if isinstance(e, Neg):
        return eval_series(e.operand, bindings, trunc).neg()
    if isinstance(e, BinOp):
        l = eval_series(e.left, bindings, trunc)
        r = eval_series(e.right, bindings, trunc)
        if e.op == "+":
            return l.add(r)
        if e.op == "-":
            return l.add(r.neg())
        return l.mul(r)
    if isinstance(e, Pow):
        base = eval_series(e.base, bindings, trunc)
        exp = eval_int(e.exponent, bindings)
        if exp >= 0:
            out = base.power(exp)
            return out if trunc is None else out.truncate(trunc)
        inv = _reciprocal(base, trunc)
        out = inv.power(-exp)
        return out if trunc is None else out.truncate(trunc)
    if isinstance(e, Call):
        return _eval_call(e, bindings, trunc)
    raise DslError(f"cannot evaluate {e!r} as a series")


def _eval_call(e: Call, bindings: dict, trunc: Optional[int]) -> MultiSeries:
    if e.func == "poch":
        if len(e.args) != 3:
            raise DslError("poch takes exactly 3 arguments: poch(a, step, count)")
        a = eval_series(e.args[0], bindings, trunc)
        step = eval_int(e.args[1], bindings)
        if step <= 0:
            raise DslError("poch step must be a positive integer")
        count_arg = e.args[2]
        if isinstance(count_arg, Name) and count_arg.ident == "inf":
            if trunc is None:
                raise DslError("poch(..., inf) needs a finite truncation order")
            return poch_infinite(a, step, trunc)
        count = eval_int(count_arg, bindings)
        if count < 0:
            raise DslError("poch count must be nonnegative or inf")
        return poch_finite(a, step, count, trunc=trunc)
    if e.func == "qbinom":
        if len(e.args) != 2:
            raise DslError("qbinom takes exactly 2 arguments")
        m = eval_int(e.args[0], bindings)
        k = eval_int(e.args[1], bindings)
        return MultiSeries.from_qseries(qbinom(m, k))
    if e.func == "binom":
        return MultiSeries.const(eval_int(e, bindings))
    if e.func == "sum":
        if len(e.args) != 4:
            raise DslError("sum takes exactly 4 arguments: sum(var, lo, hi, body)")
        var = e.args[0]
        if not isinstance(var, Name):
            raise DslError("sum index must be a plain name")
        if var.ident in RESERVED:
            raise DslError(f"sum index may not shadow reserved name {var.ident!r}")
        lo = eval_int(e.args[1], bindings)
        hi = eval_int(e.args[2], bindings)
        total = MultiSeries.zero()
        inner = dict(bindings)
        for v in range(lo, hi + 1):
            inner[var.ident] = v
            total = total.add(eval_series(e.args[3], inner, trunc))
        return total
    raise DslError(f"unknown function {e.func!r}")


def evaluate(text: str, bindings: Optional[dict] = None,
             trunc: Optional[int] = None) -> MultiSeries:
    """Parse and evaluate source text in one step."""
    return eval_series(parse(text), dict(bindings or {}), trunc)


# ---------------------------------------------------------------------------
# Pretty-printing
# ---------------------------------------------------------------------------

_LEVEL_ADD, _LEVEL_MUL, _LEVEL_UNARY, _LEVEL_POW, _LEVEL_ATOM = 1, 2, 3, 4, 5


def _level(e: Expr) -> int:
    if isinstance(e, (Int, Name, Call)):
        return _LEVEL_ATOM
    if isinstance(e, Pow):
        return _LEVEL_POW
    if isinstance(e, Neg):
        return _LEVEL_UNARY
    return _LEVEL_MUL if e.op == "*" else _LEVEL_ADD


def _wrap(e: Expr, minimum: int) -> str:
    s = unparse(e)
    return f"({s})" if _level(e) < minimum else s


def unparse(e: Expr) -> str:
    """Render an AST as source text that reparses to an identical AST."""
    if isinstance(e, Int):
        return str(e.value)
    if isinstance(e, Name):
        return e.ident
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, _LEVEL_UNARY)
    if isinstance(e, BinOp):
        if e.op == "*":
            return f"{_wrap(e.left, _LEVEL_MUL)} * {_wrap(e.right, _LEVEL_UNARY)}"
        return f"{_wrap(e.left, _LEVEL_ADD)} {e.op} {_wrap(e.right, _LEVEL_MUL)}"
    if isinstance(e, Pow):
        return f"{_wrap(e.base, _LEVEL_ATOM)}^{_wrap(e.exponent, _LEVEL_POW)}"
    if isinstance(e, Call):
        return f"{e.func}({', '.join(unparse(a) for a in e.args)})"
    raise DslError(f"cannot unparse {e!r}")
