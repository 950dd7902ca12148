"""A small expression language for real functions of one variable.

Grammar, loosest binding first::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := primary ("^" unary)?
    primary := NUMBER | NAME | NAME "(" expr ("," expr)* ")" | "(" expr ")"

``^`` is right-associative and binds tighter than unary minus, so ``-x^2`` is
``-(x^2)`` and ``2^3^2`` is ``2^9``.  ``pi`` and ``e`` are constants.  Implicit
multiplication such as ``2x`` is rejected.

Compiled functions never raise on bad arithmetic: division by zero, logs of
non-positive numbers and other domain failures return ``inf`` or ``nan``, which
the quadrature layer then handles per its own contract.

>>> f = compile(parse("a*x+b"), "x", {"a": 2, "b": 1})
>>> f(3)
7.0
"""

from __future__ import annotations

import math
import re
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass
from types import MappingProxyType

from . import specfun

__all__ = [
    "ArityError",
    "BinOp",
    "Call",
    "CompiledFunction",
    "Const",
    "Expr",
    "ExprError",
    "ExprSyntaxError",
    "FUNCTIONS",
    "Neg",
    "UnboundNameError",
    "UnknownFunctionError",
    "Var",
    "compile",
    "free_names",
    "parse",
    "to_string",
]


# -- errors -------------------------------------------------------------------


class ExprError(ValueError):
    """Base class for expression errors."""


class ExprSyntaxError(ExprError):
    """Malformed input; ``offset`` is the byte offset into the UTF-8 text."""

    def __init__(self, message: str, offset: int, expected: str | None = None):
        detail = f"{message} at byte {offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)
        self.offset = offset
        self.expected = expected


class UnknownFunctionError(ExprSyntaxError):
    pass


class ArityError(ExprSyntaxError):
    pass


class UnboundNameError(ExprError):
    def __init__(self, names: list[str]):
        super().__init__("unbound name(s): " + ", ".join(sorted(names)))
        self.names = sorted(names)


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Const:
    value: float
    name: str | None = None


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    child: Expr


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple[Expr, ...]


Expr = Const | Var | Neg | BinOp | Call

CONSTANTS = {"pi": math.pi, "e": math.e}


# -- safe arithmetic ----------------------------------------------------------------


def _div(a: float, b: float) -> float:
    if b == 0.0:
        if a == 0.0 or math.isnan(a):
            return math.nan
        return math.copysign(math.inf, a) * math.copysign(1.0, b)
    return a / b


def _pow(a: float, b: float) -> float:
    if a < 0.0 and not float(b).is_integer():
        return math.nan
    try:
        return math.pow(a, b)
    except OverflowError:
        if a < 0.0 and float(b) % 2.0 == 1.0:
            return -math.inf
        return math.inf
    except ValueError:
        # 0 to a negative power
        return math.inf


def _log(a: float) -> float:
    if a == 0.0:
        return -math.inf
    if a < 0.0 or math.isnan(a):
        return math.nan
    return math.log(a)


def _sqrt(a: float) -> float:
    return math.sqrt(a) if a >= 0.0 else math.nan


def _guard(fn: Callable[..., float], overflow: float = math.inf) -> Callable[..., float]:
    def safe(*args: float) -> float:
        try:
            return float(fn(*args))
        except OverflowError:
            return overflow
        except (ValueError, ZeroDivisionError):
            return math.nan

    safe.__name__ = getattr(fn, "__name__", "safe")
    return safe


def _cosh(a: float) -> float:
    try:
        return math.cosh(a)
    except OverflowError:
        return math.inf


def _sinh(a: float) -> float:
    try:
        return math.sinh(a)
    except OverflowError:
        return math.copysign(math.inf, a)


def _gamma(a: float) -> float:
    if a > specfun.GAMMA_MAX:
        return math.inf
    return specfun.gamma(a)


FUNCTIONS: Mapping[str, tuple[int, Callable[..., float]]] = MappingProxyType(
    {
        "exp": (1, _guard(math.exp)),
        "log": (1, _log),
        "sin": (1, _guard(math.sin)),
        "cos": (1, _guard(math.cos)),
        "tan": (1, _guard(math.tan)),
        "sinh": (1, _sinh),
        "cosh": (1, _cosh),
        "sqrt": (1, _sqrt),
        "abs": (1, abs),
        "pow": (2, _pow),
        "erf": (1, _guard(specfun.erf)),
        "besseli0": (1, _guard(lambda x: specfun.bessel_i(0, x))),
        "besseli1": (1, _guard(lambda x: specfun.bessel_i(1, x))),
        "besselj0": (1, _guard(lambda x: specfun.bessel_j(0, x))),
        "besselj1": (1, _guard(lambda x: specfun.bessel_j(1, x))),
        "si": (1, _guard(specfun.sine_integral)),
        "gamma": (1, _guard(_gamma)),
        "zeta": (1, _guard(specfun.zeta)),
    }
)

_BINOPS: dict[str, Callable[[float, float], float]] = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": lambda a, b: a * b,
    "/": _div,
    "^": _pow,
}


# -- tokenizer and parser -----------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str  # num, name, op, end
    text: str
    offset: int  # bytes


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    byte = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", byte)
        kind = m.lastgroup
        piece = m.group()
        if kind != "ws":
            toks.append(_Tok(kind, piece, byte))
        pos = m.end()
        byte += len(piece.encode("utf-8"))
    toks.append(_Tok("end", "", byte))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        t = self.tok
        if t.text != text or t.kind != "op":
            raise ExprSyntaxError(f"unexpected {_describe(t)}", t.offset, repr(text))
        return self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        t = self.tok
        if t.kind != "end":
            if t.kind in ("num", "name") or t.text == "(":
                raise ExprSyntaxError(
                    "implicit multiplication is not allowed", t.offset, "an operator"
                )
            raise ExprSyntaxError(f"unexpected {_describe(t)}", t.offset, "end of input")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.primary()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            return BinOp("^", base, self.unary())
        return base

    def primary(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self.advance()
            value = float(t.text)
            if math.isinf(value):
                raise ExprSyntaxError(f"number {t.text} overflows", t.offset)
            return Const(value)
        if t.kind == "name":
            self.advance()
            if self.tok.kind == "op" and self.tok.text == "(":
                return self.call(t)
            if t.text in CONSTANTS:
                return Const(CONSTANTS[t.text], t.text)
            if t.text in FUNCTIONS:
                raise ExprSyntaxError(f"function {t.text!r} needs arguments", self.tok.offset, "'('")
            return Var(t.text)
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ExprSyntaxError(f"unexpected {_describe(t)}", t.offset, "a number, name or '('")

    def call(self, name: _Tok) -> Expr:
        if name.text not in FUNCTIONS:
            raise UnknownFunctionError(f"unknown function {name.text!r}", name.offset)
        self.expect("(")
        args = [self.expr()]
        while self.tok.kind == "op" and self.tok.text == ",":
            self.advance()
            args.append(self.expr())
        self.expect(")")
        arity = FUNCTIONS[name.text][0]
        if len(args) != arity:
            raise ArityError(
                f"{name.text} takes {arity} argument(s), got {len(args)}", name.offset
            )
        return Call(name.text, tuple(args))


def _describe(t: _Tok) -> str:
    return "end of input" if t.kind == "end" else repr(t.text)


def parse(text: str | bytes) -> Expr:
    """Parse text into an expression tree.

    Raises
    ------
    ExprSyntaxError
        With the byte offset of the offending token.  Unknown functions and
        wrong argument counts raise the subclasses UnknownFunctionError and
        ArityError.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ExprSyntaxError("input is not valid UTF-8", exc.start) from None
    return _Parser(text).parse()


# -- printing -------------------------------------------------------------------------

_LEVEL = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}
_NEG_LEVEL = 3
_ATOM = 5


def _level(e: Expr) -> int:
    if isinstance(e, BinOp):
        return _LEVEL[e.op]
    if isinstance(e, Neg):
        return _NEG_LEVEL
    if isinstance(e, Const) and e.name is None and math.copysign(1.0, e.value) < 0:
        return _NEG_LEVEL
    return _ATOM


def _wrap(e: Expr, paren: bool) -> str:
    s = to_string(e)
    return f"({s})" if paren else s


def to_string(e: Expr) -> str:
    """Render an expression so that ``parse(to_string(e))`` rebuilds it."""
    if isinstance(e, Const):
        if e.name is not None:
            return e.name
        if math.isnan(e.value) or math.isinf(e.value):
            raise ExprError(f"cannot print non-finite constant {e.value!r}")
        return repr(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        return "-" + _wrap(e.child, _level(e.child) < _NEG_LEVEL)
    if isinstance(e, Call):
        return f"{e.func}({', '.join(to_string(a) for a in e.args)})"
    level = _LEVEL[e.op]
    if e.op == "^":
        left = _wrap(e.left, _level(e.left) <= level)
        right = _wrap(e.right, _level(e.right) < _NEG_LEVEL)
        return f"{left}^{right}"
    left = _wrap(e.left, _level(e.left) < level)
    right = _wrap(e.right, _level(e.right) <= level)
    return f"{left} {e.op} {right}"


# -- compilation ------------------------------------------------------------------------


def _walk(e: Expr) -> Iterator[Expr]:
    yield e
    if isinstance(e, Neg):
        yield from _walk(e.child)
    elif isinstance(e, BinOp):
        yield from _walk(e.left)
        yield from _walk(e.right)
    elif isinstance(e, Call):
        for a in e.args:
            yield from _walk(a)


def free_names(e: Expr) -> set[str]:
    return {n.name for n in _walk(e) if isinstance(n, Var)}


def _build(e: Expr, variable: str, params: Mapping[str, float]) -> Callable[[float], float]:
    if isinstance(e, Const):
        v = e.value
        return lambda x: v
    if isinstance(e, Var):
        if e.name == variable:
            return lambda x: x
        v = params[e.name]
        return lambda x: v
    if isinstance(e, Neg):
        child = _build(e.child, variable, params)
        return lambda x: -child(x)
    if isinstance(e, BinOp):
        op = _BINOPS[e.op]
        left = _build(e.left, variable, params)
        right = _build(e.right, variable, params)
        return lambda x: op(left(x), right(x))
    fn = FUNCTIONS[e.func][1]
    args = [_build(a, variable, params) for a in e.args]
    if len(args) == 1:
        (a0,) = args
        return lambda x: fn(a0(x))
    return lambda x: fn(*(a(x) for a in args))


class CompiledFunction:
    """Immutable callable x -> float produced by :func:`compile`."""

    __slots__ = ("_fn", "expr", "params", "variable")

    def __init__(self, expr: Expr, variable: str, params: Mapping[str, float]):
        object.__setattr__(self, "expr", expr)
        object.__setattr__(self, "variable", variable)
        object.__setattr__(self, "params", MappingProxyType(dict(params)))
        object.__setattr__(self, "_fn", _build(expr, variable, self.params))

    def __setattr__(self, name, value):
        raise AttributeError("CompiledFunction is immutable")

    def __call__(self, x: float) -> float:
        return float(self._fn(float(x)))

    def __repr__(self) -> str:
        return f"CompiledFunction({to_string(self.expr)!r}, {self.variable!r})"


def compile(  # noqa: A001
    e: Expr | str, variable: str = "x", parameters: Mapping[str, float] | None = None
) -> CompiledFunction:
    """Turn an expression into a pure function of ``variable``.

    Parameters
    ----------
    e : Expr or str
        A parsed tree, or text to parse.
    variable : str
        The single free variable.
    parameters : mapping, optional
        Values for every other name appearing in ``e``.

    Raises
    ------
    UnboundNameError
        If a name is neither the variable nor a bound parameter.
    """
    if isinstance(e, str):
        e = parse(e)
    params = {k: float(v) for k, v in (parameters or {}).items()}
    clash = (set(params) | {variable}) & (set(CONSTANTS) | set(FUNCTIONS))
    if clash:
        raise ExprError(f"reserved name(s) cannot be bound: {', '.join(sorted(clash))}")
    missing = free_names(e) - {variable} - set(params)
    if missing:
        raise UnboundNameError(sorted(missing))
    return CompiledFunction(e, variable, params)
