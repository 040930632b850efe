"""C-notation expressions and equations.

Grammar (whitespace is insignificant)::

    equation := expr '=' expr
    expr     := term ('+' term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' NAT)?
    atom     := cycle | VAR | '(' expr ')' | '0'
    cycle    := 'C' '(' NAT ',' NAT ')'

``C(n,p)`` is ``n`` cycles of length ``p``: multiplicity first, length
second.  ``C(0,p)`` is the empty graph; a zero length is rejected.

Parsed trees are normalized: nested sums and products are flattened, and
the constant terms of a sum are folded into one :class:`Const`, so
``C(2,3)+C(1,6)`` parses to a single constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import cycles
from .cycles import ONE, ZERO, CycleSet

__all__ = [
    "ParseError",
    "UnboundVariableError",
    "Const",
    "Var",
    "Add",
    "Mul",
    "Pow",
    "Equation",
    "Basic",
    "Scaled",
    "MultiTarget",
    "SumLhs",
    "Unsupported",
    "parse",
    "parse_expression",
    "parse_equation",
    "normalize_ast",
    "print_canonical",
    "evaluate",
    "variables",
    "classify",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnboundVariableError(ValueError):
    pass


@dataclass(frozen=True)
class Const:
    value: CycleSet


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    children: tuple


@dataclass(frozen=True)
class Mul:
    children: tuple


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


Expr = Union[Const, Var, Add, Mul, Pow]


@dataclass(frozen=True)
class Basic:
    p: int
    q: int
    n: int


@dataclass(frozen=True)
class Scaled:
    m: int
    p: int
    q: int
    n: int


@dataclass(frozen=True)
class MultiTarget:
    m: int
    p: int
    targets: tuple  # of (n_i, q_i)


@dataclass(frozen=True)
class SumLhs:
    monomials: tuple  # of (m_i, p_i)
    q: int
    n: int


@dataclass(frozen=True)
class Unsupported:
    reason: str


Classification = Union[Basic, Scaled, MultiTarget, SumLhs, Unsupported]


@dataclass(frozen=True)
class Equation:
    lhs: Expr
    rhs: Expr

    @property
    def classification(self) -> Classification:
        return classify(self)


# -- tokenizer ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^(),=])|(?P<bad>\S))")


@dataclass
class _Tok:
    kind: str  # 'nat', 'ident', an operator character, or 'eof'
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Tok]:
    tokens = []
    line_starts = [0] + [i + 1 for i, ch in enumerate(text) if ch == "\n"]

    def where(offset):
        line = max(i for i, s in enumerate(line_starts) if s <= offset)
        return line + 1, offset - line_starts[line] + 1

    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        kind = m.lastgroup
        start = m.start(kind)
        line, col = where(start)
        value = m.group(kind)
        if kind == "bad" or value == "-":
            raise ParseError(f"unexpected character {value!r}", line, col)
        tokens.append(_Tok(value if kind == "op" else kind, value, line, col))
    line, col = where(len(text))
    tokens.append(_Tok("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.tokens[self.i]

    def error(self, message: str, tok: _Tok | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.column)

    def take(self, kind: str) -> _Tok:
        tok = self.tok
        if tok.kind != kind:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            wanted = {"nat": "a number", "ident": "a name"}.get(kind, repr(kind))
            self.error(f"expected {wanted}, found {found}")
        self.i += 1
        return tok

    def nat(self) -> int:
        return int(self.take("nat").text)

    def expr(self) -> Expr:
        terms = [self.term()]
        while self.tok.kind == "+":
            self.i += 1
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Add(tuple(terms))

    def term(self) -> Expr:
        factors = [self.factor()]
        while self.tok.kind == "*":
            self.i += 1
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self) -> Expr:
        base = self.atom()
        if self.tok.kind == "^":
            self.i += 1
            return Pow(base, self.nat())
        return base

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "(":
            self.i += 1
            inner = self.expr()
            self.take(")")
            return inner
        if tok.kind == "nat":
            if int(tok.text) != 0:
                self.error(f"bare integer {tok.text} is not an expression; write C({tok.text},1)")
            self.i += 1
            return Const(ZERO)
        if tok.kind == "ident":
            self.i += 1
            if tok.text == "C" and self.tok.kind == "(":
                self.i += 1
                count_tok = self.tok
                count = self.nat()
                self.take(",")
                length_tok = self.tok
                length = self.nat()
                self.take(")")
                if count == 0:
                    return Const(ZERO)
                if length == 0:
                    self.error("cycle length must be positive", length_tok)
                try:
                    return Const(cycles.C(count, length))
                except OverflowError as exc:
                    self.error(str(exc), count_tok)
            return Var(tok.text)
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        self.error(f"expected an expression, found {found}")

    def finish(self):
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}")


def parse_expression(text: str) -> Expr:
    p = _Parser(text)
    e = p.expr()
    p.finish()
    return normalize_ast(e)


def parse_equation(text: str) -> Equation:
    p = _Parser(text)
    lhs = p.expr()
    p.take("=")
    rhs = p.expr()
    p.finish()
    return Equation(normalize_ast(lhs), normalize_ast(rhs))


def parse(text: str) -> Expr | Equation:
    """Parse an expression, or an equation if the text contains ``=``."""
    if "=" in text:
        return parse_equation(text)
    return parse_expression(text)


def normalize_ast(e):
    """Flatten nested sums/products and fold the constant terms of each sum."""
    if isinstance(e, Equation):
        return Equation(normalize_ast(e.lhs), normalize_ast(e.rhs))
    if isinstance(e, (Const, Var)):
        return e
    if isinstance(e, Pow):
        return Pow(normalize_ast(e.base), e.exponent)
    if isinstance(e, Mul):
        flat = []
        for child in map(normalize_ast, e.children):
            flat.extend(child.children if isinstance(child, Mul) else [child])
        return flat[0] if len(flat) == 1 else Mul(tuple(flat))
    if isinstance(e, Add):
        flat, const_at, total = [], None, ZERO
        for child in map(normalize_ast, e.children):
            for c in child.children if isinstance(child, Add) else [child]:
                if isinstance(c, Const):
                    if const_at is None:
                        const_at = len(flat)
                        flat.append(None)
                    total = total + c.value
                else:
                    flat.append(c)
        if const_at is not None:
            flat[const_at] = Const(total)
        return flat[0] if len(flat) == 1 else Add(tuple(flat))
    raise TypeError(f"not an expression: {e!r}")


def _is_atom(e) -> bool:
    return isinstance(e, Var) or (isinstance(e, Const) and len(e.value) <= 1)


def print_canonical(x) -> str:
    """Deterministic text form; parsing it gives back the normalized input."""
    if isinstance(x, CycleSet):
        return str(x)
    if isinstance(x, Equation):
        return f"{print_canonical(x.lhs)} = {print_canonical(x.rhs)}"
    if isinstance(x, Const):
        return str(x.value)
    if isinstance(x, Var):
        return x.name
    if isinstance(x, Add):
        return "+".join(print_canonical(c) for c in x.children)
    if isinstance(x, Mul):
        parts = []
        for c in x.children:
            s = print_canonical(c)
            parts.append(f"({s})" if isinstance(c, Add) or isinstance(c, Const) and len(c.value) > 1 else s)
        return "*".join(parts)
    if isinstance(x, Pow):
        s = print_canonical(x.base)
        return f"{s if _is_atom(x.base) else f'({s})'}^{x.exponent}"
    raise TypeError(f"cannot print {x!r}")


def variables(e) -> set[str]:
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, Const):
        return set()
    if isinstance(e, Pow):
        return variables(e.base)
    if isinstance(e, Equation):
        return variables(e.lhs) | variables(e.rhs)
    return set().union(*(variables(c) for c in e.children))


def evaluate(e, env: dict[str, CycleSet] | None = None) -> CycleSet:
    """Evaluate an expression bottom-up; variables must be bound in ``env``."""
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Var):
        if env is None or e.name not in env:
            raise UnboundVariableError(f"unbound variable {e.name!r}")
        return env[e.name]
    if isinstance(e, Add):
        total = ZERO
        for c in e.children:
            total = total + evaluate(c, env)
        return total
    if isinstance(e, Mul):
        prod = ONE
        for c in e.children:
            prod = prod * evaluate(c, env)
        return prod
    if isinstance(e, Pow):
        return cycles.power(evaluate(e.base, env), e.exponent)
    raise TypeError(f"not an expression: {e!r}")


# -- classification ----------------------------------------------------------

def _poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if not v.is_zero}


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            out = _poly_add(out, {i + j: x * y})
    return out


def _poly(e) -> dict[int, CycleSet]:
    """Univariate polynomial as ``{degree: coefficient}``."""
    if isinstance(e, Const):
        return {} if e.value.is_zero else {0: e.value}
    if isinstance(e, Var):
        return {1: ONE}
    if isinstance(e, Add):
        out: dict = {}
        for c in e.children:
            out = _poly_add(out, _poly(c))
        return out
    if isinstance(e, Mul):
        out = {0: ONE}
        for c in e.children:
            out = _poly_mul(out, _poly(c))
        return out
    if isinstance(e, Pow):
        base, out = _poly(e.base), {0: ONE}
        for _ in range(e.exponent):
            out = _poly_mul(out, base)
        return out
    raise TypeError(f"not an expression: {e!r}")


def classify(eq: Equation) -> Classification:
    """Sort an equation into one of the forms the deciders handle."""
    lhs_vars, rhs_vars = variables(eq.lhs), variables(eq.rhs)
    if rhs_vars:
        return Unsupported("the right-hand side must not contain unknowns")
    if len(lhs_vars) != 1:
        return Unsupported(f"expected exactly one unknown, found {len(lhs_vars)}")
    rhs = evaluate(eq.rhs)
    if rhs.is_zero:
        return Unsupported("the right-hand side is the empty graph")
    poly = _poly(eq.lhs)
    if set(poly) != {1}:
        return Unsupported("the left-hand side must have the form A*X with A nonzero")
    coeff = poly[1]
    if len(coeff) == 1:
        (p, m), = coeff.entries
        if len(rhs) == 1:
            (q, n), = rhs.entries
            return Basic(p, q, n) if m == 1 else Scaled(m, p, q, n)
        return MultiTarget(m, p, tuple((n, q) for q, n in rhs.entries))
    if len(rhs) == 1:
        (q, n), = rhs.entries
        return SumLhs(tuple((m, p) for p, m in coeff.entries), q, n)
    return Unsupported("a sum coefficient with a multi-term right-hand side")
