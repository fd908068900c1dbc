"""A small expression language for denoting umbrae textually.

Grammar (whitespace insignificant)::

    expr     := sum
    sum      := dot ("+" dot)*
    dot      := atom ("." atom)*
    atom     := NAME | RATIONAL | "(" expr ")" | FUNC "(" args ")"
    NAME     := eps | u | chi | bell | bern | boolu
    FUNC     := D | inv | K | L | had | delta | mom
    RATIONAL := INT ("/" INT)?

The dot binds tighter than "+", so ``u + 2 . chi`` means u + (2 . chi).
A dot whose left operand is a rational is the scalar dot product; with an
umbra on the left it is the umbral dot product, and chains associate to
the left, so ``g . bell . D(a)`` is the composition umbra.  ``mom``
builds an umbra from an explicit moment prefix and ``delta(k)`` the umbra
whose only nonzero higher moment is the k-th.

Parse errors carry the byte offset and the expected-token set; a
canonical printer ``to_text`` round-trips through ``parse``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import umbra as um

__all__ = [
    "Atom",
    "Sum",
    "Dot",
    "Call",
    "ParseError",
    "UnknownNameError",
    "parse",
    "to_text",
    "evaluate",
    "compile_umbra",
]

NAMES = {
    "eps": "eps",
    "u": "unity",
    "chi": "singleton",
    "bell": "bell",
    "bern": "bernoulli",
    "boolu": "boolean_unity",
}
FUNCS = ("D", "inv", "K", "L", "had", "delta", "mom")


@dataclass(frozen=True)
class Atom:
    # a name, a rational, or a moment-list literal
    value: Union[str, Fraction, tuple]


@dataclass(frozen=True)
class Sum:
    terms: tuple  # n-ary, flattened; members are Dot/Call/Atom


@dataclass(frozen=True)
class Dot:
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


ExprNode = Union[Atom, Sum, Dot, Call]


class ParseError(ValueError):
    def __init__(self, position: int, expected: tuple[str, ...], found: str = ""):
        self.position = position
        self.expected = tuple(expected)
        want = " or ".join(expected)
        at = f" (found {found!r})" if found else ""
        super().__init__(f"syntax error at offset {position}: expected {want}{at}")


class UnknownNameError(ParseError):
    def __init__(self, position: int, name: str):
        ValueError.__init__(self, f"unknown name {name!r} at offset {position}")
        self.position = position
        self.expected = ("NAME",)
        self.name = name


class EvalError(ValueError):
    pass


# -- lexer ----------------------------------------------------------------------

_PUNCT = "+.()/,"


def _tokens(src: str) -> list[tuple[str, str, int]]:
    out = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            out.append(("name", src[i:j], i))
            i = j
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < n and src[i + 1].isdigit()):
            j = i + 1
            while j < n and src[j].isdigit():
                j += 1
            out.append(("int", src[i:j], i))
            i = j
            continue
        if ch in _PUNCT:
            out.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(i, ("NAME", "RATIONAL", "(",), found=ch)
    out.append(("end", "", n))
    return out


# -- parser ---------------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokens(src)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(tok[2], (kind,), found=tok[1])
        return self.advance()

    def parse_expr(self) -> ExprNode:
        terms = [self.parse_dot()]
        while self.peek()[0] == "+":
            self.advance()
            terms.append(self.parse_dot())
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms))

    def parse_dot(self) -> ExprNode:
        node = self.parse_atom()
        while self.peek()[0] == ".":
            self.advance()
            node = Dot(node, self.parse_atom())
        return node

    def parse_rational(self) -> Fraction:
        kind, text, pos = self.peek()
        if kind != "int":
            raise ParseError(pos, ("RATIONAL",), found=text)
        self.advance()
        num = int(text)
        if self.peek()[0] == "/":
            self.advance()
            _, dtext, dpos = self.expect("int")
            den = int(dtext)
            if den == 0:
                raise ParseError(dpos, ("nonzero denominator",), found=dtext)
            return Fraction(num, den)
        return Fraction(num)

    def parse_atom(self) -> ExprNode:
        kind, text, pos = self.peek()
        if kind == "int":
            return Atom(self.parse_rational())
        if kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        if kind == "name":
            self.advance()
            if self.peek()[0] == "(":
                if text not in FUNCS:
                    raise UnknownNameError(pos, text)
                self.advance()
                if text == "mom":
                    args: list = [Atom(self.parse_rational())]
                    while self.peek()[0] == ",":
                        self.advance()
                        args.append(Atom(self.parse_rational()))
                    self.expect(")")
                    return Atom(tuple(a.value for a in args))
                if text == "delta":
                    arg = Atom(self.parse_rational())
                    self.expect(")")
                    return Call(text, (arg,))
                args = [self.parse_expr()]
                while self.peek()[0] == ",":
                    self.advance()
                    args.append(self.parse_expr())
                self.expect(")")
                return Call(text, tuple(args))
            if text not in NAMES:
                raise UnknownNameError(pos, text)
            return Atom(text)
        raise ParseError(pos, ("NAME", "RATIONAL", "("), found=text)


def parse(src: str) -> ExprNode:
    """Parse an umbral expression into its tree."""
    p = _Parser(src)
    node = p.parse_expr()
    kind, text, pos = p.peek()
    if kind != "end":
        raise ParseError(pos, ("+", ".", "end of input"), found=text)
    return node


# -- printer ----------------------------------------------------------------------


def to_text(node: ExprNode) -> str:
    """Canonical text; parse(to_text(e)) reproduces e structurally."""
    if isinstance(node, Atom):
        v = node.value
        if isinstance(v, str):
            return v
        if isinstance(v, Fraction):
            return str(v)
        return f"mom({', '.join(str(m) for m in v)})"
    if isinstance(node, Sum):
        return " + ".join(to_text(t) for t in node.terms)
    if isinstance(node, Dot):
        left = to_text(node.left)
        if isinstance(node.left, Sum):
            left = f"({left})"
        right = to_text(node.right)
        if isinstance(node.right, (Sum, Dot)):
            right = f"({right})"
        return f"{left} . {right}"
    if isinstance(node, Call):
        return f"{node.func}({', '.join(to_text(a) for a in node.args)})"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluator ---------------------------------------------------------------------


def _is_rational_atom(node: ExprNode) -> bool:
    return isinstance(node, Atom) and isinstance(node.value, Fraction)


def evaluate(node: ExprNode) -> um.Umbra:
    """Map an expression tree onto umbra operations."""
    if isinstance(node, Atom):
        v = node.value
        if isinstance(v, str):
            return um.named(NAMES[v])
        if isinstance(v, Fraction):
            # a bare rational r denotes the deterministic umbra e^{rt}
            return um.sdot(v, um.named("unity"))
        return um.from_moments(v)
    if isinstance(node, Sum):
        return um.usum(*(evaluate(t) for t in node.terms))
    if isinstance(node, Dot):
        if _is_rational_atom(node.left):
            return um.sdot(node.left.value, evaluate(node.right))
        return um.udot(evaluate(node.left), evaluate(node.right))
    if isinstance(node, Call):
        return _call(node)
    raise TypeError(f"not an expression node: {node!r}")


def _arity(node: Call, *counts: int) -> None:
    if len(node.args) not in counts:
        want = " or ".join(str(c) for c in counts)
        raise EvalError(f"{node.func} takes {want} argument(s), got {len(node.args)}")


def _call(node: Call) -> um.Umbra:
    f = node.func
    if f == "D":
        _arity(node, 1)
        return um.deriv(evaluate(node.args[0]))
    if f == "inv":
        _arity(node, 1)
        return um.cinv(evaluate(node.args[0]))
    if f == "K":
        _arity(node, 1, 2)
        parts = [evaluate(a) for a in node.args]
        return um.kappa(*parts)
    if f == "L":
        _arity(node, 1, 2)
        parts = [evaluate(a) for a in node.args]
        return um.lagrange(*parts)
    if f == "had":
        _arity(node, 2)
        return um.had(evaluate(node.args[0]), evaluate(node.args[1]))
    if f == "delta":
        _arity(node, 1)
        arg = node.args[0]
        if not _is_rational_atom(arg) or arg.value.denominator != 1:
            raise EvalError("delta takes a positive integer")
        return um.delta(int(arg.value))
    raise EvalError(f"unknown function {f!r}")


def compile_umbra(src: str) -> um.Umbra:
    """Parse and evaluate in one step."""
    return evaluate(parse(src))
