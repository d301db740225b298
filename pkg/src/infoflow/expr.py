"""Arithmetic expression trees and sparse integer polynomials, with parsers.

Both parsers go through Python's `ast` so operator precedence is the usual
one; `^` is accepted as a synonym for `**`.
"""
from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from typing import Mapping, Union


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Succ:
    child: "Expr"


Expr = Union[Const, Var, Add, Mul, Pow, Succ]


def evaluate(e: Expr, env: Mapping[str, int]) -> int:
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Var):
        try:
            return env[e.name]
        except KeyError:
            raise KeyError(f"unbound variable {e.name!r}") from None
    if isinstance(e, Add):
        return evaluate(e.left, env) + evaluate(e.right, env)
    if isinstance(e, Mul):
        return evaluate(e.left, env) * evaluate(e.right, env)
    if isinstance(e, Pow):
        return evaluate(e.base, env) ** e.exponent
    if isinstance(e, Succ):
        return evaluate(e.child, env) + 1
    raise TypeError(f"not an expression node: {e!r}")


def render(e: Expr) -> str:
    if isinstance(e, Const):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Add):
        return f"({render(e.left)}+{render(e.right)})"
    if isinstance(e, Mul):
        return f"({render(e.left)}*{render(e.right)})"
    if isinstance(e, Pow):
        return f"{render(e.base)}^{e.exponent}"
    return f"S({render(e.child)})"


def leaves(e: Expr) -> list[Expr]:
    if isinstance(e, (Const, Var)):
        return [e]
    if isinstance(e, (Add, Mul)):
        return leaves(e.left) + leaves(e.right)
    if isinstance(e, Pow):
        return leaves(e.base)
    return leaves(e.child)


def _parse_tree(text: str) -> ast.expr:
    src = text.replace("^", "**")
    try:
        return ast.parse(src, mode="eval").body
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None


def parse_expr(text: str) -> Expr:
    """Parse e.g. `(2+98)+(47+53)`, `x*(y*z)`, `x^5`, `S(x)`."""

    def conv(node: ast.expr) -> Expr:
        if isinstance(node, ast.Constant) and type(node.value) is int and node.value >= 0:
            return Const(node.value)
        if isinstance(node, ast.Name):
            return Var(node.id)
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Add):
                return Add(conv(node.left), conv(node.right))
            if isinstance(node.op, ast.Mult):
                return Mul(conv(node.left), conv(node.right))
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0:
                    return Pow(conv(node.left), exp.value)
                raise ValueError("exponents must be natural literals")
        if (
            isinstance(node, ast.Call)
            and isinstance(node.func, ast.Name)
            and node.func.id in ("S", "succ")
            and len(node.args) == 1
            and not node.keywords
        ):
            return Succ(conv(node.args[0]))
        raise ValueError(f"unsupported syntax in expression: {ast.unparse(node)!r}")

    return conv(_parse_tree(text))


_ALIASES = {"x": 1, "y": 2, "z": 3, "w": 4}
_VAR_RE = re.compile(r"x(\d+)$")


@dataclass(frozen=True)
class Polynomial:
    """Sum of c * x1^a1 * ... * xk^ak with integer coefficients."""

    terms: tuple[tuple[int, tuple[int, ...]], ...]
    arity: int

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a polynomial needs at least one term")
        for c, exps in self.terms:
            if len(exps) != self.arity:
                raise ValueError("exponent vector length must equal the arity")
            if any(a < 0 for a in exps):
                raise ValueError("negative exponent")

    @classmethod
    def from_dict(cls, coeffs: Mapping[tuple[int, ...], int], arity: int) -> "Polynomial":
        # highest total degree first, then by exponent vector
        terms = tuple(
            sorted(((c, e) for e, c in coeffs.items() if c != 0), key=lambda ce: (-sum(ce[1]), [-a for a in ce[1]]))
        )
        if not terms:
            terms = ((0, (0,) * arity),)
        return cls(terms, arity)

    @property
    def degree(self) -> int:
        return max((sum(e) for c, e in self.terms if c != 0), default=0)

    def __call__(self, *xs: int) -> int:
        if len(xs) != self.arity:
            raise ValueError(f"expected {self.arity} inputs, got {len(xs)}")
        total = 0
        for c, exps in self.terms:
            t = c
            for x, a in zip(xs, exps):
                if a:
                    t *= x**a
            total += t
        return total

    def __str__(self) -> str:
        parts = []
        for c, exps in self.terms:
            factors = [f"x{i}^{a}" if a > 1 else f"x{i}" for i, a in enumerate(exps, 1) if a]
            body = "*".join([str(abs(c))] + factors)
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def parse_poly(text: str, arity: int | None = None) -> Polynomial:
    """Parse `1*x1^3 + 1*x2^3 - 1*x3^3`; x, y, z, w alias x1..x4.

    Products of sums are expanded, so `(x+y)^2` is accepted too.
    """
    Poly = dict[tuple[int, ...], int]
    names: dict[str, int] = {}

    def var_index(name: str) -> int:
        m = _VAR_RE.match(name)
        if m and int(m.group(1)) >= 1:
            return int(m.group(1))
        if name in _ALIASES:
            return _ALIASES[name]
        raise ValueError(f"unknown variable {name!r}; use x1..xk (or x, y, z, w)")

    # fixed-width exponent vectors, trimmed to the arity at the end
    width = 16

    def mono(idx: int) -> Poly:
        e = [0] * width
        e[idx - 1] = 1
        return {tuple(e): 1}

    def add(p: Poly, q: Poly, sign: int = 1) -> Poly:
        out = dict(p)
        for e, c in q.items():
            out[e] = out.get(e, 0) + sign * c
        return {e: c for e, c in out.items() if c}

    def mul(p: Poly, q: Poly) -> Poly:
        out: Poly = {}
        for e1, c1 in p.items():
            for e2, c2 in q.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return {e: c for e, c in out.items() if c}

    zero = (0,) * width

    def conv(node: ast.expr) -> Poly:
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return {zero: node.value} if node.value else {}
        if isinstance(node, ast.Name):
            idx = var_index(node.id)
            if idx > width:
                raise ValueError(f"at most {width} variables supported")
            names[node.id] = idx
            return mono(idx)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            p = conv(node.operand)
            return {e: -c for e, c in p.items()} if isinstance(node.op, ast.USub) else p
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Add):
                return add(conv(node.left), conv(node.right))
            if isinstance(node.op, ast.Sub):
                return add(conv(node.left), conv(node.right), -1)
            if isinstance(node.op, ast.Mult):
                return mul(conv(node.left), conv(node.right))
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0):
                    raise ValueError("exponents must be natural literals")
                base = conv(node.left)
                out: Poly = {zero: 1}
                for _ in range(exp.value):
                    out = mul(out, base)
                return out
        raise ValueError(f"unsupported syntax in polynomial: {ast.unparse(node)!r}")

    coeffs = conv(_parse_tree(text))
    k = max(names.values(), default=0)
    if arity is not None:
        if arity < k:
            raise ValueError(f"polynomial uses x{k} but arity is {arity}")
        k = arity
    k = max(k, 1)
    trimmed = {e[:k]: c for e, c in coeffs.items()}
    return Polynomial.from_dict(trimmed, k)
