"""Symbolic calculus for the information limit aleph_{-1} = lim log x.

A term is either a finite real (degree 0) or (aleph_{-1})^m with m >= 1.
Infinite terms are coefficient-blind: aleph * a = aleph * b for finite
nonzero a, b, and addition keeps the term of highest degree.
"""
from __future__ import annotations

import ast
from dataclasses import dataclass

ALEPH = "ℵ₋₁"


@dataclass(frozen=True)
class AlephTerm:
    degree: int = 0
    finite: float = 0.0

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be >= 0")
        if self.degree > 0 and self.finite != 0.0:
            # coefficients carry no meaning at positive degree
            object.__setattr__(self, "finite", 0.0)

    @property
    def is_finite(self) -> bool:
        return self.degree == 0

    def __add__(self, other: "AlephTerm") -> "AlephTerm":
        return aleph_add(self, other)

    def __sub__(self, other: "AlephTerm") -> "AlephTerm":
        return aleph_sub(self, other)

    def __mul__(self, other: "AlephTerm") -> "AlephTerm":
        return aleph_mul(self, other)

    def __truediv__(self, other: "AlephTerm") -> "AlephTerm":
        return aleph_div(self, other)

    def __pow__(self, m: int) -> "AlephTerm":
        if not isinstance(m, int) or m < 0:
            raise ValueError("powers must be natural")
        out = finite(1.0)
        for _ in range(m):
            out = aleph_mul(out, self)
        return out

    def __str__(self) -> str:
        if self.degree == 0:
            return f"{self.finite:g}"
        if self.degree == 1:
            return ALEPH
        return f"({ALEPH})^{self.degree}"


def finite(v: float) -> AlephTerm:
    return AlephTerm(0, float(v))


def aleph(degree: int = 1) -> AlephTerm:
    if degree < 1:
        raise ValueError("aleph terms have degree >= 1")
    return AlephTerm(degree)


ALEPH_1 = AlephTerm(1)


def aleph_add(a: AlephTerm, b: AlephTerm) -> AlephTerm:
    if a.degree == b.degree == 0:
        return finite(a.finite + b.finite)
    return AlephTerm(max(a.degree, b.degree))


def aleph_sub(a: AlephTerm, b: AlephTerm) -> AlephTerm:
    """Subtraction is absorbed like addition: aleph - aleph = aleph."""
    if a.degree == b.degree == 0:
        return finite(a.finite - b.finite)
    return AlephTerm(max(a.degree, b.degree))


def aleph_mul(a: AlephTerm, b: AlephTerm) -> AlephTerm:
    if a.degree == b.degree == 0:
        return finite(a.finite * b.finite)
    # a finite zero factor annihilates; other finite factors are absorbed
    if (a.is_finite and a.finite == 0.0) or (b.is_finite and b.finite == 0.0):
        return finite(0.0)
    return AlephTerm(a.degree + b.degree)


def aleph_div(a: AlephTerm, b: AlephTerm) -> AlephTerm:
    """Degrees subtract; equal positive degrees give 1, negative degrees give 0."""
    if b.is_finite and b.finite == 0.0:
        raise ZeroDivisionError("division by the finite term 0")
    if a.degree == b.degree == 0:
        return finite(a.finite / b.finite)
    if a.is_finite and a.finite == 0.0:
        return finite(0.0)
    d = a.degree - b.degree
    if d > 0:
        return AlephTerm(d)
    if d == 0:
        return finite(1.0)
    # lim (log x)^-m = 0
    return finite(0.0)


_NAMES = {"a", "aleph", "A", "I", ALEPH, "ℵ"}


def parse_aleph(text: str) -> AlephTerm:
    """Evaluate e.g. `a + a`, `a / a`, `a^2 + a`, `I(x) * I(y)`.

    The names a, aleph, A and the calls I(x), I(y), log(n) all stand for
    aleph_{-1}; numbers are finite terms.
    """
    src = text.replace("^", "**").replace(ALEPH, "a").replace("ℵ", "a")
    try:
        tree = ast.parse(src, mode="eval").body
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None

    def ev(node: ast.expr) -> AlephTerm:
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
            return finite(node.value)
        if isinstance(node, ast.Name) and node.id in _NAMES:
            return ALEPH_1
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in ("I", "log"):
            return ALEPH_1
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            v = ev(node.operand)
            return finite(-v.finite) if v.is_finite else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0:
                    return ev(node.left) ** exp.value
                raise ValueError("exponents must be natural literals")
            ops = {ast.Add: aleph_add, ast.Sub: aleph_sub, ast.Mult: aleph_mul, ast.Div: aleph_div}
            fn = ops.get(type(node.op))
            if fn is not None:
                return fn(ev(node.left), ev(node.right))
        raise ValueError(f"unsupported syntax in aleph expression: {ast.unparse(node)!r}")

    return ev(tree)
