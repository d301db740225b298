"""Exact natural-number helpers and the logarithmic information measure.

All combinatorial quantities are plain Python ints (arbitrary precision).
Information values are floats expressed in units of a configurable log base,
bits by default.
"""
from __future__ import annotations

import contextlib
import math
from fractions import Fraction
from typing import Iterable, Iterator

DEFAULT_BASE = 2.0

_base = DEFAULT_BASE


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive computation would exceed its work budget."""


def get_log_base() -> float:
    return _base


def set_log_base(base: float) -> None:
    global _base
    if not base > 1:
        raise ValueError(f"log base must be > 1, got {base!r}")
    _base = float(base)


@contextlib.contextmanager
def log_base(base: float) -> Iterator[float]:
    """Temporarily switch the global log base."""
    old = _base
    set_log_base(base)
    try:
        yield _base
    finally:
        set_log_base(old)


def unit_name(base: float | None = None) -> str:
    b = _base if base is None else base
    if b == 2:
        return "bits"
    if b == math.e:
        return "nats"
    if b == 10:
        return "hartleys"
    return f"log{b:g} units"


def _log(x: int | float, base: float) -> float:
    # math.log2/math.log accept arbitrarily large ints without overflowing
    if base == 2:
        return math.log2(x)
    if base == math.e:
        return math.log(x)
    if base == 10:
        return math.log10(x)
    return math.log(x) / math.log(base)


def info(n: int, base: float | None = None) -> float:
    """I(n) = log n, with I(0) = I(1) = 0."""
    if n < 0:
        raise ValueError(f"info is defined on naturals, got {n}")
    if n < 2:
        return 0.0
    return _log(n, _base if base is None else base)


def log_ratio(num: int, den: int, base: float | None = None) -> float:
    """log(num/den) computed from the exact rational.

    Differences of logs of nearby big numbers lose precision; taking a single
    log of the correctly rounded quotient keeps identities such as
    log(ab) - log a - log b = 0 exact.
    """
    if num <= 0 or den <= 0:
        raise ValueError("log_ratio needs positive operands")
    b = _base if base is None else base
    q = Fraction(num, den)
    if q == 1:
        return 0.0
    try:
        f = float(q)
    except OverflowError:
        f = math.inf
    if f == math.inf or f < 1e-300:
        return _log(num, b) - _log(den, b)
    return _log(f, b)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial needs naturals")
    return math.comb(n, k)


def tuple_info(xs: Iterable[int], base: float | None = None) -> float:
    return math.fsum(info(x, base) for x in xs)


def nontrivial_product(xs: Iterable[int]) -> int:
    """Product of the entries >= 2; 0 and 1 carry no information."""
    p = 1
    for x in xs:
        if x >= 2:
            p *= x
    return p
