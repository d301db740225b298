"""Index and compression functions of subsets of N, density estimates,
randomness deficiency and the binary Shannon-entropy estimate.

Counting follows the convention A(n) = {1, ..., n} & A: zero is never counted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .core import BudgetExceeded, get_log_base, info, log_ratio

DEFAULT_TOLERANCE = 0.01


@dataclass(frozen=True)
class NumberSet:
    name: str
    contains: Callable[[int], bool]
    # fast prefix count c_A(n); falls back to scanning the predicate
    counter: Callable[[int], int] | None = field(default=None, compare=False)

    def __contains__(self, n: int) -> bool:
        return n >= 1 and self.contains(n)


class _PrimeTable:
    """Sieve of Eratosthenes that grows on demand, with cumulative counts."""

    def __init__(self):
        self.limit = 1
        self.is_prime = np.zeros(2, dtype=bool)
        self.cumulative = np.zeros(2, dtype=np.int64)

    def ensure(self, n: int) -> None:
        if n <= self.limit:
            return
        limit = max(n, 2 * self.limit, 1024)
        sieve = np.ones(limit + 1, dtype=bool)
        sieve[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = False
        self.is_prime = sieve
        self.cumulative = np.cumsum(sieve, dtype=np.int64)
        self.limit = limit

    def contains(self, n: int) -> bool:
        self.ensure(n)
        return bool(self.is_prime[n])

    def count(self, n: int) -> int:
        if n < 2:
            return 0
        self.ensure(n)
        return int(self.cumulative[n])


_primes = _PrimeTable()


def _leading_one_count(n: int) -> int:
    """How many of 1..n have decimal leading digit 1."""
    total = 0
    lo = 1
    while lo <= n:
        total += min(n, 2 * lo - 1) - lo + 1
        lo *= 10
    return total


def residue_class(r: int, m: int) -> NumberSet:
    """{n >= 1 : n = r (mod m)}."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    r %= m
    first = r if r >= 1 else m

    def count(n: int) -> int:
        return 0 if n < first else (n - first) // m + 1

    return NumberSet(f"{r}mod{m}", lambda n: n % m == r, count)


NATURALS = NumberSet("naturals", lambda n: n >= 1, lambda n: max(n, 0))
EVENS = NumberSet("evens", lambda n: n % 2 == 0, lambda n: max(n, 0) // 2)
ODDS = NumberSet("odds", lambda n: n % 2 == 1, lambda n: (max(n, 0) + 1) // 2)
SQUARES = NumberSet("squares", lambda n: math.isqrt(n) ** 2 == n, lambda n: math.isqrt(max(n, 0)))
PRIMES = NumberSet("primes", _primes.contains, _primes.count)
LEADING_ONE = NumberSet(
    "leading1", lambda n: str(n)[0] == "1", lambda n: _leading_one_count(n) if n > 0 else 0
)

BUILTIN_SETS = {s.name: s for s in (NATURALS, EVENS, ODDS, SQUARES, PRIMES, LEADING_ONE)}


def named_set(name: str) -> NumberSet:
    """Built-in set by name, or a residue class written `r mod m` / `rmodm`."""
    key = name.strip().lower()
    if key in BUILTIN_SETS:
        return BUILTIN_SETS[key]
    if "mod" in key:
        r, _, m = key.partition("mod")
        try:
            return residue_class(int(r), int(m))
        except ValueError:
            pass
    raise ValueError(f"unknown set {name!r}; choose from {sorted(BUILTIN_SETS)} or 'r mod m'")


def compression_function(A: NumberSet, n: int) -> int:
    if n <= 0:
        return 0
    if A.counter is not None:
        return A.counter(n)
    return sum(1 for m in range(1, n + 1) if A.contains(m))


def index_of(A: NumberSet, j: int, budget: int = 10**8) -> int:
    """The j-th smallest element of A (1-based), searching at most `budget`."""
    if j < 1:
        raise ValueError("index is 1-based")
    if A.counter is not None:
        hi = 1
        while A.counter(hi) < j:
            if hi >= budget:
                raise BudgetExceeded(f"fewer than {j} elements of {A.name} below {budget}")
            hi = min(2 * hi, budget)
        lo = 0
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if A.counter(mid) >= j:
                hi = mid
            else:
                lo = mid
        return hi
    seen = 0
    for m in range(1, budget + 1):
        if A.contains(m):
            seen += 1
            if seen == j:
                return m
    raise BudgetExceeded(f"fewer than {j} elements of {A.name} below {budget}")


def _position(A: NumberSet, n: int) -> int:
    if n not in A:
        raise ValueError(f"{n} is not an element of {A.name}")
    return compression_function(A, n)


def conditional_info(A: NumberSet, n: int, base: float | None = None) -> float:
    """I(n | A) = log j where n is the j-th element of A."""
    return info(_position(A, n), base)


def randomness_deficiency(A: NumberSet, n: int, base: float | None = None) -> float:
    """log n - log j: what membership in A saves when identifying n."""
    j = _position(A, n)
    return log_ratio(n, j, base)


@dataclass
class DensityProfile:
    prefix_points: list[tuple[int, int]]
    lower: float
    upper: float
    natural: float | None
    defined: bool
    tolerance: float = DEFAULT_TOLERANCE

    def ratios(self) -> list[float]:
        return [c / n for n, c in self.prefix_points]

    def to_csv(self) -> str:
        rows = ["n,count,ratio"]
        rows += [f"{n},{c},{c / n:.12g}" for n, c in self.prefix_points]
        nat = "" if self.natural is None else f"{self.natural:.12g}"
        rows.append("lower,upper,natural,defined")
        rows.append(f"{self.lower:.12g},{self.upper:.12g},{nat},{str(self.defined).lower()}")
        return "\n".join(rows) + "\n"


def default_checkpoints(max_n: int) -> list[int]:
    """1-2-5 series up to max_n, always ending at max_n."""
    pts = []
    scale = 1
    while scale <= max_n:
        for m in (1, 2, 5):
            if m * scale <= max_n:
                pts.append(m * scale)
        scale *= 10
    if not pts or pts[-1] != max_n:
        pts.append(max_n)
    return pts


def density_profile(
    A: NumberSet,
    max_n: int,
    checkpoints: Sequence[int] | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> DensityProfile:
    """Estimate lower/upper density from the tail half of the checkpoints.

    The first half of the checkpoints is burn-in. The natural density is
    reported (as the ratio at the last checkpoint) only when the tail
    spread is below `tolerance`.
    """
    pts = list(default_checkpoints(max_n) if checkpoints is None else checkpoints)
    if not pts:
        raise ValueError("need at least one checkpoint")
    if any(b <= a for a, b in zip(pts, pts[1:])):
        raise ValueError("checkpoints must be strictly ascending")
    if pts[0] < 1 or pts[-1] > max_n:
        raise ValueError(f"checkpoints must lie in [1, {max_n}]")
    prefix = [(n, compression_function(A, n)) for n in pts]
    tail = prefix[len(prefix) // 2 :]
    ratios = [c / n for n, c in tail]
    lower, upper = min(ratios), max(ratios)
    defined = upper - lower < tolerance
    natural = ratios[-1] if defined else None
    return DensityProfile(prefix, lower, upper, natural, defined, tolerance)


def deficiency_function_fit(A: NumberSet, n: int, f: Callable[[int], float]) -> float:
    """c_A(n) f(n) / n; tends to 1 when f is A's randomness deficiency function."""
    return compression_function(A, n) * f(n) / n


def binary_entropy(p: float, base: float | None = None) -> float:
    h = 0.0
    for q in (p, 1.0 - p):
        if 0.0 < q < 1.0:
            h -= q * math.log(q)
    b = get_log_base() if base is None else base
    return h / math.log(b)


def shannon_entropy_estimate(A: NumberSet, n: int, base: float | None = None) -> float:
    """Binary entropy of membership, with p = c_A(n)/n estimated from 1..n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return binary_entropy(compression_function(A, n) / n, base)
