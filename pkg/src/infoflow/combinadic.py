"""Combinatorial number system and the cardinality-ordered coding of finite sets.

A finite set is an ascending tuple of naturals. Within one cardinality k the
sets are ranked colexicographically by sigma_k(s) = sum C(s_i, i); a set's
raw code is cantor_pair(|s|, sigma). Raw codes cantor_pair(0, j) with j >= 1
have no preimage (there is only one empty set), so a dense rank that skips
them is provided as well.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import binomial, info
from .pairing import cantor_pair, cantor_unpair

FiniteSet = tuple[int, ...]


def finite_set(xs: Iterable[int]) -> FiniteSet:
    """Normalise to a strictly ascending tuple; duplicates are an error."""
    s = tuple(sorted(xs))
    for a, b in zip(s, s[1:]):
        if a == b:
            raise ValueError(f"duplicate element {a}")
    if s and s[0] < 0:
        raise ValueError("sets hold naturals only")
    return s


def parse_set(text: str) -> FiniteSet:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"set literal must be braced: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return ()
    try:
        elems = [int(p) for p in body.split(",")]
    except ValueError:
        raise ValueError(f"malformed set literal: {text!r}") from None
    s = tuple(elems)
    if list(s) != sorted(set(s)):
        raise ValueError(f"set literal must be strictly ascending: {text!r}")
    if s and s[0] < 0:
        raise ValueError("sets hold naturals only")
    return s


def format_set(s: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in s) + "}"


def rank_kset(s: Iterable[int]) -> int:
    """sigma_k(s): 0-based colex position among all k-subsets of N."""
    s = finite_set(s)
    if not s:
        raise ValueError("rank_kset needs a nonempty set")
    return sum(binomial(x, i) for i, x in enumerate(s, start=1))


def _largest_v(idx: int, i: int) -> int:
    """Largest v with C(v, i) <= idx (v >= i - 1 since C(i-1, i) = 0)."""
    lo = i - 1
    hi = i
    while binomial(hi, i) <= idx:
        lo = hi
        hi = 2 * hi + 1
    # C(lo, i) <= idx < C(hi, i)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binomial(mid, i) <= idx:
            lo = mid
        else:
            hi = mid
    return lo


def unrank_kset(k: int, idx: int) -> FiniteSet:
    if k < 1:
        raise ValueError("unrank_kset needs k >= 1")
    if idx < 0:
        raise ValueError("rank must be a natural")
    out = []
    for i in range(k, 0, -1):
        v = _largest_v(idx, i)
        out.append(v)
        idx -= binomial(v, i)
    out.reverse()
    return tuple(out)


def vacuous_codes_below(raw: int) -> int:
    """#{j >= 1 : cantor_pair(0, j) < raw}; cantor_pair(0, j) = (j^2 + 3j)/2."""
    if raw <= 0:
        return 0
    j = max((math.isqrt(9 + 8 * raw) - 3) // 2, 0)
    while j > 0 and j * j + 3 * j >= 2 * raw:
        j -= 1
    while (j + 1) ** 2 + 3 * (j + 1) < 2 * raw:
        j += 1
    return j


def is_vacuous_code(raw: int) -> bool:
    x, y = cantor_unpair(raw)
    return x == 0 and y > 0


@dataclass(frozen=True)
class SetCode:
    raw: int
    dense: int


def sigma(s: FiniteSet) -> int:
    return rank_kset(s) if s else 0


def set_to_code(s: Iterable[int]) -> SetCode:
    s = finite_set(s)
    raw = cantor_pair(len(s), sigma(s))
    return SetCode(raw, raw - vacuous_codes_below(raw))


def raw_from_dense(dense: int) -> int:
    if dense < 0:
        raise ValueError("dense code must be a natural")
    # least fixed point of r = dense + V(r); V is monotone so this climbs to it
    r = dense
    while True:
        nxt = dense + vacuous_codes_below(r)
        if nxt == r:
            break
        r = nxt
    if is_vacuous_code(r):
        # vacuous codes are never adjacent, so the successor is the answer
        r += 1
    return r


def code_to_set(dense: int) -> FiniteSet:
    k, idx = cantor_unpair(raw_from_dense(dense))
    return () if k == 0 else unrank_kset(k, idx)


def set_info(s: Iterable[int], base: float | None = None) -> float:
    return info(set_to_code(s).raw, base)


def balance(k: int, sig: int, base: float | None = None) -> float:
    """log pi(k, sigma) - log k - log sigma: the empirical balance constant."""
    if k < 1:
        raise ValueError("balance needs a nonempty set")
    if sig < 1:
        raise ValueError("balance is undefined at sigma = 0")
    return info(cantor_pair(k, sig), base) - info(k, base) - info(sig, base)


def balance_check(s: Iterable[int], base: float | None = None) -> float:
    s = finite_set(s)
    if not s:
        raise ValueError("balance needs a nonempty set")
    return balance(len(s), rank_kset(s), base)


class ColexCursor:
    """Walks the k-subsets of N in colex order, one rank step at a time.

    The set is held as maximal runs of consecutive integers, lowest run last,
    so a successor step touches O(1) runs however large k is. The element sum
    is updated incrementally; callers that only need a set's sum or product
    never pay for materialising a large set.
    """

    __slots__ = ("k", "runs", "sigma", "total")

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("cursor needs k >= 1")
        self.k = k
        self.runs = [(0, k)]
        self.sigma = 0
        self.total = k * (k - 1) // 2

    @property
    def has_zero(self) -> bool:
        return self.runs[-1][0] == 0

    def product(self) -> int:
        if self.has_zero:
            return 0
        p = 1
        for start, length in self.runs:
            p *= math.perm(start + length - 1, length)
        return p

    def as_set(self) -> FiniteSet:
        out: list[int] = []
        for start, length in reversed(self.runs):
            out.extend(range(start, start + length))
        return tuple(out)

    def advance(self) -> None:
        # the lowest run a0..a0+L-1 collapses to 0..L-2 and its top moves up one
        runs = self.runs
        a0, length = runs.pop()
        moved = a0 + length
        if runs and runs[-1][0] == moved + 1:
            start, ln = runs[-1]
            runs[-1] = (moved, ln + 1)
        else:
            runs.append((moved, 1))
        if length > 1:
            runs.append((0, length - 1))
        self.total += 1 - (length - 1) * a0
        self.sigma += 1


def iter_cursors() -> Iterator[tuple[int, ColexCursor | None]]:
    """Yield (k, cursor) in dense-code order; cursor is None for the empty set.

    Raw codes run along Cantor diagonals d = k + sigma with sigma increasing,
    so each column k advances exactly once per diagonal. The yielded cursor is
    shared state: read it before pulling the next item.
    """
    yield 0, None
    columns: dict[int, ColexCursor] = {}
    d = 1
    while True:
        for sig in range(d):
            k = d - sig
            cur = columns.get(k)
            if cur is None:
                cur = columns[k] = ColexCursor(k)
            else:
                cur.advance()
            yield k, cur
        d += 1


def iter_sets() -> Iterator[FiniteSet]:
    """All finite subsets of N in dense-code order."""
    for _, cur in iter_cursors():
        yield () if cur is None else cur.as_set()


def enumerate_sets(limit: int) -> list[FiniteSet]:
    out = []
    if limit <= 0:
        return out
    for s in iter_sets():
        out.append(s)
        if len(out) == limit:
            break
    return out


def dense_prefix_covering(max_element: int) -> int:
    """Number of leading sets that covers every subset of {0..max_element}."""
    n = max_element + 1
    last = 0
    for k in range(1, n + 1):
        raw = cantor_pair(k, binomial(n, k) - 1)
        last = max(last, raw - vacuous_codes_below(raw))
    return last + 1
