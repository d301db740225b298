"""Information grids over the finite subsets of N.

The cardinality grid is direct access: a set sits at (|s|, sigma(s)). The
sum and product grids have no such formula; they are built by streaming the
canonical enumeration and dropping each set into bin sum(s) (or prod(s)) at
the first free index. Bins outside an optional retention window are only
counted, not stored, which keeps long constructions in bounded memory.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Container, Iterable, Optional

from .combinadic import FiniteSet, finite_set, format_set, iter_cursors, parse_set, rank_kset, sigma
from .core import BudgetExceeded

CARD = "CARD"
SUM = "SUM"
PROD = "PROD"
KINDS = (CARD, SUM, PROD)

DEFAULT_SET_BUDGET = 10**6
DEFAULT_NODE_BUDGET = 2**30


@dataclass(frozen=True)
class GridCell:
    bin: int
    index: int
    occupant: Optional[FiniteSet] = None
    vacuous: bool = False


def card_grid_locate(s: Iterable[int]) -> GridCell:
    s = finite_set(s)
    return GridCell(len(s), sigma(s), s, False)


# -- exact counts ------------------------------------------------------------


def distinct_partition_counts(n: int) -> list[int]:
    """q(0..n): partitions into pairwise distinct positive parts."""
    q = [1] + [0] * n
    for part in range(1, n + 1):
        for s in range(n, part - 1, -1):
            q[s] += q[s - part]
    return q


def partition_counts(n: int) -> list[int]:
    """p(0..n): unrestricted partitions."""
    p = [1] + [0] * n
    for part in range(1, n + 1):
        for s in range(part, n + 1):
            p[s] += p[s - part]
    return p


def partition_count(n: int) -> int:
    return partition_counts(n)[n]


def count_subsets_with_sum(n: int) -> int:
    """Finite subsets of N (0 allowed) whose elements add up to n."""
    if n < 0:
        return 0
    if n == 0:
        return 2
    # each 0-free set has a twin with 0 added
    return 2 * distinct_partition_counts(n)[n]


@lru_cache(maxsize=None)
def _distinct_factorizations(n: int, least: int) -> int:
    """Sets of distinct integers >= least with product n."""
    if n == 1:
        return 1
    total = 1 if n >= least else 0
    d = least
    while d * d < n:
        if n % d == 0:
            total += _distinct_factorizations(n // d, d + 1)
        d += 1
    return total


def count_subsets_with_product(n: int) -> int | None:
    """Finite subsets of N with product n; None (unbounded) for n = 0."""
    if n < 0:
        return 0
    if n == 0:
        return None
    # sets of distinct factors >= 2, each with or without the element 1
    return 2 * _distinct_factorizations(n, 2)


def hardy_ramanujan_estimate(n: int) -> float:
    """p(n) ~ exp(pi sqrt(2n/3)) / (4 n sqrt 3)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))


def bin_capacity(kind: str, b: int) -> int | None:
    """How many sets a bin can ever hold; None when unbounded."""
    if kind == CARD:
        return 1 if b == 0 else None
    if kind == SUM:
        return count_subsets_with_sum(b)
    if kind == PROD:
        return count_subsets_with_product(b)
    raise ValueError(f"unknown grid kind {kind!r}")


# -- construction ------------------------------------------------------------


@dataclass
class GridSnapshot:
    kind: str
    sets_consumed: int
    bins: dict[int, list[tuple[int, FiniteSet]]]
    counts: dict[int, int]
    enumeration_cursor: int

    def occupants(self, b: int) -> list[FiniteSet]:
        return [s for _, s in self.bins.get(b, [])]

    def cell(self, b: int, index: int) -> GridCell:
        held = self.bins.get(b)
        if held is not None and index < len(held):
            return GridCell(b, index, held[index][1], False)
        cap = bin_capacity(self.kind, b)
        return GridCell(b, index, None, cap is not None and index >= cap)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "seq", "bin", "index", "set"])
        for b in sorted(self.bins):
            for idx, (seq, s) in enumerate(self.bins[b]):
                w.writerow([self.kind, seq, b, idx, format_set(s)])
        return buf.getvalue()


def read_snapshot_csv(text: str) -> GridSnapshot:
    rows = list(csv.DictReader(io.StringIO(text)))
    kinds = {r["kind"] for r in rows}
    if len(kinds) > 1:
        raise ValueError(f"mixed grid kinds in CSV: {sorted(kinds)}")
    kind = kinds.pop() if kinds else SUM
    bins: dict[int, list[tuple[int, FiniteSet]]] = {}
    for r in rows:
        b, idx = int(r["bin"]), int(r["index"])
        held = bins.setdefault(b, [])
        if idx != len(held):
            raise ValueError(f"bin {b}: indices must be consecutive from 0")
        held.append((int(r["seq"]), parse_set(r["set"])))
    consumed = 1 + max((seq for held in bins.values() for seq, _ in held), default=-1)
    counts = {b: len(held) for b, held in bins.items()}
    return GridSnapshot(kind, consumed, bins, counts, consumed)


class GridBuilder:
    """Single-owner incremental construction of a CARD, SUM or PROD grid."""

    def __init__(
        self,
        kind: str,
        keep_bins: Container[int] | None = None,
        budget: int = DEFAULT_SET_BUDGET,
    ):
        if kind not in KINDS:
            raise ValueError(f"unknown grid kind {kind!r}")
        self.kind = kind
        self.keep_bins = keep_bins
        self.budget = budget
        self.consumed = 0
        self.bins: dict[int, list[tuple[int, FiniteSet]]] = {}
        self.counts: dict[int, int] = {}
        self._stream = iter_cursors()

    def _bin_of(self, k: int, cur) -> int:
        if self.kind == CARD:
            return k
        if cur is None:
            return 0 if self.kind == SUM else 1
        if self.kind == SUM:
            return cur.total
        return cur.product()

    def consume(self, n: int) -> "GridBuilder":
        if n < 0:
            raise ValueError("cannot consume a negative number of sets")
        if self.consumed + n > self.budget:
            raise BudgetExceeded(
                f"{self.consumed + n} sets exceed the work budget of {self.budget}"
            )
        keep = self.keep_bins
        counts = self.counts
        for _ in range(n):
            k, cur = next(self._stream)
            b = self._bin_of(k, cur)
            counts[b] = counts.get(b, 0) + 1
            if keep is None or b in keep:
                s = () if cur is None else cur.as_set()
                self.bins.setdefault(b, []).append((self.consumed, s))
            self.consumed += 1
        return self

    def snapshot(self) -> GridSnapshot:
        return GridSnapshot(
            self.kind,
            self.consumed,
            {b: list(v) for b, v in self.bins.items()},
            dict(self.counts),
            self.consumed,
        )


def build_grid(kind: str, n_sets: int, keep_bins: Container[int] | None = None,
               budget: int = DEFAULT_SET_BUDGET) -> GridSnapshot:
    return GridBuilder(kind, keep_bins, budget).consume(n_sets).snapshot()


def sum_grid_build(n_sets: int, keep_bins: Container[int] | None = None,
                   budget: int = DEFAULT_SET_BUDGET) -> GridSnapshot:
    return build_grid(SUM, n_sets, keep_bins, budget)


def prod_grid_build(n_sets: int, keep_bins: Container[int] | None = None,
                    budget: int = DEFAULT_SET_BUDGET) -> GridSnapshot:
    return build_grid(PROD, n_sets, keep_bins, budget)


def card_grid_build(n_sets: int, keep_bins: Container[int] | None = None,
                    budget: int = DEFAULT_SET_BUDGET) -> GridSnapshot:
    return build_grid(CARD, n_sets, keep_bins, budget)


@dataclass(frozen=True)
class BinStats:
    bin: int
    occupied: int
    max_index: int
    capacity: int | None
    complete: bool


def vacuous_stats(g: GridSnapshot, bin_range: Iterable[int]) -> list[BinStats]:
    out = []
    for b in bin_range:
        occ = g.counts.get(b, 0)
        cap = bin_capacity(g.kind, b)
        out.append(BinStats(b, occ, occ - 1, cap, cap is not None and occ == cap))
    return out


def grid_pgm(g: GridSnapshot, bin_range: Iterable[int], height: int | None = None) -> str:
    """Plain PGM: one column per bin, index 0 on the bottom row.

    Occupied cells are black, provably vacuous cells gray, the rest white.
    """
    bins = list(bin_range)
    if not bins:
        raise ValueError("empty bin range")
    if height is None:
        height = max([g.counts.get(b, 0) for b in bins] + [1])
    caps = [bin_capacity(g.kind, b) for b in bins]
    lines = ["P2", f"{len(bins)} {height}", "255"]
    for idx in range(height - 1, -1, -1):
        row = []
        for b, cap in zip(bins, caps):
            if idx < g.counts.get(b, 0):
                row.append("0")
            elif cap is not None and idx >= cap:
                row.append("128")
            else:
                row.append("255")
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


# -- canonical subset-sum search ---------------------------------------------


def subset_sum_first(S: Iterable[int], k: int, budget: int = DEFAULT_NODE_BUDGET) -> FiniteSet | None:
    """First subset of S adding up to k in cardinality-grid order.

    Subsets are visited by cardinality, then by colex rank sigma, which for a
    sorted ground set is the colex order of index tuples. Branches that
    cannot reach k are pruned without changing the visiting order.
    """
    S = finite_set(S)
    if k < 0:
        return None
    if k == 0:
        return ()
    prefix = [0]
    for v in S:
        prefix.append(prefix[-1] + v)
    nodes = 0

    def search(c: int, limit: int, need: int) -> tuple[int, ...] | None:
        nonlocal nodes
        min_rest = prefix[c - 1]
        for top in range(c - 1, limit):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"subset-sum search exceeded {budget} nodes")
            rest = need - S[top]
            if rest < min_rest:
                # larger tops only shrink `rest`
                break
            if c == 1:
                if rest == 0:
                    return (top,)
                continue
            if rest > prefix[top] - prefix[top - c + 1]:
                continue
            found = search(c - 1, top, rest)
            if found is not None:
                return found + (top,)
        return None

    for c in range(1, len(S) + 1):
        if prefix[c] > k:
            break
        hit = search(c, len(S), k)
        if hit is not None:
            return tuple(S[i] for i in hit)
    return None


def subset_sum_oracle(S: Iterable[int], k: int) -> FiniteSet | None:
    """Exhaustive reference: all subsets, minimise (|x|, sigma(x))."""
    S = finite_set(S)
    best = None
    best_key = None
    n = len(S)
    for mask in range(1 << n):
        x = tuple(S[i] for i in range(n) if mask >> i & 1)
        if sum(x) != k:
            continue
        key = (len(x), rank_kset(x) if x else 0)
        if best_key is None or key < best_key:
            best, best_key = x, key
    return best
