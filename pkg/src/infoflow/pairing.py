"""Cantor pairing, its inverse, the k-ary fold, and directed-graph encoding."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence


class Pair(NamedTuple):
    x: int
    y: int


def cantor_pair(x: int, y: int) -> int:
    if x < 0 or y < 0:
        raise ValueError("cantor_pair is defined on naturals")
    s = x + y
    return s * (s + 1) // 2 + y


def triangular_root(n: int) -> int:
    """Largest w with w(w+1)/2 <= n, from an exact integer square root."""
    return (math.isqrt(8 * n + 1) - 1) // 2


def cantor_unpair(n: int) -> Pair:
    if n < 0:
        raise ValueError("cantor_unpair is defined on naturals")
    w = triangular_root(n)
    y = n - w * (w + 1) // 2
    return Pair(w - y, y)


def cantor_pair_k(xs: Sequence[int], k: int | None = None) -> int:
    """Right fold: pi_k(x1, ..., xk) = pi(x1, pi_{k-1}(x2, ..., xk))."""
    if k is None:
        k = len(xs)
    if k < 1:
        raise ValueError("arity must be >= 1")
    if len(xs) != k:
        raise ValueError(f"arity mismatch: expected {k} values, got {len(xs)}")
    acc = xs[-1]
    for x in reversed(xs[:-1]):
        acc = cantor_pair(x, acc)
    return acc


def cantor_unpair_k(n: int, k: int) -> tuple[int, ...]:
    if k < 1:
        raise ValueError("arity must be >= 1")
    out = []
    for _ in range(k - 1):
        x, n = cantor_unpair(n)
        out.append(x)
    out.append(n)
    return tuple(out)


@dataclass(frozen=True)
class DirectedGraph:
    node_count: int
    links: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.node_count < 0:
            raise ValueError("node_count must be >= 0")
        object.__setattr__(self, "links", frozenset(tuple(l) for l in self.links))
        for a, b in self.links:
            if not (0 <= a < self.node_count and 0 <= b < self.node_count):
                raise ValueError(f"link ({a}, {b}) outside nodes 0..{self.node_count - 1}")


def graph_encode(g: DirectedGraph) -> tuple[int, ...]:
    """Map the link set to points of the Cantor grid. node_count is dropped."""
    return tuple(sorted(cantor_pair(a, b) for a, b in g.links))


def graph_decode(s: Iterable[int], node_count: int) -> DirectedGraph:
    return DirectedGraph(node_count, frozenset(cantor_unpair(n) for n in s))


def parse_graph(text: str) -> DirectedGraph:
    """Read the `n <count>` header followed by one `a b` link per line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph text")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError(f"bad graph header: {lines[0]!r}")
    n = int(head[1])
    links = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad link line: {ln!r}")
        link = (int(parts[0]), int(parts[1]))
        if link in links:
            raise ValueError(f"duplicate link {link}")
        links.add(link)
    return DirectedGraph(n, frozenset(links))


def format_graph(g: DirectedGraph) -> str:
    rows = [f"n {g.node_count}"] + [f"{a} {b}" for a, b in sorted(g.links)]
    return "\n".join(rows) + "\n"
