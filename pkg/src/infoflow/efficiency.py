"""Information efficiency: delta of arithmetic steps, expression histories,
polynomials under maximal entropy, and diophantine solution densities.

delta(f(x)) = I(f(x)) - I(x). Every delta here is computed as the log of an
exact rational (output over the product of informative inputs), so
conserving steps come out as exactly 0.
"""
from __future__ import annotations

import itertools
import math
import random
import statistics
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .core import BudgetExceeded, info, log_ratio, nontrivial_product
from .expr import Add, Const, Expr, Mul, Polynomial, Pow, Succ, Var, render

ADD = "add"
MUL = "mul"

DISCARDING = "DISCARDING"
CONSERVING = "CONSERVING"
EXPANDING = "EXPANDING"
SLOPE_THRESHOLD = 0.25


def delta_node(op: str, a: int, b: int, same_operand: bool = False, base: float | None = None) -> float:
    """delta of one binary step a+b or a*b.

    With `same_operand` the two children are one and the same quantity, so
    the input carries I(a) once: delta(x+x) = log 2, delta(x*x) = log x.
    """
    if a < 1 or b < 1:
        raise ValueError("delta is undefined for zero operands")
    if op == ADD:
        out = a + b
    elif op == MUL:
        out = a * b
    else:
        raise ValueError(f"unknown operation {op!r}")
    if same_operand:
        if a != b:
            raise ValueError("same_operand requires equal values")
        return log_ratio(out, a, base)
    return log_ratio(out, a * b, base)


@dataclass
class DeltaReport:
    value: int
    node_delta: float
    history_delta: float
    per_node: list[tuple[str, float]] = field(default_factory=list)


def delta_tree(e: Expr, env: Mapping[str, int] | None = None, base: float | None = None) -> DeltaReport:
    """Evaluate bottom-up, charging every internal node its own delta.

    Binary nodes whose children are structurally identical subtrees use the
    same-operand rule; successor nodes contribute log(v+1) - log v.
    """
    env = env or {}
    per_node: list[tuple[str, float]] = []

    def walk(node: Expr) -> int:
        if isinstance(node, Const):
            return node.value
        if isinstance(node, Var):
            if node.name not in env:
                raise KeyError(f"unbound variable {node.name!r}")
            return env[node.name]
        if isinstance(node, (Add, Mul)):
            lv, rv = walk(node.left), walk(node.right)
            if lv < 1 or rv < 1:
                raise ValueError(f"zero intermediate value in {render(node)}")
            op = ADD if isinstance(node, Add) else MUL
            per_node.append((render(node), delta_node(op, lv, rv, node.left == node.right, base)))
            return lv + rv if op == ADD else lv * rv
        if isinstance(node, Pow):
            v = walk(node.base)
            if v < 1:
                raise ValueError(f"zero intermediate value in {render(node)}")
            out = v**node.exponent
            per_node.append((render(node), log_ratio(out, v, base)))
            return out
        if isinstance(node, Succ):
            v = walk(node.child)
            # delta(S(0)) = log 1 - log 0 = 0 under the log 0 = 0 convention
            per_node.append((render(node), log_ratio(v + 1, max(v, 1), base)))
            return v + 1
        raise TypeError(f"not an expression node: {node!r}")

    value = walk(e)
    node_delta = per_node[-1][1] if per_node else 0.0
    return DeltaReport(value, node_delta, math.fsum(d for _, d in per_node), per_node)


def delta_poly(p: Polynomial, inputs: Sequence[int], base: float | None = None) -> float:
    v = p(*inputs)
    if v < 1:
        raise ValueError(f"polynomial value {v} at {tuple(inputs)} has no information (root or negative)")
    return log_ratio(v, nontrivial_product(inputs), base)


def nonassoc_gap(x: int, y: int, z: int, base: float | None = None) -> float:
    """|delta((x+y)+z) - delta(x+(y+z))| = |log(x (y+z) / ((x+y) z))|."""
    if min(x, y, z) < 1:
        raise ValueError("nonassoc_gap needs positive arguments")
    return abs(log_ratio(x * (y + z), (x + y) * z, base))


def nonassoc_witness(c: float) -> tuple[int, int, int]:
    """A triple whose grouping gap exceeds c bits."""
    e = max(math.ceil(c + 2), 1)
    return 2**e, 2**e, 1


# -- maximal-entropy sampling ------------------------------------------------


def _rng(seed: int, *key: int) -> random.Random:
    # string seeds are hashed with SHA-512, so sub-streams are stable across runs
    return random.Random(":".join(str(v) for v in (seed, *key)))


def sample_typical_set(k: int, t: int, seed: int) -> list[int]:
    """k independent uniform draws from the dyadic window [2^t, 2^(t+1))."""
    if k < 1 or t < 1:
        raise ValueError("need k >= 1 and t >= 1")
    rng = random.Random(seed)
    return [rng.randrange(2**t, 2 ** (t + 1)) for _ in range(k)]


def bounded_random_set(k: int, n: int, seed: int) -> list[int]:
    """k independent draws from {0, ..., n-1}, each value with probability 1/n."""
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    rng = random.Random(seed)
    return [rng.randrange(n) for _ in range(k)]


class RejectionError(ValueError):
    """Too few sampled inputs give the polynomial a positive value."""


@dataclass(frozen=True)
class TrendRow:
    t: int
    mean_delta: float
    stddev: float
    samples: int
    rejected: int


@dataclass
class Classification:
    label: str
    slope: float
    table: list[TrendRow]

    def to_csv(self) -> str:
        rows = ["t,mean_delta,stddev,samples,rejected"]
        rows += [f"{r.t},{r.mean_delta:.12g},{r.stddev:.12g},{r.samples},{r.rejected}" for r in self.table]
        return "\n".join(rows) + "\n"


def _trend_row(p: Polynomial, t: int, samples: int, seed: int, base: float | None) -> TrendRow:
    lo, hi = 2**t, 2 ** (t + 1)
    cap = 10 * samples
    deltas = []
    rejected = 0
    for i in range(samples):
        rng = _rng(seed, t, i)
        while True:
            xs = [rng.randrange(lo, hi) for _ in range(p.arity)]
            if p(*xs) >= 1:
                break
            rejected += 1
            if rejected + len(deltas) >= cap:
                raise RejectionError(f"p <= 0 on more than 90% of samples at t={t}")
        deltas.append(delta_poly(p, xs, base))
    if rejected > 0.9 * (rejected + samples):
        raise RejectionError(f"p <= 0 on more than 90% of samples at t={t}")
    sd = statistics.stdev(deltas) if samples > 1 else 0.0
    return TrendRow(t, statistics.fmean(deltas), sd, samples, rejected)


def classify_polynomial(
    p: Polynomial,
    t_schedule: Sequence[int],
    samples_per_t: int,
    seed: int,
    base: float | None = None,
    threshold: float = SLOPE_THRESHOLD,
) -> Classification:
    """Fit the slope of mean delta against the magnitude exponent t.

    Each (t, sample) pair draws from its own sub-seed, so the table does
    not depend on evaluation order.
    """
    ts = list(t_schedule)
    if len(ts) < 3 or any(b <= a for a, b in zip(ts, ts[1:])):
        raise ValueError("t schedule must be ascending with at least 3 points")
    if samples_per_t < 1:
        raise ValueError("need at least one sample per t")
    table = [_trend_row(p, t, samples_per_t, seed, base) for t in ts]
    slope, _ = statistics.linear_regression(ts, [r.mean_delta for r in table])
    if slope < -threshold:
        label = DISCARDING
    elif slope > threshold:
        label = EXPANDING
    else:
        label = CONSERVING
    return Classification(label, slope, table)


def typical_hit_rate(p: Polynomial, t: int, samples: int, seed: int) -> float:
    """Fraction of typical inputs from [2^t, 2^(t+1))^k that solve p = 0."""
    lo, hi = 2**t, 2 ** (t + 1)
    hits = 0
    for i in range(samples):
        rng = _rng(seed, t, i)
        if p(*(rng.randrange(lo, hi) for _ in range(p.arity))) == 0:
            hits += 1
    return hits / samples


# -- exhaustive diophantine counting -----------------------------------------


@dataclass
class DioResult:
    count: int
    total: int
    density: float
    solutions: list[tuple[int, ...]]


def _fits_int64(p: Polynomial, bound: int) -> bool:
    worst = sum(abs(c) * bound ** sum(e) for c, e in p.terms)
    return worst < 2**62


def _nontrivial(tup: Sequence[int]) -> bool:
    return 0 not in tup and len(set(tup)) == len(tup)


def diophantine_density(
    p: Polynomial,
    bound: int,
    exclude_trivial: bool = False,
    budget: int = 10**8,
    max_solutions: int = 10_000,
) -> DioResult:
    """Count tuples in [1, bound]^k with p = 0.

    With `exclude_trivial`, tuples with repeated or zero coordinates are not
    counted. `total` is always bound^k.
    """
    k = p.arity
    if bound < 1:
        raise ValueError("bound must be >= 1")
    total = bound**k
    if total > budget:
        raise BudgetExceeded(f"{bound}^{k} tuples exceed the work budget {budget}")
    count = 0
    sols: list[tuple[int, ...]] = []

    if k >= 2 and _fits_int64(p, bound):
        xs = np.arange(1, bound + 1, dtype=np.int64)
        max_exp = max(max(e) for _, e in p.terms)
        powers = [xs**a for a in range(max_exp + 1)]
        eye = xs[:, None] == xs[None, :]
        for head in itertools.product(range(1, bound + 1), repeat=k - 2):
            grid = np.zeros((bound, bound), dtype=np.int64)
            for c, e in p.terms:
                scalar = c
                for x, a in zip(head, e[:-2]):
                    scalar *= x**a
                if scalar:
                    grid += scalar * (powers[e[-2]][:, None] * powers[e[-1]][None, :])
            mask = grid == 0
            if exclude_trivial:
                if len(set(head)) != len(head):
                    continue
                mask &= ~eye
                for h in set(head):
                    if h <= bound:
                        mask[h - 1, :] = False
                        mask[:, h - 1] = False
            hits = int(mask.sum())
            if hits:
                count += hits
                if len(sols) < max_solutions:
                    for i, j in np.argwhere(mask)[: max_solutions - len(sols)]:
                        sols.append((*head, int(i) + 1, int(j) + 1))
    else:
        for tup in itertools.product(range(1, bound + 1), repeat=k):
            if p(*tup) == 0 and (not exclude_trivial or _nontrivial(tup)):
                count += 1
                if len(sols) < max_solutions:
                    sols.append(tup)
    return DioResult(count, total, count / total, sols)
