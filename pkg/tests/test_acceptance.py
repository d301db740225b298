"""End-to-end acceptance checks, one marked group per criterion.

Each criterion runs at its stated tolerance and time limit; the terminal
summary prints one PASS/FAIL line per criterion.
"""
import itertools
import math
import random
import time
from pathlib import Path

import pytest

from infoflow.aleph import ALEPH_1, aleph, finite, parse_aleph
from infoflow.combinadic import dense_prefix_covering, enumerate_sets, rank_kset, set_to_code, unrank_kset
from infoflow.core import info
from infoflow.density import EVENS, LEADING_ONE, PRIMES, compression_function, density_profile, shannon_entropy_estimate
from infoflow.efficiency import (
    ADD,
    CONSERVING,
    DISCARDING,
    EXPANDING,
    MUL,
    classify_polynomial,
    delta_node,
    delta_tree,
    diophantine_density,
    nonassoc_gap,
    typical_hit_rate,
)
from infoflow.expr import parse_expr, parse_poly
from infoflow.grids import (
    count_subsets_with_sum,
    hardy_ramanujan_estimate,
    partition_count,
    subset_sum_first,
    subset_sum_oracle,
    sum_grid_build,
    vacuous_stats,
)
from infoflow.pairing import cantor_pair, cantor_unpair

DATA = Path(__file__).parent / "data"

acceptance = pytest.mark.acceptance


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


# 1 -------------------------------------------------------------------------


@acceptance(1, "Pairing bijection")
def test_pairing_bijection():
    with Timer() as t:
        failures = 0
        for n in range(10**6 + 1):
            x, y = cantor_unpair(n)
            if cantor_pair(x, y) != n:
                failures += 1
        for d in range(101):
            image = {cantor_pair(x, s - x) for s in range(d + 1) for x in range(s + 1)}
            if image != set(range((d + 1) * (d + 2) // 2)):
                failures += 1
    assert failures == 0
    assert t.elapsed < 5.0, f"took {t.elapsed:.2f}s"


# 2 -------------------------------------------------------------------------


@acceptance(2, "Combinadic oracle equivalence")
def test_combinadic_oracle():
    with Timer() as t:
        for k in range(1, 6):
            # brute force: sort all k-subsets of {0..15} colexicographically
            col = sorted(itertools.combinations(range(16), k), key=lambda s: s[::-1])
            for idx, s in enumerate(col):
                assert rank_kset(s) == idx
                assert unrank_kset(k, idx) == s
    assert t.elapsed < 5.0, f"took {t.elapsed:.2f}s"


# 3 -------------------------------------------------------------------------


def oracle_sum_grid(n_sets, ground=12):
    coded = []
    for k in range(ground + 1):
        col = sorted(itertools.combinations(range(ground), k), key=lambda s: s[::-1])
        coded += [((k + i) * (k + i + 1) // 2 + i, s) for i, s in enumerate(col)]
    coded.sort()
    bins = {}
    for seq, (_, s) in enumerate(coded[:n_sets]):
        bins.setdefault(sum(s), []).append((seq, s))
    return bins


@acceptance(3, "Set coding")
def test_set_code_raw():
    assert set_to_code((1, 2, 4)).raw == 51


@acceptance(3, "Set coding")
def test_dense_bijection():
    sets = enumerate_sets(10**4)
    assert sorted(set_to_code(s).dense for s in sets) == list(range(10**4))


@acceptance(3, "Set coding")
def test_sum_grid_28():
    g = sum_grid_build(28)
    assert g.bins == oracle_sum_grid(28)
    assert g.to_csv() == (DATA / "sum_grid_28.csv").read_text()


# 4 -------------------------------------------------------------------------


@acceptance(4, "Elementary delta laws")
def test_elementary_laws():
    rng = random.Random(4)
    for _ in range(10**4):
        x, y = rng.randrange(1, 2**64), rng.randrange(1, 2**64)
        assert abs(delta_node(MUL, x, y)) <= 1e-9
        assert delta_node(ADD, x, y) == delta_node(ADD, y, x)
        assert delta_node(MUL, x, y) == delta_node(MUL, y, x)
        if x >= 3 and y >= 3:
            assert delta_node(ADD, x, y) < 0
        assert delta_node(ADD, x, x, same_operand=True) == math.log2(2)
    for x in range(3, 200):
        for y in range(3, 200):
            assert delta_node(ADD, x, y) < 0
    for _ in range(1000):
        env = {v: rng.randrange(2, 10**9) for v in "xyz"}
        assert delta_tree(parse_expr("(x*y)*z"), env).node_delta == 0.0
        assert delta_tree(parse_expr("x*(y*z)"), env).node_delta == 0.0


# 5 -------------------------------------------------------------------------


@acceptance(5, "Non-associativity witness")
def test_nonassoc_witness():
    for t in range(10, 31):
        assert nonassoc_gap(2**t, 2**t, 1) >= t - 2


# 6 -------------------------------------------------------------------------


@acceptance(6, "Polynomial classification")
def test_polynomial_classification():
    ts = [10, 15, 20, 25, 30]
    with Timer() as t:
        add = classify_polynomial(parse_poly("x+y"), ts, 1000, seed=1)
        mul = classify_polynomial(parse_poly("x*y"), ts, 1000, seed=1)
        sq = classify_polynomial(parse_poly("x^2*y"), ts, 1000, seed=1)
    assert add.label == DISCARDING and -1.5 <= add.slope <= -0.5
    assert mul.label == CONSERVING and all(abs(r.mean_delta) <= 0.1 for r in mul.table)
    assert sq.label == EXPANDING and 0.5 <= sq.slope <= 1.5
    assert t.elapsed < 30.0, f"took {t.elapsed:.2f}s"


# 7 -------------------------------------------------------------------------


@acceptance(7, "Diophantine density")
def test_fermat_cubes():
    assert diophantine_density(parse_poly("x^3+y^3-z^3"), 200).count == 0


@acceptance(7, "Diophantine density")
def test_pythagorean_count_vs_naive_loop():
    bound = 100
    naive = 0
    for x in range(1, bound + 1):
        for y in range(1, bound + 1):
            s = x * x + y * y
            for z in range(1, bound + 1):
                if s == z * z:
                    naive += 1
    assert diophantine_density(parse_poly("x^2+y^2-z^2"), bound).count == naive


@acceptance(7, "Diophantine density")
def test_typical_hit_rate():
    assert typical_hit_rate(parse_poly("x^2+y^2-z^2"), 20, 10**4, seed=1) < 1e-3


# 8 -------------------------------------------------------------------------


@acceptance(8, "Density module")
def test_density_module():
    prof = density_profile(EVENS, 10**6)
    assert prof.natural == pytest.approx(0.5, abs=1e-3)
    assert compression_function(PRIMES, 10**6) == 78498
    assert compression_function(LEADING_ONE, 10**5) / 10**5 == pytest.approx(1 / 9, abs=0.01)
    assert compression_function(LEADING_ONE, 2 * 10**5) / (2 * 10**5) == pytest.approx(5 / 9, abs=0.01)
    assert shannon_entropy_estimate(EVENS, 10**6) == pytest.approx(1.0, abs=1e-3)


# 9 -------------------------------------------------------------------------


@acceptance(9, "Grid counting")
def test_sum_bins_converge():
    g = sum_grid_build(dense_prefix_covering(12), keep_bins=range(13), budget=2 * 10**6)
    for stat in vacuous_stats(g, range(13)):
        assert stat.occupied == count_subsets_with_sum(stat.bin)
        assert len(g.occupants(stat.bin)) == stat.occupied


@acceptance(9, "Grid counting")
def test_partition_numbers():
    assert count_subsets_with_sum(10) == 20
    ratios = [partition_count(n) / hardy_ramanujan_estimate(n) for n in (50, 100, 200)]
    assert all(0.90 <= r <= 1.00 for r in ratios)
    assert ratios == sorted(ratios)


# 10 ------------------------------------------------------------------------


@acceptance(10, "Subset-sum harness")
def test_subset_sum_oracle_agreement():
    rng = random.Random(10)
    for _ in range(500):
        S = rng.sample(range(1, 100), rng.randrange(0, 13))
        k = rng.randrange(0, sum(S) + 2) if rng.random() < 0.8 else rng.randrange(0, 400)
        assert subset_sum_first(S, k) == subset_sum_oracle(S, k)


@acceptance(10, "Subset-sum harness")
def test_subset_sum_worked_instance():
    assert subset_sum_first({2, 47, 53, 98}, 100) == (2, 98)


# 11 ------------------------------------------------------------------------


@acceptance(11, "Aleph calculus")
def test_aleph_table():
    a = ALEPH_1
    table = [
        (a + a, a),
        (a * finite(2), a * finite(5)),
        (a * a, aleph(2)),
        (a / a, finite(1)),
        (aleph(2) + a, aleph(2)),
        (aleph(2) * a, aleph(3)),
        (aleph(3) / a, aleph(2)),
        (parse_aleph("I(x) + I(y)"), a),
        (parse_aleph("I(x) / I(y)"), finite(1)),
        (parse_aleph("I(x) * I(y)"), aleph(2)),
    ]
    for got, want in table:
        assert got == want
    for m in range(1, 10):
        for n in range(1, 10):
            assert (aleph(m) * aleph(n)) / aleph(n) == aleph(m)
