import itertools
import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from infoflow.combinadic import dense_prefix_covering, enumerate_sets, rank_kset, unrank_kset
from infoflow.core import BudgetExceeded
from infoflow.grids import (
    CARD,
    PROD,
    SUM,
    GridBuilder,
    bin_capacity,
    build_grid,
    card_grid_build,
    card_grid_locate,
    count_subsets_with_product,
    count_subsets_with_sum,
    distinct_partition_counts,
    grid_pgm,
    hardy_ramanujan_estimate,
    partition_count,
    partition_counts,
    prod_grid_build,
    read_snapshot_csv,
    subset_sum_first,
    subset_sum_oracle,
    sum_grid_build,
    vacuous_stats,
)

DATA = Path(__file__).parent / "data"


def brute_sum_count(n):
    return sum(1 for k in range(n + 2) for s in itertools.combinations(range(n + 1), k) if sum(s) == n)


def brute_prod_count(n):
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    return sum(1 for k in range(len(divisors) + 1) for s in itertools.combinations(divisors, k) if _prod(s) == n)


def _prod(s):
    p = 1
    for x in s:
        p *= x
    return p


def test_card_locate():
    assert card_grid_locate((0, 1, 2)).bin == 3 and card_grid_locate((0, 1, 2)).index == 0
    cell = card_grid_locate((1, 2, 4))
    assert (cell.bin, cell.index) == (3, 6)
    assert (card_grid_locate(()).bin, card_grid_locate(()).index) == (0, 0)


def test_sum_counts():
    assert count_subsets_with_sum(0) == 2
    assert count_subsets_with_sum(5) == 6
    assert count_subsets_with_sum(10) == 20
    for n in range(16):
        assert count_subsets_with_sum(n) == brute_sum_count(n)


def test_product_counts():
    assert count_subsets_with_product(0) is None
    assert count_subsets_with_product(1) == 2
    for n in range(1, 40):
        assert count_subsets_with_product(n) == brute_prod_count(n)


def test_partition_tables():
    assert partition_counts(10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert distinct_partition_counts(10) == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]
    assert partition_count(100) == 190569292


def test_hardy_ramanujan():
    ratios = [partition_count(n) / hardy_ramanujan_estimate(n) for n in (50, 100, 200)]
    assert ratios[1] == pytest.approx(0.95, abs=0.01)
    assert ratios == sorted(ratios)
    assert hardy_ramanujan_estimate(1) == pytest.approx(2.718281828459045 ** (3.141592653589793 * (2 / 3) ** 0.5) / (4 * 3**0.5))
    with pytest.raises(ValueError):
        hardy_ramanujan_estimate(0)


def test_first_cells():
    g = sum_grid_build(1)
    assert g.occupants(0) == [()]
    assert g.cell(0, 0).occupant == ()


def test_sum_grid_28_golden():
    g = sum_grid_build(28)
    golden = (DATA / "sum_grid_28.csv").read_text()
    assert g.to_csv() == golden
    back = read_snapshot_csv(golden)
    assert back.bins == g.bins


def test_bin5_after_all_sets_below_8():
    g = sum_grid_build(dense_prefix_covering(7), keep_bins={5})
    assert sorted(g.occupants(5)) == sorted([(5,), (0, 5), (1, 4), (0, 1, 4), (2, 3), (0, 2, 3)])
    # enumeration order: larger cardinality first within each diagonal
    assert g.occupants(5) == [(0, 2, 3), (5,), (0, 1, 4), (2, 3), (1, 4), (0, 5)]
    assert vacuous_stats(g, [5])[0].complete


def test_replay_is_deterministic():
    b = GridBuilder(SUM)
    b.consume(300)
    b.consume(700)
    assert b.snapshot().bins == sum_grid_build(1000).bins


@pytest.mark.parametrize("kind", [SUM, PROD, CARD])
def test_bin_correctness_and_injectivity(kind):
    g = build_grid(kind, 5000)
    seen = set()
    for b, held in g.bins.items():
        for _, s in held:
            if kind == SUM:
                assert sum(s) == b
            elif kind == PROD:
                assert (0 if 0 in s else _prod(s)) == b
            else:
                assert len(s) == b
            assert s not in seen
            seen.add(s)
    assert len(seen) == 5000


def test_card_columns_in_sigma_order():
    g = card_grid_build(5000)
    for k, held in g.bins.items():
        if k:
            assert [rank_kset(s) for _, s in held] == list(range(len(held)))


def test_index_shift():
    g = sum_grid_build(10**4)
    for b, held in g.bins.items():
        for _, s in held:
            k = len(s)
            assert b >= k * (k - 1) // 2


def test_retention_window_counts_everything():
    full = sum_grid_build(3000)
    windowed = sum_grid_build(3000, keep_bins=range(4, 7))
    assert windowed.counts == full.counts
    assert set(windowed.bins) <= {4, 5, 6}
    for b in windowed.bins:
        assert windowed.bins[b] == full.bins[b]


def test_prod_conventions():
    g = prod_grid_build(20000)
    assert g.occupants(1)[0] == ()
    assert g.occupants(6) == [(1, 2, 3), (2, 3), (6,), (1, 6)]
    assert bin_capacity(PROD, 0) is None
    assert all(0 in s for s in g.occupants(0))


def test_vacuous_stats_and_capacity():
    g = sum_grid_build(500)
    st0 = vacuous_stats(g, [0])[0]
    assert st0.occupied == 2 and st0.complete
    card = card_grid_build(500)
    for stat in vacuous_stats(card, range(1, 6)):
        assert stat.capacity is None
        assert [rank_kset(s) for s in card.occupants(stat.bin)] == list(range(stat.occupied))
    cell = g.cell(1, 5)
    assert cell.vacuous and cell.occupant is None
    assert not g.cell(30, 0).vacuous


def test_budget():
    with pytest.raises(BudgetExceeded):
        sum_grid_build(100, budget=50)
    with pytest.raises(ValueError):
        GridBuilder("TRIANGLE")


def test_pgm():
    g = sum_grid_build(28)
    text = grid_pgm(g, range(0, 6))
    lines = text.splitlines()
    assert lines[:3] == ["P2", "6 4", "255"]
    rows = [list(map(int, ln.split())) for ln in lines[3:]]
    bottom, top = rows[-1], rows[0]
    assert bottom == [0] * 6
    # bins 0..2 hold 2 sets each; above that they are provably vacuous
    assert top[:3] == [128, 128, 128]
    assert top[3] == 0 and top[4] == 255


def test_csv_reader_rejects_gaps():
    with pytest.raises(ValueError):
        read_snapshot_csv("kind,seq,bin,index,set\nSUM,0,0,1,{}\n")


def test_subset_sum_examples():
    assert subset_sum_first({1, 2}, 5) is None
    assert subset_sum_first({3}, 3) == (3,)
    assert subset_sum_first({4, 9}, 0) == ()
    # both pairs add to 100; colex compares top elements first and 53 < 98
    assert subset_sum_first({2, 47, 53, 98}, 100) == (47, 53)
    assert subset_sum_oracle({2, 47, 53, 98}, 100) == (47, 53)
    assert rank_kset((47, 53)) < rank_kset((2, 98))


@settings(max_examples=300)
@given(st.sets(st.integers(0, 60), max_size=12), st.integers(0, 300))
def test_subset_sum_matches_oracle(S, k):
    assert subset_sum_first(S, k) == subset_sum_oracle(S, k)


def test_subset_sum_budget():
    # an odd target over even numbers survives every bound-based prune
    S = set(range(2, 62, 2))
    with pytest.raises(BudgetExceeded):
        subset_sum_first(S, 451, budget=1000)
    assert subset_sum_first(set(range(2, 26, 2)), 51) is None


def test_enumeration_prefix_holds_the_bins():
    # every set counted in a complete SUM bin appears before the covering prefix ends
    n = dense_prefix_covering(6)
    sets = enumerate_sets(n)
    assert {s for s in sets if sum(s) == 6} == {
        s for k in range(8) for s in itertools.combinations(range(7), k) if sum(s) == 6
    }
    assert unrank_kset(2, rank_kset((2, 4))) == (2, 4)
