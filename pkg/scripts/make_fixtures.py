"""Regenerate the golden grid fixture in tests/data from a brute-force oracle.

The oracle shares no code with the package: it lists subsets of a small
ground set, ranks them by sorting, and pairs with the closed formula.
Run from the repository root: python3 scripts/make_fixtures.py
"""
import csv
import itertools
from pathlib import Path

GROUND = 10  # every set among the first 28 has elements below this
N_SETS = 28


def oracle_enumeration(ground, n_sets):
    coded = []
    for k in range(ground + 1):
        # colex: compare largest elements first
        col = sorted(itertools.combinations(range(ground), k), key=lambda s: s[::-1])
        for sig, s in enumerate(col):
            raw = (k + sig) * (k + sig + 1) // 2 + sig
            coded.append((raw, s))
    coded.sort()
    return [s for _, s in coded[:n_sets]]


def oracle_sum_grid(sets):
    bins = {}
    for seq, s in enumerate(sets):
        bins.setdefault(sum(s), []).append((seq, s))
    return bins


def main():
    out = Path(__file__).resolve().parent.parent / "tests" / "data" / "sum_grid_28.csv"
    bins = oracle_sum_grid(oracle_enumeration(GROUND, N_SETS))
    with out.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["kind", "seq", "bin", "index", "set"])
        for b in sorted(bins):
            for idx, (seq, s) in enumerate(bins[b]):
                w.writerow(["SUM", seq, b, idx, "{" + ",".join(map(str, s)) + "}"])
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
