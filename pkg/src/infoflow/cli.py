"""Command-line front end: `infoflow <command> ...`.

Exit status is 0 on success, 1 on invalid input and 2 when a work budget
runs out. Artifacts named with --csv/--pgm are written under the output
directory (INFOFLOW_OUTPUT_DIR, default the working directory) together
with a `.meta.json` sidecar echoing the full run configuration.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .aleph import parse_aleph
from .combinadic import (
    balance_check,
    code_to_set,
    format_set,
    parse_set,
    rank_kset,
    set_info,
    set_to_code,
    unrank_kset,
)
from .core import BudgetExceeded, info, set_log_base, unit_name
from .density import density_profile, named_set, shannon_entropy_estimate
from .efficiency import (
    classify_polynomial,
    delta_poly,
    delta_tree,
    diophantine_density,
    typical_hit_rate,
)
from .expr import parse_expr, parse_poly
from .grids import (
    DEFAULT_NODE_BUDGET,
    DEFAULT_SET_BUDGET,
    GridBuilder,
    count_subsets_with_sum,
    distinct_partition_counts,
    grid_pgm,
    hardy_ramanujan_estimate,
    partition_count,
    subset_sum_first,
    subset_sum_oracle,
    vacuous_stats,
)
from .pairing import cantor_pair_k, cantor_unpair_k, format_graph, graph_decode, graph_encode, parse_graph

log = logging.getLogger("infoflow")

OUTPUT_DIR_ENV = "INFOFLOW_OUTPUT_DIR"
DEFAULT_SEED = 1


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    log_base: float = 2.0
    seed: int | None = None
    work_budget: int | None = None
    output_dir: str = "."
    strict: bool = False
    tolerance: float = 0.01

    def __post_init__(self):
        if not self.log_base > 1:
            raise UsageError(f"log base must be > 1, got {self.log_base}")
        if self.work_budget is not None and self.work_budget < 1:
            raise UsageError("work budget must be positive")

    def require_seed(self, command: str) -> int:
        if self.seed is not None:
            return self.seed
        if self.strict:
            raise UsageError(f"{command} is randomized; --strict requires an explicit --seed")
        log.warning("no --seed given, using default seed %d", DEFAULT_SEED)
        self.seed = DEFAULT_SEED
        return self.seed


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _ints(text: str) -> list[int]:
    try:
        return [int(p) for p in text.replace(" ", "").split(",") if p]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_schedule(text: str) -> list[int]:
    """`10,15,20`, `10..30` (step 1) or `10..30:5`."""
    if ".." not in text:
        return _ints(text)
    span, _, step = text.partition(":")
    a, _, b = span.partition("..")
    try:
        lo, hi, st = int(a), int(b), int(step) if step else 1
    except ValueError:
        raise UsageError(f"bad range {text!r}; use a..b or a..b:step") from None
    if st < 1 or hi < lo:
        raise UsageError(f"bad range {text!r}")
    return list(range(lo, hi + 1, st))


def _bin_range(text: str | None, default_hi: int) -> range:
    if text is None:
        return range(0, default_hi + 1)
    pts = parse_schedule(text)
    return range(pts[0], pts[-1] + 1)


def _bindings(items: Sequence[str]) -> dict[str, int]:
    env = {}
    for item in items:
        for part in item.split(","):
            name, eq, val = part.partition("=")
            if not eq:
                raise UsageError(f"binding must look like name=value, got {part!r}")
            try:
                env[name.strip()] = int(val)
            except ValueError:
                raise UsageError(f"binding value must be an integer: {part!r}") from None
    return env


def _write(cfg: RunConfig, name: str, text: str, command: str, args: dict) -> Path:
    path = Path(name)
    if not path.is_absolute():
        path = Path(cfg.output_dir) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")
    meta = {"command": command, "args": args, "config": asdict(cfg), "version": __version__}
    Path(str(path) + ".meta.json").write_text(
        json.dumps(meta, sort_keys=True, indent=2, default=str) + "\n", encoding="utf-8", newline="\n"
    )
    log.info("wrote %s", path)
    return path


# -- command handlers ---------------------------------------------------------
# Each takes (args, cfg) and returns the text printed on stdout.


def cmd_pair(a, cfg):
    return str(cantor_pair_k(a.values))


def cmd_unpair(a, cfg):
    return " ".join(str(v) for v in cantor_unpair_k(a.n, a.arity))


def cmd_rank(a, cfg):
    return str(rank_kset(parse_set(a.set)))


def cmd_unrank(a, cfg):
    return format_set(unrank_kset(a.k, a.index))


def cmd_setcode(a, cfg):
    s = parse_set(a.set)
    code = set_to_code(s)
    lines = [f"raw {code.raw}", f"dense {code.dense}", f"info {_fmt(set_info(s))} {unit_name()}"]
    if s and rank_kset(s) >= 1:
        lines.append(f"balance {_fmt(balance_check(s))}")
    return "\n".join(lines)


def cmd_decode(a, cfg):
    return format_set(code_to_set(a.code))


def cmd_delta_expr(a, cfg):
    rep = delta_tree(parse_expr(a.expr), _bindings(a.bind))
    lines = [f"{node}\t{_fmt(d)}" for node, d in rep.per_node]
    lines += [
        f"value\t{rep.value}",
        f"node_delta\t{_fmt(rep.node_delta)}",
        f"history_delta\t{_fmt(rep.history_delta)}",
    ]
    return "\n".join(lines)


def cmd_delta_poly(a, cfg):
    p = parse_poly(a.poly)
    xs = _ints(a.at)
    return f"{_fmt(delta_poly(p, xs))}"


def cmd_classify(a, cfg):
    seed = cfg.require_seed("classify")
    p = parse_poly(a.poly)
    res = classify_polynomial(p, parse_schedule(a.t), a.samples, seed)
    table = res.to_csv()
    if a.csv:
        _write(cfg, a.csv, table, "classify", {"poly": a.poly, "t": a.t, "samples": a.samples})
    return f"{res.label} slope={_fmt(res.slope)}\n{table}".rstrip("\n")


def cmd_hit_rate(a, cfg):
    seed = cfg.require_seed("hit-rate")
    rate = typical_hit_rate(parse_poly(a.poly), a.t, a.samples, seed)
    return f"{rate:.6g}"


def cmd_dio_density(a, cfg):
    budget = cfg.work_budget or 10**8
    res = diophantine_density(parse_poly(a.poly), a.bound, a.exclude_trivial, budget)
    lines = [f"count {res.count}", f"total {res.total}", f"density {res.density:.6g}"]
    lines += [" ".join(map(str, s)) for s in res.solutions[: a.show]]
    return "\n".join(lines)


def cmd_density(a, cfg):
    A = named_set(a.set)
    pts = _ints(a.checkpoints) if a.checkpoints else None
    prof = density_profile(A, a.max, pts, cfg.tolerance)
    text = prof.to_csv()
    if a.csv:
        _write(cfg, a.csv, text, "density", {"set": a.set, "max": a.max, "checkpoints": a.checkpoints})
    return text + f"entropy {_fmt(shannon_entropy_estimate(A, a.max))} {unit_name()}"


def cmd_grid(a, cfg):
    kind = a.kind.upper()
    budget = cfg.work_budget or DEFAULT_SET_BUDGET
    keep = _bin_range(a.keep, 0) if a.keep else None
    g = GridBuilder(kind, keep, budget).consume(a.sets).snapshot()
    hi = max(g.counts) if g.counts else 0
    bins = _bin_range(a.bins, min(hi, 64))
    stats = vacuous_stats(g, bins)
    lines = [f"kind {kind} sets {g.sets_consumed}", "bin,occupied,capacity,complete"]
    for st in stats:
        cap = "" if st.capacity is None else st.capacity
        lines.append(f"{st.bin},{st.occupied},{cap},{str(st.complete).lower()}")
    meta = {"kind": kind, "sets": a.sets, "keep": a.keep, "bins": a.bins}
    if a.csv:
        _write(cfg, a.csv, g.to_csv(), "grid", meta)
    if a.pgm:
        _write(cfg, a.pgm, grid_pgm(g, bins, a.height), "grid", meta)
    return "\n".join(lines)


def cmd_partition_count(a, cfg):
    n = a.n
    if n < 0:
        raise UsageError("n must be a natural")
    if not a.detail:
        return str(count_subsets_with_sum(n))
    lines = [
        f"sets {count_subsets_with_sum(n)}",
        f"distinct_parts {distinct_partition_counts(n)[n]}",
        f"partitions {partition_count(n)}",
    ]
    if n >= 1:
        est = hardy_ramanujan_estimate(n)
        lines += [f"hardy_ramanujan {est:.6g}", f"ratio {partition_count(n) / est:.6f}"]
    return "\n".join(lines)


def cmd_subset_sum(a, cfg):
    S = parse_set(a.set)
    hit = subset_sum_first(S, a.k, cfg.work_budget or DEFAULT_NODE_BUDGET)
    out = "none" if hit is None else format_set(hit)
    if a.check:
        if len(S) > 20:
            raise UsageError("--check enumerates all subsets; keep |S| <= 20")
        ref = subset_sum_oracle(S, a.k)
        out += "\noracle " + ("agrees" if ref == hit else f"disagrees: {ref}")
    return out


def cmd_aleph(a, cfg):
    return str(parse_aleph(a.expr))


def cmd_info(a, cfg):
    return _fmt(info(a.n))


def cmd_graph_encode(a, cfg):
    text = sys.stdin.read() if a.file == "-" else Path(a.file).read_text(encoding="utf-8")
    return format_set(graph_encode(parse_graph(text)))


def cmd_graph_decode(a, cfg):
    return format_graph(graph_decode(parse_set(a.set), a.nodes)).rstrip("\n")


# -- parser -------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common(suppress: bool) -> argparse.ArgumentParser:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--base", type=float, default=d(2.0), help="log base for information values (default 2)")
    p.add_argument("--budget", type=int, default=d(None), help="work budget (sets, nodes or tuples)")
    p.add_argument("--output-dir", default=d(None), help=f"artifact directory (default ${OUTPUT_DIR_ENV} or .)")
    p.add_argument("--tolerance", type=float, default=d(0.01), help="density spread tolerance")
    p.add_argument("--strict", action="store_true", default=d(False), help="require explicit seeds")
    p.add_argument("-v", "--verbose", action="count", default=d(0))
    return p


# (name, handler, help text naming the construction it implements)
COMMANDS: list[tuple[str, Callable, str]] = [
    ("pair", cmd_pair, "Cantor pairing (x+y)(x+y+1)/2 + y; more than two values fold to the right"),
    ("unpair", cmd_unpair, "inverse Cantor pairing via the integer triangular root"),
    ("rank", cmd_rank, "combinatorial number system rank sigma_k(s) = sum C(s_i, i)"),
    ("unrank", cmd_unrank, "combinatorial number system unrank of the k-subset at a colex index"),
    ("setcode", cmd_setcode, "set coding pi(|s|, sigma(s)): raw and dense codes, set information, balance"),
    ("decode", cmd_decode, "set coding inverse: the finite set with a given dense code"),
    ("delta-expr", cmd_delta_expr, "information efficiency delta of an expression, per node and over its history"),
    ("delta-poly", cmd_delta_poly, "information efficiency delta of a polynomial function at given inputs"),
    ("classify", cmd_classify, "polynomial classification under maximal entropy (Monte Carlo slope of delta)"),
    ("hit-rate", cmd_hit_rate, "typical-solution rate of a diophantine equation on random dyadic inputs"),
    ("dio-density", cmd_dio_density, "diophantine solution density by exhaustive counting"),
    ("density", cmd_density, "compression function and lower/upper/natural density profile, Shannon estimate"),
    ("grid", cmd_grid, "cardinality, sum and product information grids with vacuous cells"),
    ("partition-count", cmd_partition_count, "sum grid bin capacity via distinct-part partitions; Hardy-Ramanujan estimate"),
    ("subset-sum", cmd_subset_sum, "subset sum: first solution in canonical cardinality-grid order"),
    ("aleph", cmd_aleph, "symbolic calculus of the information limit aleph_{-1} = lim log x"),
    ("info", cmd_info, "information measure I(n) = log n, with I(0) = I(1) = 0"),
    ("graph-encode", cmd_graph_encode, "directed graph encoding onto points of the Cantor grid"),
    ("graph-decode", cmd_graph_decode, "directed graph decoding from Cantor grid points"),
]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="infoflow", description=__doc__.splitlines()[0], parents=[_common(False)])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common(True)
    subs = {}
    for name, handler, text in COMMANDS:
        sp = sub.add_parser(name, help=text, description=text, parents=[common])
        sp.set_defaults(handler=handler)
        subs[name] = sp

    subs["pair"].add_argument("values", type=int, nargs="+")
    subs["unpair"].add_argument("n", type=int)
    subs["unpair"].add_argument("--arity", type=int, default=2)
    subs["rank"].add_argument("set", help="e.g. {1,2,4}")
    subs["unrank"].add_argument("k", type=int)
    subs["unrank"].add_argument("index", type=int)
    subs["setcode"].add_argument("set")
    subs["decode"].add_argument("code", type=int)
    subs["delta-expr"].add_argument("expr", help="e.g. '(2+98)+(47+53)' or 'x+(y+z)'")
    subs["delta-expr"].add_argument("--bind", action="append", default=[], help="x=1 (repeatable or comma separated)")
    subs["delta-poly"].add_argument("poly", help="e.g. '1*x1^3 + 1*x2^3 - 1*x3^3'")
    subs["delta-poly"].add_argument("--at", required=True, help="comma-separated inputs")
    for name in ("classify", "hit-rate"):
        subs[name].add_argument("poly")
        subs[name].add_argument("--samples", type=int, default=1000)
        subs[name].add_argument("--seed", type=int, default=None)
    subs["classify"].add_argument("--t", default="10..30:5", help="magnitude exponents: a..b[:step] or a,b,c")
    subs["classify"].add_argument("--csv")
    subs["hit-rate"].add_argument("--t", type=int, default=20)
    subs["dio-density"].add_argument("poly")
    subs["dio-density"].add_argument("--bound", type=int, required=True)
    subs["dio-density"].add_argument("--exclude-trivial", action="store_true")
    subs["dio-density"].add_argument("--show", type=int, default=0, help="print this many solutions")
    subs["density"].add_argument("set", help="naturals, evens, odds, squares, primes, leading1 or 'r mod m'")
    subs["density"].add_argument("--max", type=int, required=True)
    subs["density"].add_argument("--checkpoints", help="comma-separated, ascending, <= --max")
    subs["density"].add_argument("--csv")
    subs["grid"].add_argument("kind", choices=["card", "sum", "prod"])
    subs["grid"].add_argument("--sets", type=int, required=True)
    subs["grid"].add_argument("--bins", help="bin range a..b for the table and bitmap")
    subs["grid"].add_argument("--keep", help="retain occupants only for bins a..b")
    subs["grid"].add_argument("--height", type=int, help="bitmap height (default: deepest bin)")
    subs["grid"].add_argument("--csv")
    subs["grid"].add_argument("--pgm")
    subs["partition-count"].add_argument("n", type=int)
    subs["partition-count"].add_argument("--detail", action="store_true")
    subs["subset-sum"].add_argument("set")
    subs["subset-sum"].add_argument("k", type=int)
    subs["subset-sum"].add_argument("--check", action="store_true", help="compare with the exhaustive oracle")
    subs["aleph"].add_argument("expr", help="e.g. 'a + a', 'a^2 / a'")
    subs["info"].add_argument("n", type=int)
    subs["graph-encode"].add_argument("file", help="graph text file or - for stdin")
    subs["graph-decode"].add_argument("set")
    subs["graph-decode"].add_argument("--nodes", type=int, required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        cfg = RunConfig(
            log_base=args.base,
            seed=getattr(args, "seed", None),
            work_budget=args.budget,
            output_dir=args.output_dir or os.environ.get(OUTPUT_DIR_ENV, "."),
            strict=args.strict,
            tolerance=args.tolerance,
        )
        set_log_base(cfg.log_base)
        out = args.handler(args, cfg)
    except BudgetExceeded as exc:
        print(f"infoflow: budget exhausted: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, ZeroDivisionError, OSError) as exc:
        print(f"infoflow: error: {exc}", file=sys.stderr)
        return 1
    finally:
        set_log_base(2.0)
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
