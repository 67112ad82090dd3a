"""Command-line interface.

Exit codes: 0 all checks passed, 1 at least one check failed (a replayable
counterexample is printed), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .graph6 import Graph6Error, encode_graph6, read_corpus
from .graphs import Graph, VertexCapExceeded, categorical_power, categorical_product, family, family_names
from .harness import (
    CampaignConfig,
    CheckOutcome,
    check_fpm_oracle,
    check_question1,
    check_product_local_ratio_bound,
    check_product_ratio_bound,
    check_union_rule,
    convergence_table,
    corpus_pairs,
    decomposition_campaign,
    run_pair_campaign,
    scan_corpus,
    summarize,
    write_report_csv,
)

_FAMILY_DOC = {
    "complete": "complete N        clique on N vertices",
    "cycle": "cycle N           cycle, N >= 3",
    "path": "path N            path on N vertices",
    "star": "star K            one center with K leaves",
    "complete_multipartite": "complete_multipartite S1 S2 ...   parts of the given sizes",
    "petersen": "petersen          the Petersen graph",
    "edgeless": "edgeless N        N isolated vertices",
}

_VERIFY_DOC = """\
weak        independence ratio of a sampled product vs the factor local ratios
strong      local ratio of a sampled product vs the factor local ratios
question1   squaring preserves the capped ratio, per corpus graph
union       disjoint union and product share the max ultimate ratio
zhu         decomposition certificates on random maximal independent sets
fpm-oracle  matching-based 1/2-threshold decision vs brute force, per graph
"""


def _load_graphs(path: str) -> list[Graph]:
    with open(path, "r") as fh:
        return [g for _, g in read_corpus(fh)]


def _write_g6(graphs: list[Graph], path: str | None) -> None:
    lines = [encode_graph6(g) for g in graphs]
    if path is None:
        for line in lines:
            print(line)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))


def _report_outcomes(outcomes: list[CheckOutcome], label: str) -> int:
    for o in outcomes:
        if o.status == "fail":
            print(f"FAIL {o.check}: {o.detail}", file=sys.stderr)
            for key, value in o.witness.items():
                print(f"  {key}: {value}", file=sys.stderr)
    summary = summarize(outcomes)
    print(f"{label}: {summary}")
    return 1 if summary.failed else 0


def _cmd_compute(args: argparse.Namespace) -> int:
    with open(args.infile, "r") as fh:
        rows, summary = scan_corpus(read_corpus(fh))
    if args.out is None:
        write_report_csv(rows, sys.stdout)
    else:
        with open(args.out, "w", newline="\n") as fh:
            write_report_csv(rows, fh)
    print(f"compute: {summary}", file=sys.stderr)
    return 1 if summary.failed else 0


def _cmd_product(args: argparse.Namespace) -> int:
    left = _load_graphs(args.left)
    right = _load_graphs(args.right)
    out = [categorical_product(g, h) for g in left for h in right]
    _write_g6(out, args.out)
    return 0


def _cmd_power(args: argparse.Namespace) -> int:
    graphs = _load_graphs(args.infile)
    out = [categorical_power(g, args.k) for g in graphs]
    _write_g6(out, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    graphs = _load_graphs(args.infile)
    config = CampaignConfig(seed=args.seed, pair_samples=args.pairs)
    mode = args.mode
    if mode in ("weak", "strong", "union"):
        check = {
            "weak": check_product_ratio_bound,
            "strong": check_product_local_ratio_bound,
            "union": check_union_rule,
        }[mode]
        pairs = corpus_pairs(graphs, config.pair_samples, config.seed)
        outcomes = run_pair_campaign(pairs, check, fail_fast=config.fail_fast)
    elif mode == "zhu":
        outcomes = decomposition_campaign(
            graphs, config.pair_samples, config.seed, fail_fast=config.fail_fast
        )
    elif mode == "question1":
        outcomes = []
        for g in graphs:
            try:
                outcomes.append(check_question1(g))
            except VertexCapExceeded as exc:
                outcomes.append(CheckOutcome("question1", "skipped", str(exc)))
    elif mode == "fpm-oracle":
        outcomes = []
        for g in graphs:
            try:
                outcomes.append(check_fpm_oracle(g))
            except ValueError as exc:
                outcomes.append(CheckOutcome("fpm-oracle", "skipped", str(exc)))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown verify mode {mode!r}")
    return _report_outcomes(outcomes, f"verify {mode}")


def _cmd_converge(args: argparse.Namespace) -> int:
    graphs = _load_graphs(args.infile)
    violations = 0
    for g in graphs:
        table = convergence_table(g, args.k)
        line = encode_graph6(g) + ": " + "  ".join(
            f"i(^{k})={v.numerator}/{v.denominator}" for k, v in table.rows
        )
        line += (
            f"  A={table.limit.numerator}/{table.limit.denominator}"
            f"  gap={table.gap.numerator}/{table.gap.denominator}"
        )
        if not (table.monotone and table.bounded):
            violations += 1
            line += "  VIOLATION"
        print(line)
    return 1 if violations else 0


def _cmd_families(args: argparse.Namespace) -> int:
    if args.list:
        for name in family_names():
            print(_FAMILY_DOC[name])
        return 0
    if args.emit:
        name, *params = args.emit
        g = family(name, [int(p) for p in params])
        _write_g6([g], args.out)
        return 0
    print("families: use --list or --emit NAME PARAMS", file=sys.stderr)
    return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ucir",
        description="Exact ultimate categorical independence ratios of simple graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariant report (CSV) for every graph in a corpus")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE.g6")
    p.add_argument("--out", default=None, metavar="REPORT.csv")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("product", help="categorical products of graphs from two corpora")
    p.add_argument("--left", required=True, metavar="A.g6")
    p.add_argument("--right", required=True, metavar="B.g6")
    p.add_argument("--out", default=None, metavar="P.g6")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("power", help="categorical powers of graphs in a corpus")
    p.add_argument("--in", dest="infile", required=True, metavar="A.g6")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--out", default=None, metavar="P.g6")
    p.set_defaults(func=_cmd_power)

    p = sub.add_parser(
        "verify",
        help="run one verification campaign over a corpus",
        description=_VERIFY_DOC,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument(
        "mode",
        choices=["weak", "strong", "question1", "union", "zhu", "fpm-oracle"],
    )
    p.add_argument("--in", dest="infile", required=True, metavar="FILE.g6")
    p.add_argument("--pairs", type=int, default=100, help="sampled pairs (pair campaigns)")
    p.add_argument("--seed", type=int, default=1, help="campaign seed (splitmix64 stream)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("converge", help="independence ratios of the first k powers")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE.g6")
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=_cmd_converge)

    p = sub.add_parser("families", help="list or emit the named fixture graphs")
    p.add_argument("--list", action="store_true")
    p.add_argument("--emit", nargs="+", metavar="NAME PARAM", default=None)
    p.add_argument("--out", default=None, metavar="F.g6")
    p.set_defaults(func=_cmd_families)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
