"""Corpus- and family-level verification campaigns, reporting, and CSV emission.

Each ``check_*`` function evaluates one provable statement on concrete inputs
with exact rational arithmetic and returns a :class:`CheckOutcome`.  Failures
(expected never) embed a replayable witness: the graph6 encodings of the
inputs plus the violating vertex set.  Campaign randomness flows from a single
:class:`~ucir.rng.SplitMix64` stream per run, so a (seed, parameters) pair
fully determines every sampled graph, pair, and independent set.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence, TextIO

from .graph6 import encode_graph6
from .graphs import Graph, VertexCapExceeded, VertexSet, categorical_power, categorical_product, disjoint_union
from .independence import independence_ratio, max_independent_set
from .matching import bipartite_ultimate_ratio, has_fractional_perfect_matching, is_bipartite
from .partition import verify_boundary_chain, verify_partition_laws
from .ratios import HALF, local_independence_ratio, ultimate_independence_ratio
from .rng import SplitMix64, random_graph, random_maximal_independent_set

__all__ = [
    "CampaignConfig",
    "CheckOutcome",
    "Summary",
    "InvariantReport",
    "ConvergenceTable",
    "check_product_ratio_bound",
    "check_product_local_ratio_bound",
    "check_question1",
    "check_union_rule",
    "check_fpm_oracle",
    "check_decomposition",
    "convergence_table",
    "compute_invariant_report",
    "scan_corpus",
    "write_report_csv",
    "random_pairs",
    "corpus_pairs",
    "summarize",
    "REPORT_COLUMNS",
]


@dataclass(frozen=True)
class CampaignConfig:
    """Knobs shared by all campaign entry points; the seed determines all sampling."""

    seed: int = 1
    max_vertices: int = 6
    pair_samples: int = 100
    power_depth: int = 2
    fail_fast: bool = False

    def __post_init__(self) -> None:
        for name in ("seed", "max_vertices", "pair_samples", "power_depth"):
            value = getattr(self, name)
            if value < 1:
                raise ValueError(f"{name} must be positive, got {value}")


@dataclass(frozen=True)
class CheckOutcome:
    check: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""
    witness: dict[str, str] = field(default_factory=dict)


@dataclass
class Summary:
    checked: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0

    def add(self, outcome: CheckOutcome) -> None:
        self.checked += 1
        if outcome.status == "pass":
            self.passed += 1
        elif outcome.status == "fail":
            self.failed += 1
        else:
            self.skipped += 1

    def __str__(self) -> str:
        return (
            f"checked={self.checked} passed={self.passed} "
            f"failed={self.failed} skipped={self.skipped}"
        )


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _setstr(s: VertexSet) -> str:
    return " ".join(map(str, s.sorted()))


def _pair_witness(g: Graph, h: Graph, bad: VertexSet | None = None) -> dict[str, str]:
    w = {"left": encode_graph6(g), "right": encode_graph6(h)}
    if bad is not None:
        w["set"] = _setstr(bad)
    return w


def check_product_ratio_bound(g: Graph, h: Graph) -> CheckOutcome:
    """Independence ratio of the product is at most the larger local ratio.

    On failure the maximum independent set of the product is the witness.
    """
    product = categorical_product(g, h)
    lhs = max_independent_set(product)
    bound = max(local_independence_ratio(g)[0], local_independence_ratio(h)[0])
    if lhs.ratio <= bound:
        return CheckOutcome("weak", "pass", f"i={_frac(lhs.ratio)} <= {_frac(bound)}")
    return CheckOutcome(
        "weak",
        "fail",
        f"i(product)={_frac(lhs.ratio)} exceeds max local ratio {_frac(bound)}",
        _pair_witness(g, h, lhs.witness),
    )


def check_product_local_ratio_bound(g: Graph, h: Graph) -> CheckOutcome:
    """Local ratio of the product is bounded too, given one factor at most 1/2.

    Skipped when both factors have local ratio above 1/2 (the bound can fail
    there; powers drive the ratio toward 1).
    """
    ratio_g, _ = local_independence_ratio(g)
    ratio_h, _ = local_independence_ratio(h)
    if ratio_g > HALF and ratio_h > HALF:
        return CheckOutcome("strong", "skipped", "both local ratios above 1/2")
    product = categorical_product(g, h)
    lhs, witness = local_independence_ratio(product)
    bound = max(ratio_g, ratio_h)
    if lhs <= bound:
        return CheckOutcome("strong", "pass", f"a={_frac(lhs)} <= {_frac(bound)}")
    return CheckOutcome(
        "strong",
        "fail",
        f"a(product)={_frac(lhs)} exceeds max local ratio {_frac(bound)}",
        _pair_witness(g, h, witness),
    )


def check_question1(g: Graph) -> CheckOutcome:
    """The capped ratio survives squaring: a*(G^2) = a*(G).

    Additionally the local ratio itself is preserved when it is at most 1/2,
    and never decreases (lift any witness by crossing with the vertex set).
    """
    square = categorical_power(g, 2)
    base = ultimate_independence_ratio(g)
    lifted = ultimate_independence_ratio(square)
    problems = []
    if lifted.capped_ratio != base.capped_ratio:
        problems.append(
            f"capped ratio changed: {_frac(base.capped_ratio)} -> {_frac(lifted.capped_ratio)}"
        )
    if base.local_ratio <= HALF and lifted.local_ratio != base.local_ratio:
        problems.append(
            f"local ratio <= 1/2 not preserved: {_frac(base.local_ratio)} -> {_frac(lifted.local_ratio)}"
        )
    if lifted.local_ratio < base.local_ratio:
        problems.append(
            f"local ratio decreased: {_frac(base.local_ratio)} -> {_frac(lifted.local_ratio)}"
        )
    if not problems:
        return CheckOutcome("question1", "pass", f"a*={_frac(base.capped_ratio)} on both sides")
    return CheckOutcome(
        "question1",
        "fail",
        "; ".join(problems),
        {"graph": encode_graph6(g), "set": _setstr(lifted.witness)},
    )


def check_union_rule(g: Graph, h: Graph) -> CheckOutcome:
    """Disjoint union and product share the ultimate ratio max{A(G), A(H)}."""
    expected = max(
        ultimate_independence_ratio(g).ultimate_ratio,
        ultimate_independence_ratio(h).ultimate_ratio,
    )
    union_value = ultimate_independence_ratio(disjoint_union(g, h)).ultimate_ratio
    product_value = ultimate_independence_ratio(categorical_product(g, h)).ultimate_ratio
    if union_value == expected == product_value:
        return CheckOutcome("union", "pass", f"A={_frac(expected)} on all three expressions")
    return CheckOutcome(
        "union",
        "fail",
        f"A(union)={_frac(union_value)}, A(product)={_frac(product_value)}, "
        f"max of factors={_frac(expected)}",
        _pair_witness(g, h),
    )


def check_fpm_oracle(g: Graph) -> CheckOutcome:
    """Fractional-matching decision agrees with the brute-force ratio threshold."""
    from .naive import best_ratio_by_subset_scan

    fast = has_fractional_perfect_matching(g)
    brute, witness = best_ratio_by_subset_scan(g)
    slow = brute <= HALF
    if fast == slow:
        return CheckOutcome("fpm-oracle", "pass", f"a={_frac(brute)}, fpm={str(fast).lower()}")
    return CheckOutcome(
        "fpm-oracle",
        "fail",
        f"matching says {fast}, brute force a={_frac(brute)}",
        {"graph": encode_graph6(g), "set": _setstr(witness)},
    )


def check_decomposition(g: Graph, h: Graph, rng: SplitMix64) -> CheckOutcome:
    """Run both decomposition certificates on one random maximal independent set."""
    product = categorical_product(g, h)
    u = random_maximal_independent_set(rng, product)
    laws = verify_partition_laws(g, h, u)
    chain = verify_boundary_chain(g, h, u)
    bad = laws.failures() + chain.failures()
    if not bad:
        return CheckOutcome("zhu", "pass", f"{len(laws.checks) + len(chain.checks)} checks")
    return CheckOutcome(
        "zhu",
        "fail",
        "; ".join(f"{c.name}: {c.detail}" for c in bad),
        _pair_witness(g, h, u),
    )


@dataclass(frozen=True)
class ConvergenceTable:
    """Exact independence ratios of the first ``kmax`` powers, with the limit."""

    rows: tuple[tuple[int, Fraction], ...]
    limit: Fraction
    gap: Fraction
    monotone: bool
    bounded: bool


def convergence_table(g: Graph, kmax: int) -> ConvergenceTable:
    """i(G^k) for k = 1..kmax, checked nondecreasing and bounded by the ultimate ratio."""
    if kmax < 1:
        raise ValueError(f"kmax must be positive, got {kmax}")
    limit = ultimate_independence_ratio(g).ultimate_ratio
    rows = []
    power = g
    for k in range(1, kmax + 1):
        if k > 1:
            power = categorical_product(power, g)
        rows.append((k, independence_ratio(power)))
    values = [v for _, v in rows]
    monotone = all(a <= b for a, b in zip(values, values[1:]))
    bounded = all(v <= limit for v in values)
    return ConvergenceTable(
        rows=tuple(rows),
        limit=limit,
        gap=limit - values[-1],
        monotone=monotone,
        bounded=bounded,
    )


@dataclass(frozen=True)
class InvariantReport:
    """One CSV row worth of exact invariants for a single graph."""

    graph6: str
    n: int
    m: int
    alpha: int
    i: Fraction
    a: Fraction
    a_star: Fraction
    A: Fraction
    a_witness: VertexSet
    fpm: bool
    bipartite_class: str  # bipartite-pm | bipartite-no-pm | non-bipartite


def compute_invariant_report(g: Graph, line: str | None = None) -> InvariantReport:
    mis = max_independent_set(g)
    summary = ultimate_independence_ratio(g)
    fpm = has_fractional_perfect_matching(g)
    part = is_bipartite(g)
    if part is None:
        bclass = "non-bipartite"
    elif bipartite_ultimate_ratio(g, part) == HALF:
        bclass = "bipartite-pm"
    else:
        bclass = "bipartite-no-pm"
    return InvariantReport(
        graph6=line if line is not None else encode_graph6(g),
        n=g.n,
        m=g.m,
        alpha=mis.alpha,
        i=mis.ratio,
        a=summary.local_ratio,
        a_star=summary.capped_ratio,
        A=summary.ultimate_ratio,
        a_witness=summary.witness,
        fpm=fpm,
        bipartite_class=bclass,
    )


SCAN_CHECKS = ("chain", "fpm", "bipartite", "question1")
REPORT_COLUMNS = (
    "graph6", "n", "m", "alpha", "i", "a", "a_star", "A",
    "a_witness", "fpm", "bipartite_class",
    *(f"check_{c}" for c in SCAN_CHECKS),
)


def _scan_one(g: Graph, line: str | None) -> tuple[InvariantReport, dict[str, str]]:
    report = compute_invariant_report(g, line)
    checks: dict[str, str] = {}
    chain_ok = report.i <= report.a <= report.a_star == report.A
    checks["chain"] = "pass" if chain_ok else "fail"
    checks["fpm"] = "pass" if report.fpm == (report.a <= HALF) else "fail"
    if report.bipartite_class == "non-bipartite":
        checks["bipartite"] = "skipped"
    else:
        expected = HALF if report.bipartite_class == "bipartite-pm" else Fraction(1)
        checks["bipartite"] = "pass" if report.A == expected else "fail"
    try:
        checks["question1"] = check_question1(g).status
    except VertexCapExceeded:
        checks["question1"] = "skipped"
    return report, checks


def scan_corpus(
    entries: Iterable[tuple[int, Graph]],
    config: CampaignConfig = CampaignConfig(),
) -> tuple[list[tuple[InvariantReport, dict[str, str]]], Summary]:
    """Evaluate every corpus graph; rows come back in input order.

    Per-graph work is independent and deterministic (the config seed exists
    for the pair-sampling campaigns; nothing here draws from it), so two runs
    over the same corpus produce identical rows.  With ``fail_fast`` the scan
    stops after the first graph with a failing check.
    """
    rows: list[tuple[InvariantReport, dict[str, str]]] = []
    summary = Summary()
    for _, g in entries:
        report, checks = _scan_one(g, None)
        rows.append((report, checks))
        failed_here = False
        for status in checks.values():
            summary.add(CheckOutcome("scan", status))
            failed_here = failed_here or status == "fail"
        if failed_here and config.fail_fast:
            break
    return rows, summary


def write_report_csv(
    rows: Sequence[tuple[InvariantReport, dict[str, str]]], out: TextIO
) -> None:
    """Emit the fixed-column CSV; byte-identical across runs on equal input."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for report, checks in rows:
        writer.writerow(
            [
                report.graph6,
                report.n,
                report.m,
                report.alpha,
                _frac(report.i),
                _frac(report.a),
                _frac(report.a_star),
                _frac(report.A),
                _setstr(report.a_witness),
                str(report.fpm).lower(),
                report.bipartite_class,
                *(checks[c] for c in SCAN_CHECKS),
            ]
        )


def random_pairs(
    count: int, seed: int, max_vertices: int, min_vertices: int = 1
) -> Iterable[tuple[Graph, Graph]]:
    """``count`` seeded random graph pairs; per pair: draw n_left, its edge
    bits, then n_right and its bits (orders uniform on [min, max])."""
    rng = SplitMix64(seed)
    span = max_vertices - min_vertices + 1
    for _ in range(count):
        ng = min_vertices + rng.below(span)
        g = random_graph(rng, ng)
        nh = min_vertices + rng.below(span)
        h = random_graph(rng, nh)
        yield g, h


def corpus_pairs(
    graphs: Sequence[Graph], count: int, seed: int
) -> Iterable[tuple[Graph, Graph]]:
    """``count`` pairs sampled (with replacement) from a corpus: two index draws per pair."""
    rng = SplitMix64(seed)
    if not graphs:
        return
    for _ in range(count):
        a = rng.below(len(graphs))
        b = rng.below(len(graphs))
        yield graphs[a], graphs[b]


def summarize(outcomes: Iterable[CheckOutcome]) -> Summary:
    summary = Summary()
    for outcome in outcomes:
        summary.add(outcome)
    return summary


def run_pair_campaign(
    pairs: Iterable[tuple[Graph, Graph]],
    check: Callable[[Graph, Graph], CheckOutcome],
    fail_fast: bool = False,
) -> list[CheckOutcome]:
    """Apply a pair check across a pair stream, skipping cap-exceeded products."""
    outcomes = []
    for g, h in pairs:
        try:
            outcome = check(g, h)
        except VertexCapExceeded as exc:
            outcome = CheckOutcome(getattr(check, "__name__", "check"), "skipped", str(exc))
        outcomes.append(outcome)
        if fail_fast and outcome.status == "fail":
            break
    return outcomes


def decomposition_campaign(
    graphs: Sequence[Graph], count: int, seed: int, fail_fast: bool = False
) -> list[CheckOutcome]:
    """Certificate campaign over corpus pairs: per instance the stream yields
    two corpus indices, then the shuffle for the maximal independent set."""
    rng = SplitMix64(seed)
    outcomes: list[CheckOutcome] = []
    if not graphs:
        return outcomes
    for _ in range(count):
        g = graphs[rng.below(len(graphs))]
        h = graphs[rng.below(len(graphs))]
        try:
            outcome = check_decomposition(g, h, rng)
        except VertexCapExceeded as exc:
            outcome = CheckOutcome("zhu", "skipped", str(exc))
        outcomes.append(outcome)
        if fail_fast and outcome.status == "fail":
            break
    return outcomes


def decomposition_campaign_random(
    count: int, seed: int, max_vertices: int
) -> list[CheckOutcome]:
    """Certificate campaign over random pairs: per instance the stream yields
    n_left, its edge bits, n_right, its bits, then the shuffle for the set."""
    rng = SplitMix64(seed)
    outcomes = []
    for _ in range(count):
        g = random_graph(rng, 1 + rng.below(max_vertices))
        h = random_graph(rng, 1 + rng.below(max_vertices))
        outcomes.append(check_decomposition(g, h, rng))
    return outcomes
