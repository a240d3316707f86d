"""Command-line harness for well-coveredness analysis of graphs and their
Cartesian products.

Subcommands:
    analyze <g6|->        well-covered report, isolatable vertices, size histogram
    product <g6> <g6>     product construction plus full pair verification
    witness <g6> <g6>     constructive distinct-cardinality witness in the product
    scan [options]        pair scan over generated and ingested corpora
    gen <n>               canonical graph6 lines, one per isomorphism class

Graphs are read as graph6 lines from arguments, files (--corpus), or
standard input (one per line).  Reports are JSON (scan also supports CSV).

Exit codes: 0 success/consistent, 1 scan found a consistency violation,
2 input error, 3 resource cap exceeded, 4 witness hypotheses not applicable.

Environment: WELLCOVERED_ENUM_CAP and WELLCOVERED_PRODUCT_CAP override the
default caps; explicit flags take precedence over both.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement, product as iter_product
from typing import Iterable, TextIO

from .corpus import GENERATION_CAP, generate_all_graphs
from .graphs import (
    CapExceeded,
    Graph,
    Graph6Error,
    VertexSet,
    from_graph6,
    is_connected,
    to_graph6,
)
from .independence import (
    DEFAULT_ENUMERATION_CAP,
    IsolatableWitness,
    WellCoveredReport,
    is_well_covered,
    isolatable_vertices,
    mis_size_histogram,
)
from .theorem import (
    FactorAnalysis,
    PairVerdict,
    ProductWitness,
    analyze_factor,
    build_product_witness,
    verify_pair,
    witness_inputs,
    witness_invariants,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP = 3
EXIT_NOT_APPLICABLE = 4

ENV_ENUM_CAP = "WELLCOVERED_ENUM_CAP"
ENV_PRODUCT_CAP = "WELLCOVERED_PRODUCT_CAP"

DEFAULT_SCAN_FACTOR_ORDER = 5
DEFAULT_SCAN_PRODUCT_ORDER = 30
DEFAULT_PRODUCT_CMD_CAP = 36
DEFAULT_WITNESS_CMD_CAP = 1024


# ---------------------------------------------------------------------------
# Scan machinery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanConfig:
    """Configuration of one pair scan; identical configs give byte-identical
    reports regardless of parallelism."""

    max_factor_order: int = DEFAULT_SCAN_FACTOR_ORDER
    max_product_order: int = DEFAULT_SCAN_PRODUCT_ORDER
    corpus_paths: tuple[str, ...] = ()
    generate_up_to: int = 5
    parallelism: int = 1
    output_format: str = "json"
    connected_only: bool = False
    enum_cap: int = DEFAULT_ENUMERATION_CAP

    def __post_init__(self) -> None:
        if self.max_factor_order < 1:
            raise ValueError("max factor order must be positive")
        if self.max_product_order < 1:
            raise ValueError("max product order must be positive")
        if not 0 <= self.generate_up_to <= GENERATION_CAP:
            raise ValueError(f"generate_up_to must be between 0 and {GENERATION_CAP}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be positive")
        if self.output_format not in ("json", "csv"):
            raise ValueError("output format must be json or csv")
        if self.enum_cap < 1:
            raise ValueError("enumeration cap must be positive")


@dataclass(frozen=True)
class ScanRecord:
    """One unordered pair: factor verdicts, product verdict, witness summary."""

    g6_g: str
    g6_h: str
    g_well_covered: bool
    g_alpha: int
    g_min_maximal: int
    g_isolatable: tuple[int, ...]
    h_well_covered: bool
    h_alpha: int
    h_min_maximal: int
    h_isolatable: tuple[int, ...]
    product_n: int
    product_m: int
    product_well_covered: bool
    product_alpha: int
    product_min_maximal: int
    theorem_consistent: bool
    witness_applicable: bool
    witness_swapped: bool | None
    witness_big_size: int | None
    witness_small_size: int | None


@dataclass(frozen=True)
class ScanResult:
    config: ScanConfig
    records: tuple[ScanRecord, ...]
    violations: tuple[tuple[ScanRecord, PairVerdict], ...]

    @property
    def cells(self) -> list[dict]:
        counts: dict[tuple[bool, bool, bool], int] = {
            key: 0 for key in iter_product((False, True), repeat=3)
        }
        for rec in self.records:
            counts[(rec.g_well_covered, rec.h_well_covered, rec.product_well_covered)] += 1
        return [
            {
                "g_well_covered": g,
                "h_well_covered": h,
                "product_well_covered": p,
                "count": counts[(g, h, p)],
            }
            for g, h, p in sorted(counts)
        ]

    def cell_count(self, g_wc: bool, h_wc: bool, product_wc: bool) -> int:
        return sum(
            1
            for rec in self.records
            if (rec.g_well_covered, rec.h_well_covered, rec.product_well_covered)
            == (g_wc, h_wc, product_wc)
        )


def load_corpus(config: ScanConfig) -> list[Graph]:
    """Generated plus ingested graphs, filtered by the factor caps and
    deduplicated by canonical graph6 line."""
    graphs: list[Graph] = []
    for n in range(1, config.generate_up_to + 1):
        graphs.extend(generate_all_graphs(n))
    for path in config.corpus_paths:
        with open(path, "r", encoding="ascii") as handle:
            for line in handle:
                if line.strip():
                    graphs.append(from_graph6(line))
    selected: dict[str, Graph] = {}
    for graph in graphs:
        if not 1 <= graph.n <= config.max_factor_order:
            continue
        if config.connected_only and not is_connected(graph):
            continue
        selected.setdefault(to_graph6(graph), graph)
    return [selected[key] for key in sorted(selected)]


def _record_from_verdict(g6_g: str, g6_h: str, verdict: PairVerdict) -> ScanRecord:
    return ScanRecord(
        g6_g=g6_g,
        g6_h=g6_h,
        g_well_covered=verdict.g_report.verdict,
        g_alpha=verdict.g_report.alpha,
        g_min_maximal=verdict.g_report.min_maximal,
        g_isolatable=tuple(w.vertex for w in verdict.g_isolatable),
        h_well_covered=verdict.h_report.verdict,
        h_alpha=verdict.h_report.alpha,
        h_min_maximal=verdict.h_report.min_maximal,
        h_isolatable=tuple(w.vertex for w in verdict.h_isolatable),
        product_n=verdict.product_order,
        product_m=verdict.product_size,
        product_well_covered=verdict.product_report.verdict,
        product_alpha=verdict.product_report.alpha,
        product_min_maximal=verdict.product_report.min_maximal,
        theorem_consistent=verdict.theorem_consistent,
        witness_applicable=verdict.witness is not None,
        witness_swapped=verdict.witness_swapped if verdict.witness else None,
        witness_big_size=len(verdict.witness.big) if verdict.witness else None,
        witness_small_size=len(verdict.witness.small) if verdict.witness else None,
    )


def _evaluate_pair(
    task: tuple[str, str, Graph, Graph, FactorAnalysis, FactorAnalysis, int],
) -> tuple[ScanRecord, PairVerdict | None]:
    g6_g, g6_h, graph_g, graph_h, analysis_g, analysis_h, enum_cap = task
    verdict = verify_pair(
        graph_g,
        graph_h,
        enum_cap=enum_cap,
        g_analysis=analysis_g,
        h_analysis=analysis_h,
    )
    record = _record_from_verdict(g6_g, g6_h, verdict)
    return record, (verdict if not verdict.theorem_consistent else None)


def scan(config: ScanConfig) -> ScanResult:
    """Evaluate every unordered corpus pair whose product fits the cap."""
    corpus = load_corpus(config)
    enum_cap = max(config.enum_cap, config.max_product_order)
    labeled = [(to_graph6(graph), graph) for graph in corpus]
    analyses = {g6: analyze_factor(graph, enum_cap) for g6, graph in labeled}
    tasks = [
        (g6_g, g6_h, graph_g, graph_h, analyses[g6_g], analyses[g6_h], enum_cap)
        for (g6_g, graph_g), (g6_h, graph_h) in combinations_with_replacement(labeled, 2)
        if graph_g.n * graph_h.n <= config.max_product_order
    ]
    if config.parallelism > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (config.parallelism * 4))
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            outcomes = list(pool.map(_evaluate_pair, tasks, chunksize=chunk))
    else:
        outcomes = [_evaluate_pair(task) for task in tasks]
    outcomes.sort(key=lambda item: (item[0].g6_g, item[0].g6_h))
    records = tuple(record for record, _ in outcomes)
    violations = tuple(
        (record, verdict) for record, verdict in outcomes if verdict is not None
    )
    return ScanResult(config=config, records=records, violations=violations)


# ---------------------------------------------------------------------------
# JSON / CSV rendering
# ---------------------------------------------------------------------------


def _set_list(s: VertexSet) -> list[int]:
    return list(s)

def _report_dict(report: WellCoveredReport) -> dict:
    return {
        "well_covered": report.verdict,
        "alpha": report.alpha,
        "min_maximal": report.min_maximal,
        "witness_max": _set_list(report.witness_max),
        "witness_min": _set_list(report.witness_min),
    }


def _isolatable_list(witnesses: Iterable[IsolatableWitness]) -> list[dict]:
    return [
        {"vertex": w.vertex, "certificate": _set_list(w.certificate)} for w in witnesses
    ]


def _record_dict(rec: ScanRecord) -> dict:
    return {
        "g6_g": rec.g6_g,
        "g6_h": rec.g6_h,
        "g_well_covered": rec.g_well_covered,
        "g_alpha": rec.g_alpha,
        "g_min_maximal": rec.g_min_maximal,
        "g_isolatable": list(rec.g_isolatable),
        "h_well_covered": rec.h_well_covered,
        "h_alpha": rec.h_alpha,
        "h_min_maximal": rec.h_min_maximal,
        "h_isolatable": list(rec.h_isolatable),
        "product_n": rec.product_n,
        "product_m": rec.product_m,
        "product_well_covered": rec.product_well_covered,
        "product_alpha": rec.product_alpha,
        "product_min_maximal": rec.product_min_maximal,
        "theorem_consistent": rec.theorem_consistent,
        "witness_applicable": rec.witness_applicable,
        "witness_swapped": rec.witness_swapped,
        "witness_big_size": rec.witness_big_size,
        "witness_small_size": rec.witness_small_size,
    }


CSV_COLUMNS = [
    "g6_g", "g6_h",
    "g_well_covered", "g_alpha", "g_min_maximal", "g_isolatable",
    "h_well_covered", "h_alpha", "h_min_maximal", "h_isolatable",
    "product_n", "product_m",
    "product_well_covered", "product_alpha", "product_min_maximal",
    "theorem_consistent",
    "witness_applicable", "witness_swapped", "witness_big_size", "witness_small_size",
]


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(map(str, value))
    return str(value)


def render_scan_csv(result: ScanResult, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in result.records:
        row = _record_dict(rec)
        writer.writerow([_csv_cell(row[col]) for col in CSV_COLUMNS])


def render_scan_json(result: ScanResult) -> str:
    config = result.config
    # Execution details (parallelism, output format) are deliberately not
    # echoed: identical scan inputs give byte-identical reports.
    document = {
        "config": {
            "max_factor_order": config.max_factor_order,
            "max_product_order": config.max_product_order,
            "corpus_paths": list(config.corpus_paths),
            "generate_up_to": config.generate_up_to,
            "connected_only": config.connected_only,
            "enum_cap": config.enum_cap,
        },
        "records": [_record_dict(rec) for rec in result.records],
        "summary": {
            "pairs": len(result.records),
            "cells": result.cells,
            "violations": [
                {
                    "record": _record_dict(rec),
                    "g_report": _report_dict(verdict.g_report),
                    "h_report": _report_dict(verdict.h_report),
                    "product_report": _report_dict(verdict.product_report),
                }
                for rec, verdict in result.violations
            ],
        },
    }
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def _witness_set_dict(s: VertexSet, witness: ProductWitness) -> dict:
    return {
        "size": len(s),
        "indices": _set_list(s),
        "pairs": [list(witness.index_map.decode(p)) for p in s],
    }


def _witness_dict(
    g6_g: str, g6_h: str, swapped: bool, witness: ProductWitness, checks: dict[str, bool]
) -> dict:
    return {
        "g6_g": g6_g,
        "g6_h": g6_h,
        "swapped": swapped,
        "isolatable_vertex": witness.isolatable_vertex,
        "isolating_set": _set_list(witness.isolating_set),
        "column_big": _set_list(witness.column_big),
        "column_small": _set_list(witness.column_small),
        "sets": {
            name: _witness_set_dict(getattr(witness, name), witness)
            for name in (
                "core", "core_big", "core_small",
                "gaps_big", "gaps_small",
                "patch_small", "patch_big",
                "big", "small",
            )
        },
        "checks": checks,
        "all_checks_pass": all(checks.values()),
    }


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return fallback
    return int(raw)


def _resolve_cap(flag_value: int | None, env_name: str, fallback: int) -> int:
    if flag_value is not None:
        return flag_value
    return _env_int(env_name, fallback)


def _print_json(obj: dict) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _analysis_dict(graph: Graph, cap: int) -> dict:
    report = is_well_covered(graph, cap)
    return {
        "graph6": to_graph6(graph),
        "n": graph.n,
        "m": graph.edge_count,
        **_report_dict(report),
        "mis_size_histogram": {
            str(size): count for size, count in mis_size_histogram(graph, cap).items()
        },
        "isolatable": _isolatable_list(isolatable_vertices(graph, cap)),
    }


def _cmd_analyze(args: argparse.Namespace) -> int:
    enum_cap = _resolve_cap(args.enum_cap, ENV_ENUM_CAP, DEFAULT_ENUMERATION_CAP)
    if args.graph == "-":
        for line in sys.stdin:
            if line.strip():
                print(json.dumps(_analysis_dict(from_graph6(line), enum_cap), sort_keys=True))
    else:
        _print_json(_analysis_dict(from_graph6(args.graph), enum_cap))
    return EXIT_OK


def _cmd_product(args: argparse.Namespace) -> int:
    enum_cap = _resolve_cap(args.enum_cap, ENV_ENUM_CAP, DEFAULT_ENUMERATION_CAP)
    product_cap = _resolve_cap(args.product_cap, ENV_PRODUCT_CAP, DEFAULT_PRODUCT_CMD_CAP)
    graph_g = from_graph6(args.g6_g)
    graph_h = from_graph6(args.g6_h)
    verdict = verify_pair(
        graph_g, graph_h, enum_cap=max(enum_cap, product_cap), product_cap=product_cap
    )
    witness_summary: dict = {"applicable": verdict.witness is not None}
    if verdict.witness is not None:
        witness_summary.update(
            swapped=verdict.witness_swapped,
            big_size=len(verdict.witness.big),
            small_size=len(verdict.witness.small),
        )
    _print_json(
        {
            "g6_g": to_graph6(graph_g),
            "g6_h": to_graph6(graph_h),
            "product": {
                "n": verdict.product_order,
                "m": verdict.product_size,
                **_report_dict(verdict.product_report),
            },
            "g": {
                **_report_dict(verdict.g_report),
                "isolatable": _isolatable_list(verdict.g_isolatable),
            },
            "h": {
                **_report_dict(verdict.h_report),
                "isolatable": _isolatable_list(verdict.h_isolatable),
            },
            "theorem_consistent": verdict.theorem_consistent,
            "witness": witness_summary,
        }
    )
    return EXIT_OK


def _cmd_witness(args: argparse.Namespace) -> int:
    enum_cap = _resolve_cap(args.enum_cap, ENV_ENUM_CAP, DEFAULT_ENUMERATION_CAP)
    product_cap = _resolve_cap(args.product_cap, ENV_PRODUCT_CAP, DEFAULT_WITNESS_CMD_CAP)
    graph_g = from_graph6(args.g6_g)
    graph_h = from_graph6(args.g6_h)

    inputs = witness_inputs(graph_g, graph_h, enum_cap)
    left, right, swapped = graph_g, graph_h, False
    if inputs is None:
        inputs = witness_inputs(graph_h, graph_g, enum_cap)
        left, right, swapped = graph_h, graph_g, True
    if inputs is None:
        _print_json(
            {
                "applicable": False,
                "reason": (
                    "neither orientation pairs an isolatable vertex with a "
                    "non-well-covered co-factor"
                ),
                "g_well_covered": is_well_covered(graph_g, enum_cap).verdict,
                "h_well_covered": is_well_covered(graph_h, enum_cap).verdict,
                "g_isolatable": [w.vertex for w in isolatable_vertices(graph_g, enum_cap)],
                "h_isolatable": [w.vertex for w in isolatable_vertices(graph_h, enum_cap)],
            }
        )
        return EXIT_NOT_APPLICABLE
    witness = build_product_witness(
        left, inputs.iso, right, inputs.column_big, inputs.column_small,
        product_cap=product_cap,
    )
    checks = witness_invariants(left, right, witness)
    _print_json(
        _witness_dict(to_graph6(graph_g), to_graph6(graph_h), swapped, witness, checks)
    )
    return EXIT_OK


def _cmd_scan(args: argparse.Namespace) -> int:
    enum_cap = _resolve_cap(args.enum_cap, ENV_ENUM_CAP, DEFAULT_ENUMERATION_CAP)
    product_cap = _resolve_cap(args.product_cap, ENV_PRODUCT_CAP, DEFAULT_SCAN_PRODUCT_ORDER)
    gen_up_to = args.gen_up_to
    if gen_up_to is None:
        gen_up_to = 0 if args.corpus else 5
    config = ScanConfig(
        max_factor_order=args.max_n,
        max_product_order=product_cap,
        corpus_paths=tuple(args.corpus),
        generate_up_to=gen_up_to,
        parallelism=args.jobs,
        output_format=args.format,
        connected_only=args.connected_only,
        enum_cap=enum_cap,
    )
    result = scan(config)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            _write_scan(result, handle)
    else:
        _write_scan(result, sys.stdout)
    print(
        f"scanned {len(result.records)} pairs, {len(result.violations)} violations",
        file=sys.stderr,
    )
    return EXIT_VIOLATION if result.violations else EXIT_OK


def _write_scan(result: ScanResult, out: TextIO) -> None:
    if result.config.output_format == "csv":
        render_scan_csv(result, out)
    else:
        out.write(render_scan_json(result))


def _cmd_gen(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= GENERATION_CAP:
        print(f"error: order must be between 1 and {GENERATION_CAP}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    for graph in generate_all_graphs(args.n):
        print(to_graph6(graph))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing and dispatch
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wellcovered",
        description=(
            "Decide well-coveredness of graphs and Cartesian products, build "
            "distinct-cardinality witnesses, and scan small-graph corpora."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze one graph (or stdin lines)")
    p_analyze.add_argument("graph", help="graph6 line, or - to read lines from stdin")
    p_analyze.add_argument("--enum-cap", type=int, default=None,
                           help=f"enumeration order cap (default {DEFAULT_ENUMERATION_CAP})")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_product = sub.add_parser("product", help="verify one factor pair")
    p_product.add_argument("g6_g")
    p_product.add_argument("g6_h")
    p_product.add_argument("--enum-cap", type=int, default=None)
    p_product.add_argument("--product-cap", type=int, default=None,
                           help=f"product order cap (default {DEFAULT_PRODUCT_CMD_CAP})")
    p_product.set_defaults(func=_cmd_product)

    p_witness = sub.add_parser(
        "witness", help="construct the distinct-cardinality product witness"
    )
    p_witness.add_argument("g6_g")
    p_witness.add_argument("g6_h")
    p_witness.add_argument("--enum-cap", type=int, default=None)
    p_witness.add_argument("--product-cap", type=int, default=None,
                           help=f"product order cap (default {DEFAULT_WITNESS_CMD_CAP})")
    p_witness.set_defaults(func=_cmd_witness)

    p_scan = sub.add_parser("scan", help="scan all unordered corpus pairs")
    p_scan.add_argument("--max-n", type=int, default=DEFAULT_SCAN_FACTOR_ORDER,
                        help="max factor order (default %(default)s)")
    p_scan.add_argument("--product-cap", type=int, default=None,
                        help=f"max product order (default {DEFAULT_SCAN_PRODUCT_ORDER})")
    p_scan.add_argument("--corpus", action="append", default=[], metavar="FILE",
                        help="graph6 file, one line per graph (repeatable)")
    p_scan.add_argument("--gen-up-to", type=int, default=None,
                        help="generate all graphs up to this order "
                             "(default 5, or 0 when --corpus is given)")
    p_scan.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p_scan.add_argument("--format", choices=("json", "csv"), default="json")
    p_scan.add_argument("--out", default=None, help="write the report to this path")
    p_scan.add_argument("--connected-only", action="store_true",
                        help="keep only connected corpus graphs")
    p_scan.add_argument("--enum-cap", type=int, default=None)
    p_scan.set_defaults(func=_cmd_scan)

    p_gen = sub.add_parser("gen", help="emit canonical graph6 lines for one order")
    p_gen.add_argument("n", type=int)
    p_gen.set_defaults(func=_cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (Graph6Error, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
