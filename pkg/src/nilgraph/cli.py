"""Command-line front end.

Subcommands: build a group from a spec, analyze it into a classification
report, export one of its graphs, sweep a catalog of groups through every
check, and search for the order-54 sharpness witness.  All outputs are
byte-deterministic for a fixed invocation, independent of the worker count.

Exit codes: 0 on success (and zero failed checks), 1 when verification fails,
2 for usage, parse, or construction errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import (
    DEFAULT_CATALOG_CAP,
    Catalog,
    default_catalog,
    load_catalog,
    report_to_json,
    run_catalog,
)
from .checks import CHECKS, classification_report
from .graphs import KIND_COMMUTING, KIND_FULL, KIND_REDUCED, build_graph
from .groups import DEFAULT_ORDER_CAP, GroupError, from_spec
from .witness import (
    WITNESS_ORDER,
    find_order54_witness,
    survey_order54_candidates,
)

ENV_ORDER_CAP = "NILGRAPH_ORDER_CAP"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

_GRAPH_KINDS = {
    "nilpotent": KIND_FULL,
    "reduced": KIND_REDUCED,
    "commuting": KIND_COMMUTING,
}


def _default_order_cap() -> int:
    raw = os.environ.get(ENV_ORDER_CAP)
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise GroupError(f"{ENV_ORDER_CAP} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise GroupError(f"{ENV_ORDER_CAP} must be positive, got {cap}")
    return cap


def _parse_spec_argument(value: str) -> dict:
    text = value
    if not value.lstrip().startswith("{"):
        with open(value, "r", encoding="utf-8") as fh:
            text = fh.read()
    spec = json.loads(text)
    if not isinstance(spec, dict):
        raise GroupError("a group spec must be a JSON object")
    return spec


def _parse_jobs(value: str) -> int:
    if value == "auto":
        return os.cpu_count() or 1
    jobs = int(value)
    if jobs < 1:
        raise argparse.ArgumentTypeError("jobs must be positive")
    return jobs


def _write_output(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilgraph",
        description="Finite-group nilpotent/commuting graph engine and verifier",
    )
    parser.add_argument(
        "--order-cap",
        type=int,
        default=None,
        help=f"maximum group order (default {DEFAULT_ORDER_CAP}, or ${ENV_ORDER_CAP})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct and validate a group")
    p_build.add_argument("--spec", required=True, help="inline JSON or a file path")
    p_build.add_argument("--format", choices=("json", "text"), default="json")
    p_build.add_argument("--output", default=None)

    p_analyze = sub.add_parser("analyze", help="full classification report for one group")
    p_analyze.add_argument("--spec", required=True, help="inline JSON or a file path")
    p_analyze.add_argument("--format", choices=("json", "text"), default="json")
    p_analyze.add_argument("--output", default=None)

    p_graph = sub.add_parser("graph", help="export one graph of a group")
    p_graph.add_argument("--spec", required=True, help="inline JSON or a file path")
    p_graph.add_argument("--kind", choices=sorted(_GRAPH_KINDS), required=True)
    p_graph.add_argument("--format", choices=("dot", "json"), default="dot")
    p_graph.add_argument("--output", default=None)

    p_verify = sub.add_parser("verify", help="sweep a catalog through every check")
    p_verify.add_argument("--catalog", default=None, help="JSON catalog file (default: built-in)")
    p_verify.add_argument("--check", default=None, help="comma-separated check names to run")
    p_verify.add_argument("--jobs", type=_parse_jobs, default=1, help="worker count or 'auto'")
    p_verify.add_argument("--format", choices=("json", "text"), default="json")
    p_verify.add_argument("--output", default=None)
    p_verify.add_argument(
        "--figures",
        default=None,
        metavar="DIR",
        help="also write CSV summaries and PNG charts into DIR",
    )

    p_witness = sub.add_parser(
        "witness54", help="search for the order-54 diameter-3 witness"
    )
    p_witness.add_argument("--list-candidates", action="store_true")
    p_witness.add_argument("--format", choices=("json", "text"), default="json")
    p_witness.add_argument("--output", default=None)
    return parser


def _cmd_build(args, order_cap: int) -> int:
    spec = _parse_spec_argument(args.spec)
    group = from_spec(spec, order_cap)
    doc = {
        "label": group.label,
        "order": group.order,
        "abelian": group.is_abelian,
        "element_order_multiset": sorted(int(o) for o in group.element_order),
        "generators": list(group.generators),
    }
    if args.format == "json":
        _write_output(_json_dumps(doc), args.output)
    else:
        lines = [
            f"label: {doc['label']}",
            f"order: {doc['order']}",
            f"abelian: {doc['abelian']}",
            f"generators: {doc['generators']}",
            f"element orders: {doc['element_order_multiset']}",
        ]
        _write_output("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _report_text(report: dict) -> str:
    lines = [
        f"group: {report['label']} (order {report['order']})",
        f"center {report['center_order']}, hypercenter {report['hypercenter_order']}, "
        f"fitting {report['fitting_order']}, primes {report['primes']}",
        "flags: " + ", ".join(k for k, v in report["flags"].items() if v),
    ]
    for kind, stats in report["graph_stats"].items():
        lines.append(
            f"{kind}: {stats['vertex_count']} vertices, "
            f"{stats['component_count']} components, diameters {stats['diameter_multiset']}"
        )
    for name, outcome in report["theorem_outcomes"].items():
        extra = f" ({outcome['reason']})" if "reason" in outcome else ""
        lines.append(f"check {name}: {outcome['status']}{extra}")
    return "\n".join(lines) + "\n"


def _cmd_analyze(args, order_cap: int) -> int:
    spec = _parse_spec_argument(args.spec)
    report = classification_report(spec, order_cap=order_cap)
    if args.format == "json":
        _write_output(_json_dumps(report), args.output)
    else:
        _write_output(_report_text(report), args.output)
    return EXIT_OK


def _cmd_graph(args, order_cap: int) -> int:
    spec = _parse_spec_argument(args.spec)
    group = from_spec(spec, order_cap)
    graph = build_graph(group, _GRAPH_KINDS[args.kind])
    _write_output(graph.export(args.format), args.output)
    return EXIT_OK


def _summary_text(report: dict) -> str:
    summary = report["summary"]
    lines = [
        f"catalog entries: {summary['entries']}",
        f"construction errors: {len(summary['construction_errors'])}",
        f"failures: {summary['failures_total']}",
        f"max reduced diameter: {summary['max_reduced_diameter']}",
    ]
    for name, counts in summary["per_check"].items():
        lines.append(
            f"{name:<28} pass={counts['pass']:<5} fail={counts['fail']:<4} "
            f"n/a={counts['not_applicable']}"
        )
    for err in summary["construction_errors"]:
        lines.append(f"error [{err['label']}]: {err['error']}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args, order_cap: int) -> int:
    if args.catalog is None:
        cat = default_catalog(min(DEFAULT_CATALOG_CAP, order_cap))
    else:
        cat = load_catalog(args.catalog, cap=order_cap)
    checks = None
    if args.check is not None:
        checks = tuple(name.strip() for name in args.check.split(",") if name.strip())
        unknown = [n for n in checks if n not in CHECKS]
        if unknown:
            raise GroupError(
                f"unknown check names: {', '.join(unknown)}; "
                f"available: {', '.join(CHECKS)}"
            )
    report = run_catalog(cat, jobs=args.jobs, check_names=checks, order_cap=order_cap)
    if args.format == "json":
        _write_output(report_to_json(report), args.output)
    else:
        _write_output(_summary_text(report), args.output)
    if args.figures is not None:
        from .figures import write_report_files

        write_report_files(report, args.figures)
    failed = report["summary"]["failures_total"]
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _cmd_witness54(args, order_cap: int) -> int:
    if order_cap < WITNESS_ORDER:
        raise GroupError(
            f"order cap {order_cap} is below the witness order {WITNESS_ORDER}"
        )
    if args.list_candidates:
        survey = [c.to_json() for c in survey_order54_candidates()]
        if args.format == "json":
            _write_output(_json_dumps({"candidates": survey}), args.output)
        else:
            lines = [
                f"{c['label']:<24} fitting={c['fitting_order']:<3} "
                f"connected={c['connected']} diameter={c['diameter']}"
                for c in survey
            ]
            _write_output("\n".join(lines) + "\n", args.output)
        return EXIT_OK
    try:
        result = find_order54_witness()
    except GroupError as exc:
        sys.stderr.write(f"witness search failed: {exc}\n")
        return EXIT_VERIFY_FAILED
    report = classification_report(result.spec, order_cap=order_cap)
    doc = {"witness": result.to_json(), "report": report}
    if args.format == "json":
        _write_output(_json_dumps(doc), args.output)
    else:
        head = (
            f"witness: {result.label} (fitting {result.fitting_order}, "
            f"connected={result.connected}, diameter={result.diameter})\n"
        )
        _write_output(head + _report_text(report), args.output)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        order_cap = args.order_cap if args.order_cap is not None else _default_order_cap()
        if order_cap < 1:
            raise GroupError(f"order cap must be positive, got {order_cap}")
        if args.command == "build":
            return _cmd_build(args, order_cap)
        if args.command == "analyze":
            return _cmd_analyze(args, order_cap)
        if args.command == "graph":
            return _cmd_graph(args, order_cap)
        if args.command == "verify":
            return _cmd_verify(args, order_cap)
        return _cmd_witness54(args, order_cap)
    except (GroupError, json.JSONDecodeError, OSError) as exc:
        sys.stderr.write(f"nilgraph: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
