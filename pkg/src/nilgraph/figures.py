"""Figure and CSV rendering for sweep reports.

The JSON report stays the source of truth; this module derives a delimited
summary (per-check outcome counts and one row per catalog entry) and renders
companion matplotlib figures next to it.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_PASS_COLOR = "#2a9d8f"
_FAIL_COLOR = "#e76f51"
_NA_COLOR = "#c8c8c8"


def write_report_files(report: dict, outdir: str | Path) -> list[Path]:
    """Write summary.csv, entries.csv, and PNG charts; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = [
        _write_summary_csv(report, outdir / "summary.csv"),
        _write_entries_csv(report, outdir / "entries.csv"),
        _plot_check_outcomes(report, outdir / "check_outcomes.png"),
        _plot_diameter_histogram(report, outdir / "diameter_histogram.png"),
        _plot_order_vs_diameter(report, outdir / "order_vs_diameter.png"),
    ]
    return written


def _write_summary_csv(report: dict, path: Path) -> Path:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "pass", "fail", "not_applicable"])
        for name, counts in report["summary"]["per_check"].items():
            writer.writerow([name, counts["pass"], counts["fail"], counts["not_applicable"]])
    return path


def _write_entries_csv(report: dict, path: Path) -> Path:
    cols = [
        "label",
        "order",
        "center_order",
        "hypercenter_order",
        "fitting_order",
        "nilpotent",
        "solvable",
        "a_group",
        "ac_group",
        "n_group",
        "frobenius",
        "two_frobenius",
        "reduced_components",
        "reduced_max_diameter",
        "error",
    ]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(cols)
        for entry in report["entries"]:
            if "error" in entry:
                writer.writerow([entry.get("label"), *[""] * 13, entry["error"]])
                continue
            stats = entry["graph_stats"]["nilpotent_reduced"]
            diams = stats["diameter_multiset"]
            writer.writerow(
                [
                    entry["label"],
                    entry["order"],
                    entry["center_order"],
                    entry["hypercenter_order"],
                    entry["fitting_order"],
                    *[entry["flags"][k] for k in (
                        "nilpotent", "solvable", "a_group", "ac_group",
                        "n_group", "frobenius", "two_frobenius",
                    )],
                    stats["component_count"],
                    max(diams) if diams else "",
                    "",
                ]
            )
    return path


def _plot_check_outcomes(report: dict, path: Path) -> Path:
    per_check = report["summary"]["per_check"]
    names = list(per_check)
    passes = [per_check[n]["pass"] for n in names]
    fails = [per_check[n]["fail"] for n in names]
    nas = [per_check[n]["not_applicable"] for n in names]
    fig, ax = plt.subplots(figsize=(10, 0.35 * max(len(names), 4) + 1.5))
    y = range(len(names))
    ax.barh(y, passes, color=_PASS_COLOR, label="pass")
    ax.barh(y, fails, left=passes, color=_FAIL_COLOR, label="fail")
    ax.barh(y, nas, left=[p + f for p, f in zip(passes, fails)], color=_NA_COLOR,
            label="not applicable")
    ax.set_yticks(list(y))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("catalog entries")
    ax.set_title("Check outcomes across the catalog")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _reduced_diameters(report: dict) -> list[tuple[int, int, bool]]:
    out = []
    for entry in report["entries"]:
        if "error" in entry:
            continue
        stats = entry["graph_stats"]["nilpotent_reduced"]
        diams = stats["diameter_multiset"]
        if diams:
            out.append((entry["order"], max(diams), stats["component_count"] == 1))
    return out


def _plot_diameter_histogram(report: dict, path: Path) -> Path:
    data = _reduced_diameters(report)
    fig, ax = plt.subplots(figsize=(7, 4))
    if data:
        top = max(d for _, d, _ in data)
        bins = range(top + 2)
        conn = [d for _, d, c in data if c]
        disc = [d for _, d, c in data if not c]
        ax.hist(
            [conn, disc],
            bins=bins,
            stacked=True,
            color=[_PASS_COLOR, "#e9c46a"],
            label=["connected", "disconnected (largest component)"],
            align="left",
        )
        ax.legend(fontsize=8)
    ax.set_xlabel("largest component diameter of the reduced graph")
    ax.set_ylabel("groups")
    ax.set_title("Diameter distribution")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _plot_order_vs_diameter(report: dict, path: Path) -> Path:
    data = _reduced_diameters(report)
    fig, ax = plt.subplots(figsize=(7, 4))
    if data:
        xs = [o for o, _, _ in data]
        ys = [d for _, d, _ in data]
        cs = [_PASS_COLOR if c else "#e9c46a" for _, _, c in data]
        ax.scatter(xs, ys, c=cs, s=18, alpha=0.7, edgecolors="none")
    ax.set_xlabel("group order")
    ax.set_ylabel("largest component diameter")
    ax.set_title("Order against reduced-graph diameter")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
