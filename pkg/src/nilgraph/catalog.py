"""Catalog assembly and the sweep harness.

The default catalog holds every builder-reachable group of order at most 100:
cyclic, dihedral, and dicyclic families, the small symmetric and alternating
groups, split cyclic extensions (deduplicated under the automorphisms of the
acting factor), direct products over a seed family, the order-54 extension
family, and the order-24 matrix group generated by the standard two elements
over the field with three residues.

`run_catalog` analyzes every entry, aggregates per-check outcome counts, and
returns a JSON-ready report; entries fail soft (a construction error is
recorded and the sweep continues).  Entries can be processed in parallel, and
the report is byte-identical regardless of the worker count.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .checks import CHECKS, classification_report
from .groups import DEFAULT_ORDER_CAP, GroupError
from .witness import order54_catalog_specs

REPORT_SCHEMA = "nilgraph-report/1"
DEFAULT_CATALOG_CAP = 100

# Matrices [[0,-1],[1,0]] and [[1,1],[0,1]] acting on the 8 nonzero vectors
# over the 3-element field, indexed by 3x + y - 1 for the vector (x, y).
def _special_linear_2_3_spec() -> dict:
    def vec_index(x: int, y: int) -> int:
        return 3 * x + y - 1

    perms = []
    for mat in ([[0, 2], [1, 0]], [[1, 1], [0, 1]]):
        img = [0] * 8
        for x in range(3):
            for y in range(3):
                if x == y == 0:
                    continue
                nx = (mat[0][0] * x + mat[0][1] * y) % 3
                ny = (mat[1][0] * x + mat[1][1] * y) % 3
                img[vec_index(x, y)] = vec_index(nx, ny)
        perms.append(img)
    return {
        "constructor": "from_permutations",
        "params": {"degree": 8, "generators": perms},
        "label": "SL23",
    }


def _cyclic(n: int) -> dict:
    return {"constructor": "cyclic", "params": {"n": n}, "label": f"C{n}"}


def _dihedral(n: int) -> dict:
    return {"constructor": "dihedral", "params": {"n": n}, "label": f"D{2 * n}"}


def _dicyclic(order: int) -> dict:
    label = "Q8" if order == 8 else f"Dic{order}"
    return {"constructor": "quaternion", "params": {"order": order}, "label": label}


def _product(a: dict, b: dict) -> dict:
    return {
        "constructor": "direct_product",
        "params": {"factors": [a, b]},
        "label": f"{a['label']} x {b['label']}",
    }


def _spec_order(spec: dict) -> int:
    ctor = spec["constructor"]
    p = spec["params"]
    if ctor == "cyclic":
        return p["n"]
    if ctor == "dihedral":
        return 2 * p["n"]
    if ctor == "quaternion":
        return p["order"]
    if ctor == "symmetric":
        return math.factorial(p["degree"])
    if ctor == "alternating":
        return math.factorial(p["degree"]) // 2
    if ctor == "semidirect_cyclic":
        return p["n"] * p["m"]
    if ctor == "direct_product":
        out = 1
        for f in p["factors"]:
            out *= _spec_order(f)
        return out
    if ctor == "semidirect_table":
        return _spec_order(p["normal"]) * _spec_order(p["acting"])
    raise GroupError(f"cannot size a spec with constructor {ctor!r}")


def _semidirect_specs(cap: int) -> list[dict]:
    """Split cyclic extensions with nontrivial, non-dihedral action.

    For fixed (n, m) the exponents e and e^j (j invertible mod m) give
    isomorphic extensions, so only the least exponent of each orbit is kept.
    """
    out = []
    for n in range(3, cap // 2 + 1):
        for m in range(2, cap // n + 1):
            for e in range(2, n - 1 if m == 2 else n):
                if math.gcd(e, n) != 1 or pow(e, m, n) != 1:
                    continue
                orbit = {pow(e, j, n) for j in range(1, m) if math.gcd(j, m) == 1}
                if e != min(orbit):
                    continue
                out.append(
                    {
                        "constructor": "semidirect_cyclic",
                        "params": {"n": n, "m": m, "e": e},
                        "label": f"C{n}:C{m}(e={e})",
                    }
                )
    return out


def _product_specs(cap: int) -> list[dict]:
    seeds = [_cyclic(n) for n in range(2, 11)]
    seeds += [_dihedral(n) for n in (3, 4, 5, 6)]
    seeds += [_dicyclic(8), _dicyclic(12)]
    seeds += [
        {"constructor": "alternating", "params": {"degree": 4}, "label": "A4"},
        {"constructor": "symmetric", "params": {"degree": 4}, "label": "S4"},
    ]
    out = []
    for i in range(len(seeds)):
        for j in range(i, len(seeds)):
            spec = _product(seeds[i], seeds[j])
            if _spec_order(spec) <= cap:
                out.append(spec)
    return out


@dataclass(frozen=True)
class Catalog:
    """A list of group specs bounded by a common order cap."""

    entries: tuple[dict, ...]
    cap: int = DEFAULT_CATALOG_CAP

    def __post_init__(self):
        for spec in self.entries:
            if not isinstance(spec, dict) or "constructor" not in spec:
                raise GroupError(f"catalog entry is not a group spec: {spec!r}")


def default_catalog(cap: int = DEFAULT_CATALOG_CAP) -> Catalog:
    entries: list[dict] = []
    entries += [_cyclic(n) for n in range(1, cap + 1)]
    entries += [_dihedral(n) for n in range(2, cap // 2 + 1)]
    entries += [_dicyclic(o) for o in range(8, cap + 1, 4)]
    for degree in (3, 4, 5):
        if math.factorial(degree) <= cap:
            entries.append(
                {"constructor": "symmetric", "params": {"degree": degree}, "label": f"S{degree}"}
            )
        if math.factorial(degree) // 2 <= cap:
            entries.append(
                {"constructor": "alternating", "params": {"degree": degree}, "label": f"A{degree}"}
            )
    entries += _semidirect_specs(cap)
    entries += _product_specs(cap)
    if cap >= 54:
        entries += order54_catalog_specs()
    if cap >= 24:
        entries.append(_special_linear_2_3_spec())
    return Catalog(entries=tuple(entries), cap=cap)


def load_catalog(path: str, cap: int = DEFAULT_CATALOG_CAP) -> Catalog:
    """Catalog from a JSON file holding a list of group specs."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise GroupError("catalog file must contain a JSON list of group specs")
    return Catalog(entries=tuple(data), cap=cap)


def _analyze_entry(args: tuple[dict, int, tuple[str, ...] | None]) -> dict:
    spec, order_cap, names = args
    try:
        return classification_report(spec, order_cap=order_cap, check_names=names)
    except GroupError as exc:
        return {"spec": spec, "label": spec.get("label"), "error": str(exc)}


def run_catalog(
    catalog: Catalog,
    jobs: int = 1,
    check_names: tuple[str, ...] | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> dict:
    """Analyze every catalog entry and aggregate a report.

    Entries run independently (in processes when jobs > 1) and are collected
    in catalog order, so the report does not depend on the worker count.
    """
    if check_names is not None:
        unknown = [n for n in check_names if n not in CHECKS]
        if unknown:
            raise GroupError(f"unknown check names: {', '.join(unknown)}")
    args = [(spec, order_cap, check_names) for spec in catalog.entries]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_analyze_entry, args, chunksize=8))
    else:
        entries = [_analyze_entry(a) for a in args]
    return {
        "schema": REPORT_SCHEMA,
        "catalog_size": len(entries),
        "order_cap": order_cap,
        "checks": list(CHECKS) if check_names is None else list(check_names),
        "entries": entries,
        "summary": summarize(entries),
    }


def summarize(entries: list[dict]) -> dict:
    """Outcome counts per check, plus error and diameter aggregates."""
    per_check: dict[str, dict[str, int]] = {}
    errors = []
    failures = 0
    max_diam = None
    for entry in entries:
        if "error" in entry:
            errors.append({"label": entry.get("label"), "error": entry["error"]})
            continue
        for name, outcome in entry["theorem_outcomes"].items():
            bucket = per_check.setdefault(
                name, {"pass": 0, "fail": 0, "not_applicable": 0}
            )
            bucket[outcome["status"]] += 1
            if outcome["status"] == "fail":
                failures += 1
        diams = entry["graph_stats"]["nilpotent_reduced"]["diameter_multiset"]
        if diams:
            top = max(diams)
            max_diam = top if max_diam is None else max(max_diam, top)
    return {
        "entries": len(entries),
        "construction_errors": errors,
        "per_check": per_check,
        "failures_total": failures,
        "max_reduced_diameter": max_diam,
    }


def report_to_json(report: dict) -> str:
    """Canonical serialization used by the CLI and the determinism tests."""
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
