"""Search for the order-54 sharpness witness.

The target is a group of order 54 whose Fitting subgroup has order 27 and
whose reduced nilpotent graph is connected with diameter exactly 3.  The
search ranges over split extensions (order-27 group) : C2, pairing each of the
five order-27 groups with every involutive automorphism; actions without
fixed points produce Frobenius groups, whose graphs disconnect, so they are
examined and rejected by the same analysis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .checks import GroupAnalysis
from .groups import (
    ConcreteGroup,
    GroupError,
    build_cyclic,
    build_semidirect_cyclic,
    build_semidirect_table,
    direct_product,
    minimal_generating_sequence,
)
from .structure import fitting

WITNESS_ORDER = 54
WITNESS_FITTING_ORDER = 27
WITNESS_DIAMETER = 3


def heisenberg27() -> ConcreteGroup:
    """The nonabelian order-27 group of exponent 3."""
    c3 = build_cyclic(3)
    base = direct_product(c3, c3)
    perms = []
    for j in range(3):
        perms.append([a * 3 + ((j * a + b) % 3) for a in range(3) for b in range(3)])
    g = build_semidirect_table(base, c3, perms, label="Heis3")
    return g


def order27_groups() -> list[ConcreteGroup]:
    """The five groups of order 27, nonabelian ones first."""
    c3 = build_cyclic(3)
    return [
        heisenberg27(),
        build_semidirect_cyclic(9, 3, 4),
        build_cyclic(27),
        direct_product(build_cyclic(9), c3),
        direct_product(direct_product(c3, c3), c3),
    ]


def _generator_derivations(group: ConcreteGroup) -> tuple[list[int], list[tuple[int, int, int]]]:
    """Generators plus (element, parent, generator-slot) derivations.

    Elements are listed in breadth-first discovery order, each expressed as a
    previously discovered element times one generator, so any map defined on
    the generators extends deterministically.
    """
    gens = minimal_generating_sequence(group)
    t = group.table
    seen = np.zeros(group.order, dtype=bool)
    seen[0] = True
    queue = [0]
    derivations: list[tuple[int, int, int]] = []
    head = 0
    while head < len(queue):
        cur = queue[head]
        head += 1
        for slot, g in enumerate(gens):
            nxt = int(t[cur, g])
            if not seen[nxt]:
                seen[nxt] = True
                derivations.append((nxt, cur, slot))
                queue.append(nxt)
    if len(queue) != group.order:
        raise GroupError("internal error: generators do not generate")
    return gens, derivations


def automorphisms_of_order_dividing(group: ConcreteGroup, k: int) -> list[np.ndarray]:
    """All automorphisms whose k-th power is the identity.

    Candidate generator images are filtered by element order, extended through
    the derivation table, and validated as bijective homomorphisms.  Results
    are in a deterministic order (lexicographic in the image arrays).
    """
    from itertools import product as iter_product

    gens, derivations = _generator_derivations(group)
    t = group.table
    n = group.order
    orders = group.element_order
    idx = np.arange(n, dtype=np.int32)
    pools = [np.nonzero(orders == orders[g])[0].tolist() for g in gens]
    found: list[np.ndarray] = []
    for images in iter_product(*pools):
        phi = np.empty(n, dtype=np.int32)
        phi[0] = 0
        for g, img in zip(gens, images):
            phi[g] = img
        for elem, parent, slot in derivations:
            phi[elem] = t[phi[parent], images[slot]]
        if not np.array_equal(np.sort(phi), idx):
            continue
        if not np.array_equal(phi[t], t[np.ix_(phi, phi)]):
            continue
        power = phi
        for _ in range(k - 1):
            power = phi[power]
        if not np.array_equal(power, idx):
            continue
        found.append(phi)
    found.sort(key=lambda p: tuple(int(v) for v in p))
    return found


@dataclass(frozen=True)
class CandidateResult:
    spec: dict
    label: str
    fitting_order: int
    connected: bool
    diameter: int | None

    def is_witness(self) -> bool:
        return (
            self.fitting_order == WITNESS_FITTING_ORDER
            and self.connected
            and self.diameter == WITNESS_DIAMETER
        )

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "label": self.label,
            "fitting_order": self.fitting_order,
            "connected": self.connected,
            "diameter": self.diameter,
        }


def _examine(group: ConcreteGroup) -> CandidateResult:
    a = GroupAnalysis(group)
    graph = a.reduced_graph
    connected = len(graph.components) == 1
    return CandidateResult(
        spec=group.spec,
        label=group.label,
        fitting_order=fitting(group).size,
        connected=connected,
        diameter=a.max_diameter,
    )


def iter_order54_groups():
    """Yield the candidate extensions in deterministic order.

    The trivial action only reproduces direct products with C2, which are
    nilpotent-by-construction failures, so it is skipped.
    """
    c2 = build_cyclic(2)
    for base in order27_groups():
        identity = np.arange(base.order, dtype=np.int32)
        for phi in automorphisms_of_order_dividing(base, 2):
            if np.array_equal(phi, identity):
                continue
            yield build_semidirect_table(
                base, c2, [identity.tolist(), phi.tolist()], label=f"{base.label}:C2"
            )


def iter_order54_candidates():
    """Yield (group, examination result) pairs, analyzing lazily."""
    for g in iter_order54_groups():
        yield g, _examine(g)


def find_order54_witness() -> CandidateResult:
    """First candidate with Fitting order 27 and a connected diameter-3 graph.

    Exhausting the search without a witness raises, since the witness is known
    to exist among these extensions.
    """
    for _, result in iter_order54_candidates():
        if result.is_witness():
            return result
    raise GroupError("order-54 witness search exhausted without a match")


def survey_order54_candidates() -> list[CandidateResult]:
    """Examine every candidate; used by the candidate-listing mode."""
    return [result for _, result in iter_order54_candidates()]


def order54_catalog_specs() -> list[dict]:
    """Deduplicated candidate specs for the default catalog.

    Candidates with the same base group, element-order multiset, center order,
    and Fitting order are redundant for sweep coverage; one representative per
    signature is kept, in deterministic order.  Only cheap invariants are
    computed here; the sweep does the full analysis.
    """
    out = []
    seen = set()
    counts: dict[str, int] = {}
    for g in iter_order54_groups():
        signature = (
            g.spec["params"]["normal"].get("label", ""),
            tuple(sorted(int(o) for o in g.element_order)),
            int(np.count_nonzero(g.commutes_table().all(axis=1))),
            fitting(g).size,
        )
        if signature in seen:
            continue
        seen.add(signature)
        spec = dict(g.spec)
        counts[g.label] = counts.get(g.label, 0) + 1
        if counts[g.label] > 1:
            spec["label"] = f"{g.label}#{counts[g.label]}"
        out.append(spec)
    return out
