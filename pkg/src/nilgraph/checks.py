"""Per-statement verification checks and single-group classification reports.

Each check evaluates one proven statement about the reduced nilpotent graph or
its supporting structure theory on a concrete group, reporting pass, fail
(with a witness), or not_applicable (with the violated hypothesis).  A fail on
a constructible group is a bug somewhere in the engine, never an expected
outcome, so the catalog sweep treats any fail as a blocker.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product as iter_product

import numpy as np

from . import classify
from .graphs import (
    KIND_COMMUTING,
    KIND_FULL,
    KIND_REDUCED,
    GroupGraph,
    build_graph,
    graphs_equal,
    nilpotent_pair_matrix,
    universal_vertices,
)
from .groups import (
    DEFAULT_ORDER_CAP,
    ConcreteGroup,
    GroupError,
    SubgroupSet,
    closure_elements,
    from_spec,
    minimal_generating_sequence,
    quotient,
)
from .structure import (
    center,
    factorize,
    fitting,
    fitting_from_prime_power_closures,
    hypercenter,
    is_abelian_subset,
    is_nilpotent,
    is_prime,
    is_solvable,
    normal_subgroups,
    pi,
    primary_decomposition,
    whole_group,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"

_FROBENIUS_BRUTE_CAP = 60


@dataclass(frozen=True)
class CheckOutcome:
    status: str
    reason: str | None = None
    witness: dict | None = None

    def to_json(self) -> dict:
        doc: dict = {"status": self.status}
        if self.reason is not None:
            doc["reason"] = self.reason
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


def _ok() -> CheckOutcome:
    return CheckOutcome(PASS)


def _na(reason: str) -> CheckOutcome:
    return CheckOutcome(NOT_APPLICABLE, reason=reason)


def _bad(witness: dict, reason: str | None = None) -> CheckOutcome:
    return CheckOutcome(FAIL, reason=reason, witness=witness)


class GroupAnalysis:
    """Lazily computed structural summary of one group.

    Shares one pair-nilpotency matrix between all graphs and checks; the
    hypercenter quotient is analyzed once and reused, and a group with trivial
    hypercenter is its own quotient analysis.
    """

    def __init__(self, group: ConcreteGroup):
        self.group = group

    @cached_property
    def center(self) -> SubgroupSet:
        return center(self.group)

    @cached_property
    def hypercenter(self) -> SubgroupSet:
        return hypercenter(self.group)

    @cached_property
    def fitting(self) -> SubgroupSet:
        return fitting(self.group)

    @cached_property
    def nilpotent(self) -> bool:
        return is_nilpotent(whole_group(self.group))

    @cached_property
    def solvable(self) -> bool:
        return is_solvable(whole_group(self.group))

    @cached_property
    def full_graph(self) -> GroupGraph:
        return build_graph(self.group, KIND_FULL)

    @cached_property
    def reduced_graph(self) -> GroupGraph:
        return build_graph(self.group, KIND_REDUCED)

    @cached_property
    def commuting_graph(self) -> GroupGraph:
        return build_graph(self.group, KIND_COMMUTING)

    @cached_property
    def quotient_pair(self) -> tuple[ConcreteGroup, np.ndarray]:
        if self.hypercenter.size == 1:
            return self.group, np.arange(self.group.order, dtype=np.int32)
        return quotient(self.group, self.hypercenter)

    @property
    def projection(self) -> np.ndarray:
        return self.quotient_pair[1]

    @cached_property
    def quotient_analysis(self) -> "GroupAnalysis":
        q, _ = self.quotient_pair
        if q is self.group:
            return self
        return GroupAnalysis(q)

    @cached_property
    def frobenius(self) -> classify.FrobeniusWitness | None:
        return classify.is_frobenius(self.group)

    @cached_property
    def two_frobenius(self) -> classify.TwoFrobeniusWitness | None:
        return classify.is_2frobenius(self.group)

    @cached_property
    def a_group(self) -> bool:
        return classify.is_A_group(self.group)

    @cached_property
    def ac_group(self) -> bool:
        return classify.is_AC_group(self.group)

    @cached_property
    def n_group(self) -> bool:
        return classify.is_n_group(self.group)

    @cached_property
    def nil_property(self) -> bool:
        return classify.has_nilpotent_neighborhood_property(self.group)

    @cached_property
    def connected(self) -> bool:
        return len(self.reduced_graph.components) == 1

    @cached_property
    def max_diameter(self) -> int | None:
        return max(self.reduced_graph.diameters, default=None)

    @cached_property
    def cyclic_by_abelian(self) -> tuple[SubgroupSet, SubgroupSet] | None:
        return _cyclic_by_abelian_factorization(self.group)


def _cyclic_by_abelian_factorization(
    group: ConcreteGroup,
) -> tuple[SubgroupSet, SubgroupSet] | None:
    """A factorization G = N A with N normal cyclic, A abelian, N meet A = 1.

    Searches normal cyclic subgroups (largest first) and, for each, lifts a
    generating set of the abelian quotient back into the group; a complement,
    if one exists, is generated by some choice of coset lifts, so the search
    is exhaustive.
    """
    n = group.order
    orders = group.element_order
    for nsub in sorted(normal_subgroups(group), key=lambda s: -s.size):
        if nsub.size == n or nsub.size == 1:
            continue
        if int(orders[nsub.elements].max()) != nsub.size:
            continue  # not cyclic
        q, proj = quotient(group, nsub)
        if not q.is_abelian:
            continue
        m = q.order
        lift_pools = []
        for qgen in minimal_generating_sequence(q):
            lift_pools.append(np.nonzero(proj == qgen)[0].tolist())
        for combo in iter_product(*lift_pools):
            cl = closure_elements(group, combo, cap=m)
            if cl is None or cl.size != m:
                continue
            if int(nsub.membership[cl].sum()) != 1:
                continue
            if not is_abelian_subset(group, cl):
                continue
            return nsub, SubgroupSet(group, cl, validate=False)
    return None


# -- cross-checks of independently computed invariants ------------------------


def check_universal_vertices(a: GroupAnalysis) -> CheckOutcome:
    """Universal vertices of the full nilpotent graph equal the hypercenter."""
    uni = universal_vertices(a.full_graph)
    hyp = a.hypercenter.elements
    if np.array_equal(uni, hyp):
        return _ok()
    return _bad(
        {"universal_vertices": uni.tolist(), "hypercenter": hyp.tolist()},
        "universal vertex set differs from the hypercenter",
    )


def check_fitting_cross(a: GroupAnalysis) -> CheckOutcome:
    """Sylow-intersection Fitting equals the prime-power normal-closure route."""
    alt = fitting_from_prime_power_closures(a.group)
    if np.array_equal(a.fitting.elements, alt.elements):
        return _ok()
    return _bad(
        {"sylow_route": a.fitting.elements.tolist(), "closure_route": alt.elements.tolist()},
        "the two Fitting subgroup computations disagree",
    )


def check_frobenius_cross(a: GroupAnalysis) -> CheckOutcome:
    """Kernel-criterion recognition agrees with the malnormal brute force."""
    if a.group.order > _FROBENIUS_BRUTE_CAP:
        return _na(f"order above the brute-force bound {_FROBENIUS_BRUTE_CAP}")
    brute = classify.has_malnormal_subgroup(a.group)
    fast = a.frobenius is not None
    if brute == fast:
        return _ok()
    return _bad(
        {"kernel_criterion": fast, "malnormal_bruteforce": brute},
        "Frobenius recognition routes disagree",
    )


# -- neighborhood structure ---------------------------------------------------


def check_neighborhood_intersection(a: GroupAnalysis) -> CheckOutcome:
    """Nil(x) is the intersection of the neighborhoods of its prime components."""
    g = a.group
    m = nilpotent_pair_matrix(g)
    for x in range(1, g.order):
        comps = primary_decomposition(g, x)
        if len(comps) <= 1:
            continue
        expected = np.ones(g.order, dtype=bool)
        for xp in comps.values():
            expected &= m[xp]
        if not np.array_equal(m[x], expected):
            return _bad(
                {"element": x, "components": {p: int(e) for p, e in comps.items()}},
                "neighborhood differs from the component intersection",
            )
    return _ok()


def check_prime_power_reduction(a: GroupAnalysis) -> CheckOutcome:
    """Neighborhood closure on prime-power elements decides it everywhere."""
    reduced = a.n_group
    unreduced = classify.is_n_group_unreduced(a.group)
    if reduced == unreduced:
        return _ok()
    return _bad(
        {"prime_power_only": reduced, "all_elements": unreduced},
        "prime-power reduction disagrees with the unreduced evaluation",
    )


def check_a_group_centralizers(a: GroupAnalysis) -> CheckOutcome:
    """All Sylow subgroups abelian iff Nil(x) = C(x) for prime-power x."""
    g = a.group
    m = nilpotent_pair_matrix(g)
    commutes = g.commutes_table()
    neighborhoods_are_centralizers = all(
        np.array_equal(m[rep], commutes[rep]) for rep in classify._prime_power_reps(g)
    )
    if neighborhoods_are_centralizers == a.a_group:
        return _ok()
    return _bad(
        {
            "a_group": a.a_group,
            "neighborhoods_equal_centralizers": neighborhoods_are_centralizers,
        },
        "abelian-Sylow status disagrees with the centralizer criterion",
    )


def check_product_closure(a: GroupAnalysis) -> CheckOutcome:
    """Direct products of neighborhood-closed groups stay neighborhood-closed."""
    spec = a.group.spec
    if not spec or spec.get("constructor") != "direct_product":
        return _na("not built as a direct product")
    factors = [from_spec(f) for f in spec["params"]["factors"]]
    if not all(classify.is_n_group(f) for f in factors):
        return _na("a factor is not neighborhood-closed")
    if a.n_group:
        return _ok()
    return _bad(
        {"factor_orders": [f.order for f in factors]},
        "product of neighborhood-closed factors lost closure",
    )


def check_frobenius_inheritance(a: GroupAnalysis) -> CheckOutcome:
    """A Frobenius group inherits neighborhood closure from its complement."""
    w = a.frobenius
    if w is None:
        return _na("not a Frobenius group")
    comp_group, _ = w.complement.as_group()
    if not classify.is_n_group(comp_group):
        return _na("complement is not neighborhood-closed")
    if a.n_group:
        return _ok()
    return _bad(
        {"kernel_order": w.kernel.size, "complement_order": w.complement.size},
        "Frobenius group with neighborhood-closed complement lost closure",
    )


def check_nilpotent_neighborhoods(a: GroupAnalysis) -> CheckOutcome:
    """Every Nil(x) is a nilpotent subgroup iff the group is Frobenius with
    nilpotent complement (solvable, centerless groups)."""
    if a.group.order == 1:
        return _na("trivial group")
    if not a.solvable:
        return _na("not solvable")
    if a.center.size > 1:
        return _na("center nontrivial")
    lhs = a.nil_property
    w = a.frobenius
    rhs = w is not None and is_nilpotent(w.complement)
    if lhs == rhs:
        return _ok()
    return _bad(
        {
            "all_neighborhoods_nilpotent_subgroups": lhs,
            "frobenius_with_nilpotent_complement": rhs,
        },
        "neighborhood property disagrees with the Frobenius characterization",
    )


# -- quotient correspondence --------------------------------------------------


def check_quotient_adjacency(a: GroupAnalysis) -> CheckOutcome:
    """Adjacency outside the hypercenter matches adjacency of distinct cosets."""
    if a.nilpotent:
        return _na("nilpotent: the reduced graph has no vertices")
    g = a.group
    verts = a.reduced_graph.vertices
    proj = a.projection
    qa = a.quotient_analysis
    mg = nilpotent_pair_matrix(g)[np.ix_(verts, verts)]
    p = proj[verts]
    mq = nilpotent_pair_matrix(qa.group)[np.ix_(p, p)]
    distinct = p[:, None] != p[None, :]
    mismatch = distinct & (mg != mq)
    if not mismatch.any():
        return _ok()
    i, j = np.argwhere(mismatch)[0]
    return _bad(
        {"x": int(verts[i]), "y": int(verts[j])},
        "adjacency does not transfer to the hypercenter quotient",
    )


def check_quotient_components(a: GroupAnalysis) -> CheckOutcome:
    """Component count and large diameters survive the hypercenter quotient.

    Components of diameter > 1 keep their diameter; diameter-1 components map
    to components of diameter 0 or 1.
    """
    if a.nilpotent:
        return _na("nilpotent: both graphs are empty")
    gg = a.reduced_graph
    qg = a.quotient_analysis.reduced_graph
    proj = a.projection
    if len(gg.components) != len(qg.components):
        return _bad(
            {"components": len(gg.components), "quotient_components": len(qg.components)},
            "component counts differ",
        )
    images = []
    for comp, diam in zip(gg.components, gg.diameters):
        image_ids = {qg.component_of(int(proj[v])) for v in comp}
        if len(image_ids) != 1:
            return _bad(
                {"component_min": int(comp[0]), "image_ids": sorted(image_ids)},
                "a component does not map into a single quotient component",
            )
        img = image_ids.pop()
        images.append(img)
        qdiam = qg.diameters[img]
        if diam > 1 and qdiam != diam:
            return _bad(
                {"diameter": diam, "quotient_diameter": qdiam},
                "diameter above 1 not preserved",
            )
        if diam == 1 and qdiam not in (0, 1):
            return _bad(
                {"diameter": diam, "quotient_diameter": qdiam},
                "diameter-1 component mapped to diameter above 1",
            )
        if diam == 0 and qdiam != 0:
            return _bad(
                {"diameter": diam, "quotient_diameter": qdiam},
                "singleton component mapped to a larger component",
            )
    if len(set(images)) != len(images):
        return _bad({"image_ids": images}, "component correspondence is not injective")
    return _ok()


def check_disconnection_criterion(a: GroupAnalysis) -> CheckOutcome:
    """Disconnected iff the hypercenter quotient is Frobenius or 2-Frobenius
    (non-nilpotent solvable groups)."""
    if a.nilpotent:
        return _na("nilpotent")
    if not a.solvable:
        return _na("not solvable")
    qa = a.quotient_analysis
    rhs = qa.frobenius is not None or qa.two_frobenius is not None
    disconnected = not a.connected
    if disconnected == rhs:
        return _ok()
    return _bad(
        {"disconnected": disconnected, "quotient_frobenius_or_2frobenius": rhs},
        "connectivity disagrees with the quotient characterization",
    )


def check_frobenius_disconnection(a: GroupAnalysis) -> CheckOutcome:
    """Frobenius and 2-Frobenius groups have disconnected reduced graphs; a
    Frobenius kernel minus the identity is exactly one component."""
    w, w2 = a.frobenius, a.two_frobenius
    if w is None and w2 is None:
        return _na("neither Frobenius nor 2-Frobenius")
    if a.connected:
        return _bad(
            {"components": len(a.reduced_graph.components)},
            "graph is connected",
        )
    if w is not None:
        kernel_part = w.kernel.elements[w.kernel.elements != 0]
        comp = a.reduced_graph.components[a.reduced_graph.component_of(int(kernel_part[0]))]
        if not np.array_equal(comp, kernel_part):
            return _bad(
                {"kernel_minus_identity": kernel_part.tolist(), "component": comp.tolist()},
                "kernel minus identity is not exactly one component",
            )
    return _ok()


def check_commuting_connectivity(a: GroupAnalysis) -> CheckOutcome:
    """For centerless groups: the reduced and commuting graphs are connected
    together, with the commuting diameter at most twice the reduced one; for
    solvable centerless groups, disconnection means Frobenius or 2-Frobenius."""
    if a.group.order == 1:
        return _na("trivial group")
    if a.center.size > 1:
        return _na("center nontrivial")
    gr_conn = a.connected
    gc = a.commuting_graph
    gc_conn = len(gc.components) == 1
    if gr_conn != gc_conn:
        return _bad(
            {"reduced_connected": gr_conn, "commuting_connected": gc_conn},
            "connectivity of the two graphs disagrees",
        )
    if gr_conn:
        k = a.max_diameter
        ck = max(gc.diameters, default=0)
        if ck > 2 * k:
            return _bad(
                {"reduced_diameter": k, "commuting_diameter": ck},
                "commuting diameter exceeds twice the reduced diameter",
            )
    if a.solvable:
        rhs = a.frobenius is not None or a.two_frobenius is not None
        if (not gr_conn) != rhs:
            return _bad(
                {"disconnected": not gr_conn, "frobenius_or_2frobenius": rhs},
                "disconnection does not match the Frobenius characterization",
            )
    return _ok()


def check_commuting_graph_equality(a: GroupAnalysis) -> CheckOutcome:
    """The reduced and commuting graphs coincide iff all Sylows are abelian."""
    equal = graphs_equal(a.reduced_graph, a.commuting_graph)
    if equal == a.a_group:
        return _ok()
    return _bad(
        {"graphs_equal": equal, "a_group": a.a_group},
        "graph equality disagrees with the abelian-Sylow property",
    )


# -- diameter bounds ----------------------------------------------------------


def check_diameter_bounds(a: GroupAnalysis) -> CheckOutcome:
    """Global diameter bounds: components at most 10; solvable connected at
    most 8; solvable disconnected: one component at most 5, the rest at most 2."""
    if a.nilpotent:
        return _na("nilpotent: the graph has no vertices")
    ds = sorted(a.reduced_graph.diameters, reverse=True)
    if ds and ds[0] > 10:
        return _bad({"diameters": ds}, "component diameter exceeds 10")
    if a.solvable:
        if a.connected:
            if ds[0] > 8:
                return _bad({"diameter": ds[0]}, "connected solvable diameter exceeds 8")
        else:
            if ds[0] > 5:
                return _bad({"diameters": ds}, "largest component diameter exceeds 5")
            if len(ds) > 1 and ds[1] > 2:
                return _bad({"diameters": ds}, "secondary component diameter exceeds 2")
    return _ok()


def check_fitting_prime_bound(a: GroupAnalysis) -> CheckOutcome:
    """Fitting-subgroup component structure for solvable centerless groups.

    The nontrivial Fitting elements share one component; every element of
    order sharing a prime with the Fitting order reaches it within 2 steps;
    and if the Fitting subgroup sees every prime of the group, a connected
    graph has diameter at most 5.
    """
    if a.group.order == 1:
        return _na("trivial group")
    if not a.solvable:
        return _na("not solvable")
    if a.nilpotent:
        return _na("nilpotent")
    if a.center.size > 1:
        return _na("center nontrivial")
    g = a.group
    graph = a.reduced_graph
    fit = a.fitting.elements
    fit_part = fit[fit != 0]
    comp_ids = {graph.component_of(int(v)) for v in fit_part}
    if len(comp_ids) != 1:
        return _bad(
            {"fitting_component_ids": sorted(comp_ids)},
            "Fitting elements spread over several components",
        )
    fit_comp = comp_ids.pop()
    fit_size = a.fitting.size
    fit_memb = a.fitting.membership
    for x in range(1, g.order):
        if math.gcd(g.order_of(x), fit_size) == 1:
            continue
        if graph.component_of(x) != fit_comp:
            return _bad({"element": x}, "element misses the Fitting component")
        near = graph.reachable_within(x, 2)
        if not (fit_memb[near] & (near != 0)).any():
            return _bad(
                {"element": x},
                "no Fitting element within two steps",
            )
    if pi(g) == sorted(factorize(fit_size)) and a.connected:
        if a.max_diameter > 5:
            return _bad(
                {"diameter": a.max_diameter},
                "diameter exceeds 5 despite full Fitting prime support",
            )
    return _ok()


def check_prime_index_bound(a: GroupAnalysis) -> CheckOutcome:
    """Prime Fitting index forces diameter at most 3 when connected."""
    if a.nilpotent:
        return _na("nilpotent")
    index = a.group.order // a.fitting.size
    if not is_prime(index):
        return _na(f"Fitting index {index} is not prime")
    if not a.connected:
        return _na("graph disconnected")
    if a.max_diameter <= 3:
        return _ok()
    return _bad({"diameter": a.max_diameter}, "diameter exceeds 3")


def check_ac_group_disconnection(a: GroupAnalysis) -> CheckOutcome:
    """Solvable non-nilpotent groups with abelian centralizers disconnect."""
    if a.nilpotent:
        return _na("nilpotent")
    if not a.solvable:
        return _na("not solvable")
    if not a.ac_group:
        return _na("some centralizer is nonabelian")
    if not a.connected:
        return _ok()
    return _bad({"components": len(a.reduced_graph.components)}, "graph is connected")


def check_a_group_bound(a: GroupAnalysis) -> CheckOutcome:
    """Groups with abelian Sylows have connected diameter at most 6."""
    if a.nilpotent:
        return _na("nilpotent")
    if not a.a_group:
        return _na("some Sylow subgroup is nonabelian")
    if not a.connected:
        return _na("graph disconnected")
    if a.max_diameter <= 6:
        return _ok()
    return _bad({"diameter": a.max_diameter}, "diameter exceeds 6")


def check_cyclic_by_abelian_bound(a: GroupAnalysis) -> CheckOutcome:
    """A normal-cyclic-by-abelian factorization bounds the diameter by 4."""
    if a.nilpotent:
        return _na("nilpotent")
    if a.center.size != a.hypercenter.size:
        return _na("center differs from the hypercenter")
    fact = a.cyclic_by_abelian
    if fact is None:
        return _na("no normal-cyclic-by-abelian factorization found")
    if not a.connected:
        return _na("graph disconnected")
    if a.max_diameter <= 4:
        return _ok()
    nsub, comp = fact
    return _bad(
        {"diameter": a.max_diameter, "cyclic_order": nsub.size, "abelian_order": comp.size},
        "diameter exceeds 4",
    )


def check_cyclic_fitting_bound(a: GroupAnalysis) -> CheckOutcome:
    """A cyclic Fitting subgroup bounds the connected diameter by 5."""
    if a.nilpotent:
        return _na("nilpotent")
    if not a.solvable:
        return _na("not solvable")
    if a.center.size > 1:
        return _na("center nontrivial")
    fit = a.fitting
    if int(a.group.element_order[fit.elements].max()) != fit.size:
        return _na("Fitting subgroup not cyclic")
    if not a.connected:
        return _na("graph disconnected")
    if a.max_diameter <= 5:
        return _ok()
    return _bad({"diameter": a.max_diameter}, "diameter exceeds 5")


def check_two_prime_bound(a: GroupAnalysis) -> CheckOutcome:
    """Orders with exactly two prime divisors bound the connected diameter by 6."""
    if a.nilpotent:
        return _na("nilpotent")
    if len(pi(a.group)) != 2:
        return _na("order does not have exactly two prime divisors")
    if a.center.size > 1:
        return _na("center nontrivial")
    if not a.connected:
        return _na("graph disconnected")
    if a.max_diameter <= 6:
        return _ok()
    return _bad({"diameter": a.max_diameter}, "diameter exceeds 6")


CHECKS = {
    "universal_vertices": check_universal_vertices,
    "fitting_cross_check": check_fitting_cross,
    "frobenius_cross_check": check_frobenius_cross,
    "neighborhood_intersection": check_neighborhood_intersection,
    "prime_power_reduction": check_prime_power_reduction,
    "a_group_centralizers": check_a_group_centralizers,
    "product_closure": check_product_closure,
    "frobenius_inheritance": check_frobenius_inheritance,
    "nilpotent_neighborhoods": check_nilpotent_neighborhoods,
    "quotient_adjacency": check_quotient_adjacency,
    "quotient_components": check_quotient_components,
    "frobenius_disconnection": check_frobenius_disconnection,
    "commuting_connectivity": check_commuting_connectivity,
    "disconnection_criterion": check_disconnection_criterion,
    "commuting_graph_equality": check_commuting_graph_equality,
    "diameter_bounds": check_diameter_bounds,
    "fitting_prime_bound": check_fitting_prime_bound,
    "prime_index_bound": check_prime_index_bound,
    "ac_group_disconnection": check_ac_group_disconnection,
    "a_group_bound": check_a_group_bound,
    "cyclic_by_abelian_bound": check_cyclic_by_abelian_bound,
    "cyclic_fitting_bound": check_cyclic_fitting_bound,
    "two_prime_bound": check_two_prime_bound,
}


def _graph_stats(graph: GroupGraph) -> dict:
    return {
        "vertex_count": int(graph.vertices.size),
        "component_count": len(graph.components),
        "diameter_multiset": sorted(int(d) for d in graph.diameters),
    }


def classification_report(
    spec: dict,
    order_cap: int = DEFAULT_ORDER_CAP,
    check_names: tuple[str, ...] | None = None,
) -> dict:
    """Full structural report for one group spec.

    Raises GroupError when the spec does not construct; callers that sweep a
    catalog catch that and record an entry-level error instead.
    """
    group = from_spec(spec, order_cap)
    a = GroupAnalysis(group)
    names = list(CHECKS) if check_names is None else list(check_names)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise GroupError(f"unknown check names: {', '.join(unknown)}")
    outcomes = {name: CHECKS[name](a).to_json() for name in names}
    return {
        "spec": group.spec if group.spec is not None else dict(spec),
        "label": group.label,
        "order": group.order,
        "center_order": a.center.size,
        "hypercenter_order": a.hypercenter.size,
        "fitting_order": a.fitting.size,
        "primes": pi(group),
        "flags": {
            "nilpotent": a.nilpotent,
            "solvable": a.solvable,
            "a_group": a.a_group,
            "ac_group": a.ac_group,
            "n_group": a.n_group,
            "frobenius": a.frobenius is not None,
            "two_frobenius": a.two_frobenius is not None,
            "nil_nbhd_property": a.nil_property,
        },
        "graph_stats": {
            KIND_FULL: _graph_stats(a.full_graph),
            KIND_REDUCED: _graph_stats(a.reduced_graph),
            KIND_COMMUTING: _graph_stats(a.commuting_graph),
        },
        "theorem_outcomes": outcomes,
    }
