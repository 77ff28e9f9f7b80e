"""Structural group predicates.

Frobenius and 2-Frobenius recognition, groups with abelian Sylow subgroups,
groups with abelian centralizers, groups whose nilpotent neighborhoods are all
multiplication-closed, and the stronger property that every neighborhood is a
nilpotent subgroup.

Frobenius recognition is kernel-first: normal subgroups are cheap through
class joins, so we scan them for a kernel absorbing all centralizers and only
then search for a complement.  The classical malnormal-complement definition
is kept as a brute-force cross-check (`has_malnormal_subgroup`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .groups import ConcreteGroup, GroupError, SubgroupSet, closure_elements
from .structure import (
    _classes,
    _nilpotent_elems,
    center,
    centralizer,
    fitting,
    is_abelian_subset,
    normal_subgroups,
    pi,
    prime_power_base,
    quotient,
    sylow_subgroup,
    two_generated_subgroups,
    whole_group,
)
from .graphs import nil_neighborhood, nilpotent_pair_matrix

_MALNORMAL_BRUTE_CAP = 60


@dataclass(frozen=True)
class FrobeniusWitness:
    """Kernel and one complement of a Frobenius group."""

    kernel: SubgroupSet
    complement: SubgroupSet

    def validate(self) -> None:
        g = self.kernel.parent
        k, h = self.kernel, self.complement
        if not 1 < k.size < g.order:
            raise GroupError("kernel must be proper and nontrivial")
        if k.size * h.size != g.order:
            raise GroupError("kernel and complement orders must multiply to |G|")
        if math.gcd(k.size, h.size) != 1:
            raise GroupError("kernel and complement orders must be coprime")
        if np.intersect1d(k.elements, h.elements).size != 1:
            raise GroupError("kernel and complement must intersect trivially")
        if not _kernel_absorbs_centralizers(g, k):
            raise GroupError("kernel does not absorb all centralizers")


@dataclass(frozen=True)
class TwoFrobeniusWitness:
    """The normal chain K < L witnessing a 2-Frobenius structure."""

    k: SubgroupSet
    l: SubgroupSet


def _kernel_absorbs_centralizers(
    group: ConcreteGroup, k: SubgroupSet, within: np.ndarray | None = None
) -> bool:
    """Whether every nontrivial kernel element has its centralizer inside K.

    With `within`, centralizers are taken in that sub-universe of elements.
    """
    nontrivial = k.elements[k.elements != 0]
    if nontrivial.size == 0:
        return False
    rows = group.commutes_table()[nontrivial]
    outside = ~k.membership
    if within is not None:
        scope = np.zeros(group.order, dtype=bool)
        scope[within] = True
        outside = outside & scope
    return not rows[:, outside].any()


def _complement_candidates(group: ConcreteGroup, comp_order: int) -> np.ndarray:
    orders = group.element_order
    idx = np.arange(group.order)
    keep = (idx != 0) & (comp_order % orders == 0)
    return idx[keep]


def find_complement(group: ConcreteGroup, kernel: SubgroupSet) -> SubgroupSet | None:
    """A subgroup of order |G|/|K| meeting the kernel trivially.

    Exhaustive over closures of 1..3 candidate elements whose order divides the
    complement order, aborting any closure that overshoots.
    """
    h = group.order // kernel.size
    if h == 1:
        return SubgroupSet(group, [0], validate=False)
    cand = _complement_candidates(group, h)
    for size in (1, 2, 3):
        for seed in combinations(cand.tolist(), size):
            cl = closure_elements(group, seed, cap=h)
            if cl is not None and cl.size == h:
                if np.intersect1d(cl, kernel.elements).size == 1:
                    return SubgroupSet(group, cl, validate=False)
    return None


def is_frobenius(group: ConcreteGroup) -> FrobeniusWitness | None:
    """Frobenius recognition via the kernel criterion.

    Scans normal subgroups for a proper nontrivial K with C_G(k) <= K for all
    nontrivial k in K.  Groups with nontrivial center are rejected up front
    (their central elements have full centralizers inside any kernel).
    """

    def build():
        if group.order == 1 or center(group).size > 1:
            return None
        for k in normal_subgroups(group):
            if not 1 < k.size < group.order:
                continue
            if _kernel_absorbs_centralizers(group, k):
                comp = find_complement(group, k)
                if comp is None:
                    raise GroupError(
                        "internal error: Frobenius kernel found but no complement"
                    )
                witness = FrobeniusWitness(kernel=k, complement=comp)
                witness.validate()
                return witness
        return None

    return group.cache("frobenius", build)


def _frobenius_with_kernel(
    group: ConcreteGroup, k: SubgroupSet, within: np.ndarray
) -> bool:
    """Kernel criterion for the subgroup on `within` with prospective kernel K."""
    if not 1 < k.size < within.size:
        return False
    return _kernel_absorbs_centralizers(group, k, within=within)


def _quotient_is_frobenius_with_kernel(
    group: ConcreteGroup, k: SubgroupSet, l: SubgroupSet
) -> bool:
    """Whether G/K is Frobenius with kernel L/K."""
    q, proj = quotient(group, k)
    image = np.unique(proj[l.elements])
    kq = SubgroupSet(q, image, validate=False)
    if not 1 < kq.size < q.order:
        return False
    return _kernel_absorbs_centralizers(q, kq)


def _two_frobenius_fast(group: ConcreteGroup) -> TwoFrobeniusWitness | None:
    f1 = fitting(group)
    if not 1 < f1.size < group.order:
        return None
    q, proj = quotient(group, f1)
    f2q = fitting(q)
    if not 1 < f2q.size < q.order:
        return None
    f2_elems = np.nonzero(f2q.membership[proj])[0]
    f2 = SubgroupSet(group, f2_elems, validate=False)
    if not _frobenius_with_kernel(group, f1, f2.elements):
        return None
    if not _kernel_absorbs_centralizers(q, f2q):
        return None
    return TwoFrobeniusWitness(k=f1, l=f2)


def _two_frobenius_general(group: ConcreteGroup) -> TwoFrobeniusWitness | None:
    subs = normal_subgroups(group)
    for k in subs:
        if not 1 < k.size < group.order:
            continue
        for l in subs:
            if l.size <= k.size or l.size >= group.order:
                continue
            if int(l.membership[k.elements].sum()) != k.size:  # K <= L
                continue
            if not _frobenius_with_kernel(group, k, l.elements):
                continue
            if _quotient_is_frobenius_with_kernel(group, k, l):
                return TwoFrobeniusWitness(k=k, l=l)
    return None


def is_2frobenius(group: ConcreteGroup) -> TwoFrobeniusWitness | None:
    """2-Frobenius recognition.

    The fast path tests the canonical chain built from the Fitting subgroup
    and the Fitting subgroup of the quotient; the general path scans normal
    subgroup pairs.  Both must agree.
    """

    def build():
        if group.order == 1 or center(group).size > 1:
            return None
        fast = _two_frobenius_fast(group)
        general = _two_frobenius_general(group)
        if (fast is None) != (general is None):
            raise GroupError(
                "internal error: 2-Frobenius recognition paths disagree on "
                f"{group.label}"
            )
        return fast

    return group.cache("two_frobenius", build)


def is_A_group(group: ConcreteGroup) -> bool:
    """Whether every Sylow subgroup is abelian."""

    def build():
        return all(
            is_abelian_subset(group, sylow_subgroup(group, p).elements)
            for p in pi(group)
        )

    return group.cache("a_group", build)


def is_AC_group(group: ConcreteGroup) -> bool:
    """Whether every nontrivial element has an abelian centralizer."""

    def build():
        for cls in _classes(group):
            if cls.rep == 0:
                continue
            c = centralizer(group, cls.rep)
            if not is_abelian_subset(group, c.elements):
                return False
        return True

    return group.cache("ac_group", build)


def nil_closed(group: ConcreteGroup, x: int) -> bool:
    """Whether the nilpotent neighborhood of x is multiplication-closed."""
    s = nil_neighborhood(group, x)
    memb = np.zeros(group.order, dtype=bool)
    memb[s] = True
    return bool(memb[group.table[np.ix_(s, s)]].all())


def _prime_power_reps(group: ConcreteGroup) -> list[int]:
    reps = []
    for cls in _classes(group):
        if cls.rep == 0:
            continue
        if prime_power_base(group.order_of(cls.rep)) is not None:
            reps.append(cls.rep)
    return reps


def is_n_group(group: ConcreteGroup) -> bool:
    """Whether every nilpotent neighborhood is a subgroup.

    Evaluated on prime-power-order class representatives only: neighborhoods
    of composite-order elements are intersections of those, and conjugation
    transports closure across each class.
    """

    def build():
        return all(nil_closed(group, rep) for rep in _prime_power_reps(group))

    return group.cache("n_group", build)


def is_n_group_unreduced(group: ConcreteGroup) -> bool:
    """Closure of every neighborhood, checked on all class representatives."""

    def build():
        return all(
            nil_closed(group, cls.rep) for cls in _classes(group) if cls.rep != 0
        )

    return group.cache("n_group_unreduced", build)


def has_nilpotent_neighborhood_property(group: ConcreteGroup) -> bool:
    """Whether Nil(x) is a nilpotent subgroup for every nontrivial x."""

    def build():
        m = nilpotent_pair_matrix(group)
        for cls in _classes(group):
            if cls.rep == 0:
                continue
            s = np.nonzero(m[cls.rep])[0].astype(np.int32)
            memb = np.zeros(group.order, dtype=bool)
            memb[s] = True
            if not memb[group.table[np.ix_(s, s)]].all():
                return False
            if not _nilpotent_elems(group, s):
                return False
        return True

    return group.cache("nil_nbhd_property", build)


def has_malnormal_subgroup(group: ConcreteGroup) -> bool:
    """Brute-force Frobenius cross-check: a proper nontrivial H with
    H meeting each conjugate H^g (g outside H) only in the identity.

    Enumerates two-generated subgroups, which is exhaustive for the complement
    shapes that occur at this scale; quadratic, so callers should keep the
    order at or below `_MALNORMAL_BRUTE_CAP`.
    """
    n = group.order
    conj = group.conjugation_table()
    for h in two_generated_subgroups(group):
        if not 1 < h.size < n:
            continue
        counts = h.membership[conj[:, h.elements]].sum(axis=1)
        if (counts[~h.membership] == 1).all():
            return True
    return False
