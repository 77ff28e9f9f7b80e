"""Structural subgroup computations.

Centralizers, central and derived series, the hypercenter, Sylow subgroups,
p-cores, the Fitting subgroup, conjugacy classes, normal subgroup enumeration,
and primary decomposition of elements.  Everything operates on immutable
`ConcreteGroup` instances and is pure; memoized results are attached to the
group and behave as if computed once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .groups import (
    ConcreteGroup,
    GroupError,
    SubgroupSet,
    closure_elements,
    quotient,
    subgroup_closure,
)

UPPER_CENTRAL = "upper_central"
LOWER_CENTRAL = "lower_central"
DERIVED = "derived"


@dataclass(frozen=True)
class SeriesResult:
    """A stabilized subgroup series; the last two terms are always equal."""

    terms: tuple[SubgroupSet, ...]
    kind: str
    stabilized: bool


@dataclass(frozen=True)
class ConjugacyClass:
    rep: int
    members: np.ndarray
    # conjugators[k] is the least g with rep^g == members[k]
    conjugators: np.ndarray


# -- number theory helpers ----------------------------------------------------


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    if n < 1:
        raise GroupError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n > 1 and list(factorize(n)) == [n]


def prime_power_base(n: int) -> int | None:
    """The prime p when n is a nontrivial power of p, else None."""
    f = factorize(n) if n > 1 else {}
    return next(iter(f)) if len(f) == 1 else None


def pi(group: ConcreteGroup) -> list[int]:
    """Sorted primes dividing the group order."""
    return sorted(factorize(group.order)) if group.order > 1 else []


# -- basic subgroups ----------------------------------------------------------


def whole_group(group: ConcreteGroup) -> SubgroupSet:
    return group.cache(
        "whole",
        lambda: SubgroupSet(group, np.arange(group.order, dtype=np.int32), validate=False),
    )


def trivial_subgroup(group: ConcreteGroup) -> SubgroupSet:
    return group.cache("trivial", lambda: SubgroupSet(group, [0], validate=False))


def centralizer(group: ConcreteGroup, x: int) -> SubgroupSet:
    """Elements commuting with x."""
    x = group._check_index(x)
    elems = np.nonzero(group.commutes_table()[x])[0]
    return SubgroupSet(group, elems, validate=False)


def center(group: ConcreteGroup) -> SubgroupSet:
    def build():
        elems = np.nonzero(group.commutes_table().all(axis=1))[0]
        return SubgroupSet(group, elems, validate=False)

    return group.cache("center", build)


def is_abelian_subset(group: ConcreteGroup, elems: np.ndarray) -> bool:
    return bool(group.commutes_table()[np.ix_(elems, elems)].all())


# -- series -------------------------------------------------------------------


def _lower_central_raw(group: ConcreteGroup, elems: np.ndarray) -> list[np.ndarray]:
    comm = group.commutator_table()
    terms = [elems]
    cur = elems
    while True:
        raw = np.unique(comm[np.ix_(elems, cur)])
        nxt = closure_elements(group, raw)
        terms.append(nxt)
        if nxt.size == cur.size:
            return terms
        cur = nxt


def _nilpotent_elems(group: ConcreteGroup, elems: np.ndarray) -> bool:
    """Whether the subgroup on `elems` is nilpotent (memoized per group)."""
    cache = group._cache.setdefault("nilpotent_sets", {})
    key = elems.tobytes()
    hit = cache.get(key)
    if hit is None:
        hit = _lower_central_raw(group, elems)[-1].size == 1
        cache[key] = hit
    return hit


def _as_subgroup(h) -> SubgroupSet:
    if isinstance(h, SubgroupSet):
        return h
    if isinstance(h, ConcreteGroup):
        return whole_group(h)
    raise GroupError(f"expected a group or subgroup, got {type(h).__name__}")


def lower_central_series(h) -> SeriesResult:
    """Iterated commutator series of a subgroup, stopped at stabilization."""
    h = _as_subgroup(h)
    raw = _lower_central_raw(h.parent, h.elements)
    terms = tuple(SubgroupSet(h.parent, e, validate=False) for e in raw)
    return SeriesResult(terms=terms, kind=LOWER_CENTRAL, stabilized=True)


def is_nilpotent(h) -> bool:
    h = _as_subgroup(h)
    return _nilpotent_elems(h.parent, h.elements)


def nilpotency_class(h) -> int | None:
    series = lower_central_series(h)
    if series.terms[-1].size != 1:
        return None
    sizes = [t.size for t in series.terms]
    return sum(1 for a, b in zip(sizes, sizes[1:]) if a > b)


def derived_series(h) -> SeriesResult:
    h = _as_subgroup(h)
    group = h.parent
    comm = group.commutator_table()
    terms = [h]
    cur = h.elements
    while True:
        nxt = closure_elements(group, np.unique(comm[np.ix_(cur, cur)]))
        terms.append(SubgroupSet(group, nxt, validate=False))
        if nxt.size == cur.size:
            return SeriesResult(terms=tuple(terms), kind=DERIVED, stabilized=True)
        cur = nxt


def is_solvable(h) -> bool:
    return derived_series(h).terms[-1].size == 1


def upper_central_series(group: ConcreteGroup) -> SeriesResult:
    """Ascending central series, computed by lifting centers of quotients."""

    def build():
        terms = [trivial_subgroup(group)]
        while True:
            q, proj = quotient(group, terms[-1])
            zq = center(q)
            lifted = np.nonzero(zq.membership[proj])[0]
            nxt = SubgroupSet(group, lifted, validate=False)
            terms.append(nxt)
            if nxt.size == terms[-2].size:
                return SeriesResult(terms=tuple(terms), kind=UPPER_CENTRAL, stabilized=True)

    return group.cache("upper_central_series", build)


def hypercenter(group: ConcreteGroup) -> SubgroupSet:
    """Final term of the upper central series."""
    return upper_central_series(group).terms[-1]


# -- conjugacy classes --------------------------------------------------------


def _classes(group: ConcreteGroup) -> list[ConjugacyClass]:
    def build():
        conj = group.conjugation_table()
        n = group.order
        seen = np.zeros(n, dtype=bool)
        out = []
        for i in range(n):
            if seen[i]:
                continue
            members, first = np.unique(conj[:, i], return_index=True)
            seen[members] = True
            out.append(
                ConjugacyClass(
                    rep=i, members=members, conjugators=first.astype(np.int32)
                )
            )
        return out

    return group.cache("classes", build)


def conjugacy_classes(group: ConcreteGroup) -> list[np.ndarray]:
    """Partition of the elements into conjugacy classes, ordered by least member."""
    return [c.members.copy() for c in _classes(group)]


def class_representatives(group: ConcreteGroup) -> list[int]:
    return [c.rep for c in _classes(group)]


# -- normality ---------------------------------------------------------------


def is_normal(group: ConcreteGroup, h: SubgroupSet) -> bool:
    gens = group.generators if group.generators else list(range(group.order))
    conj = group.conjugation_table()
    return bool(h.membership[conj[np.ix_(np.asarray(gens, dtype=np.int32), h.elements)]].all())


def normalizer(group: ConcreteGroup, h: SubgroupSet) -> SubgroupSet:
    conj = group.conjugation_table()
    rows_ok = h.membership[conj[:, h.elements]].all(axis=1)
    return SubgroupSet(group, np.nonzero(rows_ok)[0], validate=False)


def normal_closure(group: ConcreteGroup, seed) -> SubgroupSet:
    seed = np.asarray(list(seed), dtype=np.int32)
    conj = group.conjugation_table()
    spread = np.unique(conj[:, seed]) if seed.size else seed
    return SubgroupSet(group, closure_elements(group, spread), validate=False)


def normal_subgroups(group: ConcreteGroup) -> list[SubgroupSet]:
    """All normal subgroups, via joins of conjugacy-class closures.

    Every normal subgroup is a union of classes, hence a join of the
    class-closure atoms; joins of normal subgroups need only one product pass.
    Results are sorted by (size, element sequence) and memoized.
    """

    def build():
        table = group.table
        atoms: list[np.ndarray] = []
        seen: dict[bytes, np.ndarray] = {}
        for cls in _classes(group):
            a = closure_elements(group, cls.members)
            if a.tobytes() not in seen:
                seen[a.tobytes()] = a
                atoms.append(a)
        subs: dict[bytes, np.ndarray] = {}
        triv = np.asarray([0], dtype=np.int32)
        subs[triv.tobytes()] = triv
        queue = []
        for a in atoms:
            if a.tobytes() not in subs:
                subs[a.tobytes()] = a
                queue.append(a)
        while queue:
            s = queue.pop()
            for a in atoms:
                j = np.unique(table[np.ix_(s, a)])
                k = j.tobytes()
                if k not in subs:
                    subs[k] = j
                    queue.append(j)
        ordered = sorted(subs.values(), key=lambda e: (e.size, tuple(map(int, e))))
        return [SubgroupSet(group, e, validate=False) for e in ordered]

    return group.cache("normal_subgroups", build)


# -- Sylow machinery ----------------------------------------------------------


def sylow_subgroup(group: ConcreteGroup, p: int) -> SubgroupSet:
    """A Sylow p-subgroup, grown through normalizers.

    Starting from the trivial subgroup, repeatedly adjoin the least
    p-power-order element of the normalizer that lies outside the current
    p-subgroup; this reaches the full p-part of the group order.
    """
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    n = group.order
    target = 1
    while n % (target * p) == 0:
        target *= p
    orders = group.element_order
    is_p_power = np.array([_is_power_of(int(o), p) for o in orders])
    current = trivial_subgroup(group)
    while current.size < target:
        norm = normalizer(group, current)
        cand = norm.elements[
            is_p_power[norm.elements] & ~current.membership[norm.elements]
        ]
        if cand.size == 0:
            raise GroupError("internal error: Sylow growth stalled")
        current = subgroup_closure(group, np.append(current.elements, cand[0]))
    return current


def _is_power_of(o: int, p: int) -> bool:
    while o % p == 0:
        o //= p
    return o == 1


def p_core(group: ConcreteGroup, p: int) -> SubgroupSet:
    """Largest normal p-subgroup: the intersection of all Sylow p conjugates."""
    s = sylow_subgroup(group, p)
    conj = group.conjugation_table()
    keep = s.membership[conj[:, s.elements]].all(axis=0)
    return SubgroupSet(group, s.elements[keep], validate=False)


def fitting(group: ConcreteGroup) -> SubgroupSet:
    """Largest normal nilpotent subgroup: the product of the p-cores."""

    def build():
        elems = np.asarray([0], dtype=np.int32)
        for p in pi(group):
            elems = np.union1d(elems, p_core(group, p).elements)
        return SubgroupSet(group, closure_elements(group, elems), validate=False)

    return group.cache("fitting", build)


def fitting_from_prime_power_closures(group: ConcreteGroup) -> SubgroupSet:
    """Alternative Fitting computation used as a cross-check.

    Generated by the elements of prime-power order whose normal closure is a
    group of the same prime-power kind.
    """
    seed = [0]
    for cls in _classes(group):
        o = group.order_of(cls.rep)
        p = prime_power_base(o)
        if p is None:
            continue
        nc = normal_closure(group, [cls.rep])
        if _is_power_of(nc.size, p):
            seed.extend(int(m) for m in cls.members)
    return SubgroupSet(group, closure_elements(group, seed), validate=False)


# -- element decomposition ----------------------------------------------------


def primary_decomposition(group: ConcreteGroup, x: int) -> dict[int, int]:
    """Prime-indexed components of x: commuting prime-power parts multiplying to x."""
    x = group._check_index(x)
    o = group.order_of(x)
    out: dict[int, int] = {}
    for p, a in sorted(factorize(o).items()) if o > 1 else []:
        q = p**a
        c = o // q
        k = c * pow(c, -1, q) % o if c > 1 else 1
        out[p] = group.power(x, k)
    return out


# -- brute-force support ------------------------------------------------------


def two_generated_subgroups(group: ConcreteGroup) -> list[SubgroupSet]:
    """All subgroups generated by at most two elements (brute-force support).

    Quadratic in the order; intended for small groups used as test oracles.
    """
    subs: dict[bytes, np.ndarray] = {}
    triv = np.asarray([0], dtype=np.int32)
    subs[triv.tobytes()] = triv
    n = group.order
    singles = {}
    for i in range(1, n):
        c = closure_elements(group, [i])
        subs.setdefault(c.tobytes(), c)
        singles[i] = c
    for i, j in combinations(range(1, n), 2):
        if singles[j].size == group.order or singles[i].size == group.order:
            continue
        c = closure_elements(group, [i, j])
        subs.setdefault(c.tobytes(), c)
    ordered = sorted(subs.values(), key=lambda e: (e.size, tuple(map(int, e))))
    return [SubgroupSet(group, e, validate=False) for e in ordered]
