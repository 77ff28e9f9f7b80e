"""Finite groups as explicit Cayley tables.

A group of order n is materialized as a dense n x n multiplication table over
element indices 0..n-1, with index 0 always the identity.  Builders cover the
cyclic, dihedral, dicyclic, symmetric and alternating families, direct and
semidirect products, permutation closures, and raw Cayley tables.  Every
builder records a JSON-serializable spec so a group can be rebuilt from its
description.

Groups are immutable after construction; derived tables (commutators,
conjugation, ...) are memoized on the instance and all reads are safe to share
across threads.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 2000
# Full associativity scan is cubic; above this order we spot-check instead.
FULL_ASSOC_CAP = 512
_SPOT_CHECK_SEED = 24036583


class GroupError(Exception):
    """Invalid construction parameters or malformed group data."""


class OrderCapError(GroupError):
    """A construction would exceed the configured order cap."""


class ConcreteGroup:
    """A finite group on indices 0..order-1 with a dense multiplication table.

    Attributes:
        order: number of elements n.
        table: n x n int array, table[i, j] = index of the product i*j.
        inverse: length-n array of inverse indices.
        element_order: length-n array of element orders.
        generators: indices of a generating set (discovery order).
        label: short human-readable name.
        spec: JSON-serializable description used to rebuild the group, or None.
    """

    def __init__(self, table, label: str = "group", generators=None, spec=None):
        table = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise GroupError(f"Cayley table must be square, got shape {table.shape}")
        n = int(table.shape[0])
        if n == 0:
            raise GroupError("a group has at least the identity element")
        if table.min() < 0 or table.max() >= n:
            raise GroupError("Cayley table entries must be element indices in [0, n)")
        self.order = n
        self.table = table
        self.label = label
        self.spec = spec
        self._cache: dict = {}
        self._validate_identity()
        self._validate_latin_square()
        self.inverse = self._compute_inverses()
        self._validate_associativity()
        self.element_order = self._compute_element_orders()
        if generators is None:
            generators = minimal_generating_sequence(self)
        self.generators = [int(g) for g in generators]
        self.table.setflags(write=False)
        self.inverse.setflags(write=False)
        self.element_order.setflags(write=False)

    # -- construction-time validation ------------------------------------

    def _validate_identity(self) -> None:
        idx = np.arange(self.order, dtype=np.int32)
        if not np.array_equal(self.table[0], idx) or not np.array_equal(self.table[:, 0], idx):
            raise GroupError("index 0 must act as a two-sided identity")

    def _validate_latin_square(self) -> None:
        idx = np.arange(self.order, dtype=np.int32)
        if not (np.sort(self.table, axis=1) == idx).all():
            raise GroupError("every row of the table must be a permutation")
        if not (np.sort(self.table, axis=0) == idx[:, None]).all():
            raise GroupError("every column of the table must be a permutation")

    def _compute_inverses(self) -> np.ndarray:
        inv = np.argmax(self.table == 0, axis=1).astype(np.int32)
        idx = np.arange(self.order)
        if not (self.table[idx, inv] == 0).all() or not (self.table[inv, idx] == 0).all():
            raise GroupError("table has an element without a two-sided inverse")
        return inv

    def _validate_associativity(self) -> None:
        t = self.table
        n = self.order
        if n <= FULL_ASSOC_CAP:
            for i in range(n):
                if not np.array_equal(t[t[i], :], t[i][t]):
                    raise GroupError(f"table is not associative (row {i})")
        else:
            rng = np.random.default_rng(_SPOT_CHECK_SEED)
            m = 10 * n * n
            i, j, k = (rng.integers(0, n, size=m) for _ in range(3))
            if not np.array_equal(t[t[i, j], k], t[i, t[j, k]]):
                raise GroupError("table failed the associativity spot check")

    def _compute_element_orders(self) -> np.ndarray:
        n = self.order
        idx = np.arange(n, dtype=np.int32)
        cur = idx.copy()
        orders = np.ones(n, dtype=np.int64)
        alive = cur != 0
        while alive.any():
            cur[alive] = self.table[cur[alive], idx[alive]]
            orders[alive] += 1
            alive = cur != 0
        if (n % orders != 0).any():
            raise GroupError("element orders must divide the group order")
        return orders

    # -- memoized derived tables ------------------------------------------

    def cache(self, key: str, builder):
        value = self._cache.get(key)
        if value is None:
            value = builder()
            self._cache[key] = value
        return value

    def commutes_table(self) -> np.ndarray:
        """Boolean matrix: entry [i, j] is True when i and j commute."""
        return self.cache("commutes", lambda: np.asarray(self.table == self.table.T))

    def commutator_table(self) -> np.ndarray:
        """Matrix of commutators [i, j] = i^-1 j^-1 i j."""

        def build():
            t, inv = self.table, self.inverse
            return t[t[np.ix_(inv, inv)], t]

        return self.cache("commutators", build)

    def conjugation_table(self) -> np.ndarray:
        """Matrix of conjugates: entry [g, i] = g^-1 i g."""

        def build():
            t, inv = self.table, self.inverse
            n = self.order
            return t[t[inv], np.arange(n, dtype=np.int32)[:, None]]

        return self.cache("conjugation", build)

    @property
    def is_abelian(self) -> bool:
        return self.cache("abelian", lambda: bool(self.commutes_table().all()))

    # -- element operations -------------------------------------------------

    def _check_index(self, x: int) -> int:
        x = int(x)
        if not 0 <= x < self.order:
            raise GroupError(f"element index {x} out of range for order {self.order}")
        return x

    def multiply(self, x: int, y: int) -> int:
        return int(self.table[self._check_index(x), self._check_index(y)])

    def invert(self, x: int) -> int:
        return int(self.inverse[self._check_index(x)])

    def commutator(self, x: int, y: int) -> int:
        """The commutator x^-1 y^-1 x y."""
        x, y = self._check_index(x), self._check_index(y)
        t = self.table
        return int(t[t[self.inverse[x], self.inverse[y]], t[x, y]])

    def conjugate(self, x: int, g: int) -> int:
        """The conjugate g^-1 x g."""
        x, g = self._check_index(x), self._check_index(g)
        t = self.table
        return int(t[t[self.inverse[g], x], g])

    def order_of(self, x: int) -> int:
        return int(self.element_order[self._check_index(x)])

    def power(self, x: int, k: int) -> int:
        x = self._check_index(x)
        k %= self.order_of(x)
        result, base = 0, x
        while k:
            if k & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            k >>= 1
        return result

    def __repr__(self) -> str:
        return f"ConcreteGroup({self.label!r}, order={self.order})"


class SubgroupSet:
    """A subgroup of a parent group, stored as a sorted array of element indices."""

    __slots__ = ("parent", "elements", "_memb")

    def __init__(self, parent: ConcreteGroup, elements, validate: bool = True):
        elements = np.unique(np.asarray(elements, dtype=np.int32))
        self.parent = parent
        self.elements = elements
        self._memb = None
        if validate:
            self._validate()
        elements.setflags(write=False)

    def _validate(self) -> None:
        e, g = self.elements, self.parent
        if e.size == 0 or e[0] != 0:
            raise GroupError("a subgroup must contain the identity")
        if e[0] < 0 or int(e[-1]) >= g.order:
            raise GroupError("subgroup elements out of range")
        memb = self.membership
        if not memb[g.table[np.ix_(e, e)]].all():
            raise GroupError("set is not closed under multiplication")
        if not memb[g.inverse[e]].all():
            raise GroupError("set is not closed under inversion")
        if g.order % e.size:
            raise GroupError("subgroup size must divide the group order")

    @property
    def membership(self) -> np.ndarray:
        if self._memb is None:
            memb = np.zeros(self.parent.order, dtype=bool)
            memb[self.elements] = True
            memb.setflags(write=False)
            self._memb = memb
        return self._memb

    @property
    def size(self) -> int:
        return int(self.elements.size)

    def contains(self, x: int) -> bool:
        return 0 <= int(x) < self.parent.order and bool(self.membership[int(x)])

    @property
    def key(self) -> bytes:
        return self.elements.tobytes()

    def as_group(self) -> tuple[ConcreteGroup, np.ndarray]:
        """Reindex the subgroup as a standalone group.

        Returns the new group together with the array mapping its indices back
        to element indices of the parent.
        """
        g, e = self.parent, self.elements
        pos = np.full(g.order, -1, dtype=np.int32)
        pos[e] = np.arange(e.size, dtype=np.int32)
        table = pos[g.table[np.ix_(e, e)]]
        sub = ConcreteGroup(table, label=f"{g.label}|{e.size}")
        return sub, e.copy()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubgroupSet)
            and other.parent is self.parent
            and other.key == self.key
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.key))

    def __repr__(self) -> str:
        return f"SubgroupSet(order={self.size} of {self.parent.label!r})"


def closure_elements(group: ConcreteGroup, seed, cap: int | None = None) -> np.ndarray | None:
    """Indices of the subgroup generated by seed (always includes the identity).

    Returns None as soon as the closure grows beyond cap, when cap is given.
    """
    seed = np.asarray(list(seed) + [0], dtype=np.int32)
    cur = np.unique(seed)
    if cur.size and (cur[0] < 0 or int(cur[-1]) >= group.order):
        raise GroupError("seed elements out of range")
    while True:
        prods = group.table[np.ix_(cur, cur)]
        nxt = np.union1d(cur, prods.ravel())
        if cap is not None and nxt.size > cap:
            return None
        if nxt.size == cur.size:
            return cur
        cur = nxt


def subgroup_closure(group: ConcreteGroup, seed) -> SubgroupSet:
    """Smallest subgroup containing the seed elements."""
    return SubgroupSet(group, closure_elements(group, seed), validate=False)


def minimal_generating_sequence(group: ConcreteGroup) -> list[int]:
    """Greedy generating sequence: repeatedly adjoin the least uncovered index."""
    covered = closure_elements(group, ())
    gens: list[int] = []
    while covered.size < group.order:
        memb = np.zeros(group.order, dtype=bool)
        memb[covered] = True
        nxt = int(np.argmin(memb))
        gens.append(nxt)
        covered = closure_elements(group, np.append(covered, nxt))
    return gens


def quotient(group: ConcreteGroup, normal: SubgroupSet) -> tuple[ConcreteGroup, np.ndarray]:
    """Quotient group by a normal subgroup, with the projection map.

    Cosets are labeled by their minimal element index and ordered by that
    label, so the construction is deterministic; the identity coset is 0.
    """
    e = normal.elements
    memb = normal.membership
    conj = group.conjugation_table()
    if not memb[conj[:, e]].all():
        raise GroupError("cannot take a quotient by a non-normal subgroup")
    n = group.order
    coset_index = np.full(n, -1, dtype=np.int32)
    reps: list[int] = []
    for i in range(n):
        if coset_index[i] < 0:
            coset_index[group.table[i, e]] = len(reps)
            reps.append(i)
    rep_arr = np.asarray(reps, dtype=np.int32)
    qtable = coset_index[group.table[np.ix_(rep_arr, rep_arr)]]
    gens = []
    for g in group.generators:
        img = int(coset_index[g])
        if img != 0 and img not in gens:
            gens.append(img)
    q = ConcreteGroup(qtable, label=f"{group.label}/{e.size}", generators=gens)
    return q, coset_index


# -- builders ---------------------------------------------------------------


def _check_cap(order: int, order_cap: int) -> None:
    if order > order_cap:
        raise OrderCapError(f"order {order} exceeds the cap {order_cap}")


def build_cyclic(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> ConcreteGroup:
    """Cyclic group of order n, written additively on residues."""
    if n < 1:
        raise GroupError(f"cyclic group order must be positive, got {n}")
    _check_cap(n, order_cap)
    idx = np.arange(n, dtype=np.int32)
    table = (idx[:, None] + idx[None, :]) % n
    gens = [1] if n > 1 else []
    spec = {"constructor": "cyclic", "params": {"n": n}, "label": f"C{n}"}
    return ConcreteGroup(table, label=f"C{n}", generators=gens, spec=spec)


def _semidirect_cyclic_table(n: int, m: int, e: int) -> np.ndarray:
    # element (i, j) = x^i y^j at index i*m + j; y^-1 x y = x^e
    d = pow(e, -1, n)
    dpow = np.array([pow(d, j, n) for j in range(m)], dtype=np.int64)
    i1 = np.arange(n, dtype=np.int64)[:, None, None, None]
    j1 = np.arange(m, dtype=np.int64)[None, :, None, None]
    i2 = np.arange(n, dtype=np.int64)[None, None, :, None]
    j2 = np.arange(m, dtype=np.int64)[None, None, None, :]
    ipart = (i1 + i2 * dpow[j1]) % n
    jpart = (j1 + j2) % m
    return (ipart * m + jpart).reshape(n * m, n * m).astype(np.int32)


def build_semidirect_cyclic(
    n: int, m: int, e: int, order_cap: int = DEFAULT_ORDER_CAP
) -> ConcreteGroup:
    """Split extension of a cyclic group of order n by one of order m.

    The order-m generator y acts on the order-n generator x by x^y = x^e,
    which requires e^m = 1 (mod n) and gcd(e, n) = 1.
    """
    if n < 1 or m < 1:
        raise GroupError("cyclic factor orders must be positive")
    _check_cap(n * m, order_cap)
    e %= n
    if math.gcd(e, n) != 1:
        raise GroupError(f"exponent e={e} is not invertible mod {n}")
    if pow(e, m, n) != 1 % n:
        raise GroupError(
            f"e^m = {pow(e, m, n)} != 1 (mod {n}): the action does not define a "
            f"homomorphism from the cyclic group of order {m}"
        )
    table = _semidirect_cyclic_table(n, m, e)
    gens = []
    if n > 1:
        gens.append(m)  # x = (1, 0)
    if m > 1:
        gens.append(1)  # y = (0, 1)
    label = f"C{n}:C{m}(e={e})"
    spec = {
        "constructor": "semidirect_cyclic",
        "params": {"n": n, "m": m, "e": e},
        "label": label,
    }
    return ConcreteGroup(table, label=label, generators=gens, spec=spec)


def build_dihedral(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> ConcreteGroup:
    """Dihedral group of order 2n (the inversion action on a cyclic group)."""
    if n < 1:
        raise GroupError(f"dihedral parameter must be positive, got {n}")
    _check_cap(2 * n, order_cap)
    table = _semidirect_cyclic_table(n, 2, (n - 1) % n)
    gens = [2] if n > 1 else []
    gens.append(1)
    label = f"D{2 * n}"
    spec = {"constructor": "dihedral", "params": {"n": n}, "label": label}
    return ConcreteGroup(table, label=label, generators=gens, spec=spec)


def build_dicyclic(order: int, order_cap: int = DEFAULT_ORDER_CAP) -> ConcreteGroup:
    """Dicyclic (generalized quaternion style) group of the given order 4m.

    Presentation: a^(2m) = 1, b^2 = a^m, b^-1 a b = a^-1, with elements
    a^i b^j indexed as 2i + j.
    """
    if order % 4 or order < 4:
        raise GroupError(f"dicyclic order must be a positive multiple of 4, got {order}")
    _check_cap(order, order_cap)
    m = order // 4
    two_m = 2 * m
    i1 = np.arange(two_m, dtype=np.int64)[:, None, None, None]
    j1 = np.arange(2, dtype=np.int64)[None, :, None, None]
    i2 = np.arange(two_m, dtype=np.int64)[None, None, :, None]
    j2 = np.arange(2, dtype=np.int64)[None, None, None, :]
    ipart = np.where(j1 == 0, i1 + i2, i1 - i2 + np.where(j2 == 1, m, 0)) % two_m
    jpart = (j1 + j2) % 2
    table = (2 * ipart + jpart).reshape(order, order).astype(np.int32)
    label = "Q8" if order == 8 else f"Dic{order}"
    spec = {"constructor": "quaternion", "params": {"order": order}, "label": label}
    return ConcreteGroup(table, label=label, generators=[2, 1], spec=spec)


def _validate_permutation(img, degree: int) -> tuple[int, ...]:
    img = tuple(int(v) for v in img)
    if len(img) != degree or sorted(img) != list(range(degree)):
        raise GroupError(f"{img} is not a permutation of {degree} points")
    return img


def build_from_permutations(
    degree: int,
    gens: Sequence[Sequence[int]],
    label: str | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> ConcreteGroup:
    """Group generated by permutations, enumerated by breadth-first closure.

    Permutations are 0-based image arrays and compose left to right
    (p*q applies p first).  Discovery order fixes the element indexing, with
    the identity at index 0.
    """
    if degree < 1:
        raise GroupError("permutation degree must be positive")
    gen_perms = [_validate_permutation(g, degree) for g in gens]
    identity = tuple(range(degree))
    elems: list[tuple[int, ...]] = [identity]
    index = {identity: 0}
    head = 0
    while head < len(elems):
        cur = elems[head]
        head += 1
        for g in gen_perms:
            prod = tuple(g[c] for c in cur)
            if prod not in index:
                if len(elems) >= order_cap:
                    raise OrderCapError(
                        f"permutation closure exceeded the order cap {order_cap}"
                    )
                index[prod] = len(elems)
                elems.append(prod)
    n = len(elems)
    perms = np.asarray(elems, dtype=np.int32)
    table = np.empty((n, n), dtype=np.int32)
    for j in range(n):
        composed = perms[j][perms]  # row i: apply perm i, then perm j
        table[:, j] = [index[tuple(row)] for row in composed]
    gen_idx = [index[g] for g in gen_perms]
    if label is None:
        label = f"Perm{degree}<{n}>"
    spec = {
        "constructor": "from_permutations",
        "params": {"degree": degree, "generators": [list(g) for g in gen_perms]},
        "label": label,
    }
    return ConcreteGroup(table, label=label, generators=gen_idx, spec=spec)


def build_symmetric(degree: int, order_cap: int = DEFAULT_ORDER_CAP) -> ConcreteGroup:
    """Symmetric group on the given number of points."""
    if degree < 1:
        raise GroupError("degree must be positive")
    gens: list[list[int]] = []
    if degree >= 2:
        swap = list(range(degree))
        swap[0], swap[1] = 1, 0
        gens.append(swap)
    if degree >= 3:
        gens.append([(i + 1) % degree for i in range(degree)])
    g = build_from_permutations(degree, gens, label=f"S{degree}", order_cap=order_cap)
    g.spec = {"constructor": "symmetric", "params": {"degree": degree}, "label": g.label}
    return g


def build_alternating(degree: int, order_cap: int = DEFAULT_ORDER_CAP) -> ConcreteGroup:
    """Alternating group on the given number of points."""
    if degree < 1:
        raise GroupError("degree must be positive")
    gens = []
    for i in range(degree - 2):
        cyc = list(range(degree))
        cyc[i], cyc[i + 1], cyc[i + 2] = cyc[i + 1], cyc[i + 2], cyc[i]
        gens.append(cyc)
    g = build_from_permutations(degree, gens, label=f"A{degree}", order_cap=order_cap)
    g.spec = {"constructor": "alternating", "params": {"degree": degree}, "label": g.label}
    return g


def direct_product(
    a: ConcreteGroup, b: ConcreteGroup, order_cap: int = DEFAULT_ORDER_CAP
) -> ConcreteGroup:
    """Componentwise product; pair (x, y) sits at index x*|B| + y."""
    n = a.order * b.order
    _check_cap(n, order_cap)
    table = (
        a.table[:, None, :, None].astype(np.int64) * b.order + b.table[None, :, None, :]
    ).reshape(n, n).astype(np.int32)
    gens = [g * b.order for g in a.generators] + list(b.generators)
    label = f"{a.label} x {b.label}"
    spec = None
    if a.spec is not None and b.spec is not None:
        spec = {
            "constructor": "direct_product",
            "params": {"factors": [a.spec, b.spec]},
            "label": label,
        }
    return ConcreteGroup(table, label=label, generators=gens, spec=spec)


def build_semidirect_table(
    normal: ConcreteGroup,
    acting: ConcreteGroup,
    action: Sequence[Sequence[int]],
    label: str | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> ConcreteGroup:
    """Split extension of `normal` by `acting` along an explicit action.

    action[h] is the image array of the automorphism by which element h of the
    acting group transforms the normal factor.  The map must send every h to a
    genuine automorphism and be a homomorphism; both are validated
    exhaustively.  The pair (a, h) sits at index a*|H| + h, so a trivial
    action reproduces the direct-product table exactly.
    """
    nn, nh = normal.order, acting.order
    _check_cap(nn * nh, order_cap)
    if len(action) != nh:
        raise GroupError(f"action must list one permutation per acting element ({nh})")
    act = np.asarray(
        [_validate_permutation(p, nn) for p in action], dtype=np.int32
    )
    tn, th = normal.table, acting.table
    for h in range(nh):
        p = act[h]
        if not np.array_equal(p[tn], tn[np.ix_(p, p)]):
            raise GroupError(f"action image for element {h} is not an automorphism")
    for h1 in range(nh):
        for h2 in range(nh):
            if not np.array_equal(act[th[h1, h2]], act[h1][act[h2]]):
                raise GroupError(
                    f"action is not a homomorphism at the pair ({h1}, {h2})"
                )
    a1 = np.arange(nn, dtype=np.int64)[:, None, None, None]
    h1 = np.arange(nh, dtype=np.int64)[None, :, None, None]
    a2 = np.arange(nn, dtype=np.int64)[None, None, :, None]
    h2 = np.arange(nh, dtype=np.int64)[None, None, None, :]
    twisted = act[h1, a2]
    apart = tn[a1, twisted]
    hpart = th[h1, h2]
    table = (apart * nh + hpart).reshape(nn * nh, nn * nh).astype(np.int32)
    gens = [g * nh for g in normal.generators] + list(acting.generators)
    if label is None:
        label = f"{normal.label}:{acting.label}"
    spec = None
    if normal.spec is not None and acting.spec is not None:
        spec = {
            "constructor": "semidirect_table",
            "params": {
                "normal": normal.spec,
                "acting": acting.spec,
                "action": [[int(v) for v in p] for p in act],
            },
            "label": label,
        }
    return ConcreteGroup(table, label=label, generators=gens, spec=spec)


def build_from_cayley_table(
    table: Sequence[Sequence[int]],
    label: str = "table-group",
    order_cap: int = DEFAULT_ORDER_CAP,
) -> ConcreteGroup:
    """Group from a raw row-major Cayley table (fully validated)."""
    arr = np.asarray(table, dtype=np.int32)
    if arr.ndim != 2:
        raise GroupError("Cayley table must be a nested row-major array")
    _check_cap(arr.shape[0], order_cap)
    spec = {
        "constructor": "from_cayley_table",
        "params": {"table": [[int(v) for v in row] for row in arr]},
        "label": label,
    }
    return ConcreteGroup(arr, label=label, spec=spec)


_CONSTRUCTORS = (
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion",
    "direct_product",
    "semidirect_cyclic",
    "semidirect_table",
    "from_permutations",
    "from_cayley_table",
)


def from_spec(spec: Mapping, order_cap: int = DEFAULT_ORDER_CAP) -> ConcreteGroup:
    """Build a group from its JSON description {constructor, params, label}."""
    if not isinstance(spec, Mapping):
        raise GroupError(f"group spec must be an object, got {type(spec).__name__}")
    ctor = spec.get("constructor")
    params = spec.get("params", {})
    if ctor not in _CONSTRUCTORS:
        raise GroupError(f"unknown constructor {ctor!r}")
    if not isinstance(params, Mapping):
        raise GroupError("spec params must be an object")
    try:
        if ctor == "cyclic":
            g = build_cyclic(int(params["n"]), order_cap)
        elif ctor == "dihedral":
            g = build_dihedral(int(params["n"]), order_cap)
        elif ctor == "symmetric":
            g = build_symmetric(int(params["degree"]), order_cap)
        elif ctor == "alternating":
            g = build_alternating(int(params["degree"]), order_cap)
        elif ctor == "quaternion":
            g = build_dicyclic(int(params["order"]), order_cap)
        elif ctor == "direct_product":
            factors = params["factors"]
            if not isinstance(factors, Sequence) or len(factors) < 2:
                raise GroupError("direct_product needs at least two factors")
            g = from_spec(factors[0], order_cap)
            for f in factors[1:]:
                g = direct_product(g, from_spec(f, order_cap), order_cap)
        elif ctor == "semidirect_cyclic":
            g = build_semidirect_cyclic(
                int(params["n"]), int(params["m"]), int(params["e"]), order_cap
            )
        elif ctor == "semidirect_table":
            g = build_semidirect_table(
                from_spec(params["normal"], order_cap),
                from_spec(params["acting"], order_cap),
                params["action"],
                order_cap=order_cap,
            )
        elif ctor == "from_permutations":
            g = build_from_permutations(
                int(params["degree"]), params["generators"], order_cap=order_cap
            )
        else:
            g = build_from_cayley_table(params["table"], order_cap=order_cap)
    except KeyError as exc:
        raise GroupError(f"spec for {ctor!r} is missing parameter {exc}") from exc
    label = spec.get("label")
    if label is not None:
        g.label = str(label)
        if g.spec is not None:
            g.spec = dict(g.spec, label=g.label)
    return g
