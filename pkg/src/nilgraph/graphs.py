"""Nilpotent and commuting graphs on a finite group.

Three graphs share one representation: the full nilpotent graph on all
elements (two distinct elements are adjacent when they generate a nilpotent
subgroup), the reduced graph on the elements outside the hypercenter, and the
commuting graph on the non-central elements.  Construction attaches the
connected components and their diameters; unreachable distances are reported
as None, never as a sentinel value.

Pair adjacency is computed once per conjugacy-class representative and
transported along conjugation, with subgroup nilpotency memoized per group, so
repeated graph builds are cheap and byte-deterministic.
"""

from __future__ import annotations

import json

import numpy as np

from .groups import ConcreteGroup, GroupError, closure_elements
from .structure import _classes, _nilpotent_elems, center, hypercenter

KIND_FULL = "nilpotent_full"
KIND_REDUCED = "nilpotent_reduced"
KIND_COMMUTING = "commuting"
KINDS = (KIND_FULL, KIND_REDUCED, KIND_COMMUTING)

EXPORT_FORMATS = ("dot", "json")


def is_nilpotent_pair(group: ConcreteGroup, x: int, y: int) -> bool:
    """Whether x and y generate a nilpotent subgroup."""
    x, y = group._check_index(x), group._check_index(y)
    if group.commutes_table()[x, y]:
        return True
    return _nilpotent_elems(group, closure_elements(group, (x, y)))


def nilpotent_pair_matrix(group: ConcreteGroup) -> np.ndarray:
    """Boolean matrix of nilpotent pairs, diagonal included.

    Rows are computed per conjugacy-class representative and transported to
    the other class members g^-1 x g by relabeling with the conjugation
    permutation.
    """

    def build():
        n = group.order
        from .structure import is_nilpotent, whole_group

        if is_nilpotent(whole_group(group)):
            m = np.ones((n, n), dtype=bool)
            m.setflags(write=False)
            return m
        commutes = group.commutes_table()
        conj = group.conjugation_table()
        m = np.zeros((n, n), dtype=bool)
        for cls in _classes(group):
            row = commutes[cls.rep].copy()
            row[cls.rep] = True
            for y in np.nonzero(~row)[0]:
                row[y] = _nilpotent_elems(
                    group, closure_elements(group, (cls.rep, int(y)))
                )
            for member, g in zip(cls.members, cls.conjugators):
                if member == cls.rep:
                    m[member] = row
                else:
                    out = np.empty(n, dtype=bool)
                    out[conj[g]] = row
                    m[member] = out
        m.setflags(write=False)
        return m

    return group.cache("nilpotent_pairs", build)


def nil_neighborhood(group: ConcreteGroup, x: int) -> np.ndarray:
    """Elements y for which x and y generate a nilpotent subgroup (x included)."""
    x = group._check_index(x)
    return np.nonzero(nilpotent_pair_matrix(group)[x])[0].astype(np.int32)


def _bits_from_rows(adj: np.ndarray) -> list[int]:
    return [
        int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
        for row in adj
    ]


class GroupGraph:
    """An undirected graph on a vertex subset of a group.

    Attributes:
        parent: the underlying group.
        kind: one of the KINDS constants.
        vertices: sorted element indices serving as vertices.
        components: list of sorted element-index arrays, ordered by least vertex.
        diameters: per-component diameter (0 for singletons), aligned with
            components.
    """

    def __init__(self, parent: ConcreteGroup, kind: str, vertices: np.ndarray, adjacency: np.ndarray):
        if kind not in KINDS:
            raise GroupError(f"unknown graph kind {kind!r}")
        vertices = np.asarray(vertices, dtype=np.int32)
        if adjacency.shape != (vertices.size, vertices.size):
            raise GroupError("adjacency shape must match the vertex count")
        if vertices.size:
            if adjacency.diagonal().any():
                raise GroupError("adjacency must be irreflexive")
            if not np.array_equal(adjacency, adjacency.T):
                raise GroupError("adjacency must be symmetric")
        self.parent = parent
        self.kind = kind
        self.vertices = vertices
        self._adj = adjacency
        self._pos = {int(v): i for i, v in enumerate(vertices)}
        self._bits = _bits_from_rows(adjacency)
        self._component_of = np.full(vertices.size, -1, dtype=np.int32)
        self.components: list[np.ndarray] = []
        self.diameters: list[int] = []
        self._analyze()

    # -- construction ------------------------------------------------------

    def _analyze(self) -> None:
        nv = self.vertices.size
        for start in range(nv):
            if self._component_of[start] >= 0:
                continue
            mask, _ = self._bfs(start)
            member_pos = _mask_positions(mask)
            cid = len(self.components)
            self._component_of[member_pos] = cid
            self.components.append(self.vertices[member_pos])
            diam = 0
            for p in member_pos:
                _, ecc = self._bfs(int(p))
                diam = max(diam, ecc)
            self.diameters.append(diam)

    def _bfs(self, start: int) -> tuple[int, int]:
        bits = self._bits
        seen = 1 << start
        frontier = seen
        ecc = 0
        while True:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= bits[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            if not nxt:
                return seen, ecc
            seen |= nxt
            frontier = nxt
            ecc += 1

    # -- queries -------------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return int(self._adj.sum()) // 2

    def _position(self, x: int) -> int:
        try:
            return self._pos[int(x)]
        except KeyError:
            raise GroupError(f"element {x} is not a vertex of this graph") from None

    def component_of(self, x: int) -> int:
        """Index into `components` of the component containing x."""
        return int(self._component_of[self._position(x)])

    def distance(self, x: int, y: int) -> int | None:
        """BFS distance between two vertices; None when unreachable."""
        px, py = self._position(x), self._position(y)
        if px == py:
            return 0
        bits = self._bits
        seen = 1 << px
        frontier = seen
        target = 1 << py
        dist = 0
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= bits[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            dist += 1
            if nxt & target:
                return dist
            seen |= nxt
            frontier = nxt
        return None

    def reachable_within(self, x: int, steps: int) -> np.ndarray:
        """Vertices at distance <= steps from x (x included)."""
        p = self._position(x)
        seen = 1 << p
        frontier = seen
        for _ in range(steps):
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self._bits[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
        return self.vertices[_mask_positions(seen)]

    def adjacency_row(self, x: int) -> np.ndarray:
        """Element indices adjacent to x."""
        return self.vertices[self._adj[self._position(x)]]

    # -- export ----------------------------------------------------------

    def edges(self) -> list[tuple[int, int]]:
        out = []
        nv = self.vertices.size
        for i in range(nv):
            row = self._adj[i]
            for j in np.nonzero(row[i + 1 :])[0]:
                out.append((int(self.vertices[i]), int(self.vertices[i + 1 + j])))
        return out

    def export(self, fmt: str) -> str:
        """Deterministic DOT or JSON rendering of the graph."""
        if fmt == "dot":
            return self._export_dot()
        if fmt == "json":
            return self._export_json()
        raise GroupError(f"unknown export format {fmt!r}")

    def _export_dot(self) -> str:
        orders = self.parent.element_order
        lines = [f'graph "{self.parent.label} {self.kind}" {{']
        for v in self.vertices:
            lines.append(f'  {int(v)} [label="{int(v)} (ord {int(orders[v])})"];')
        for a, b in self.edges():
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def _export_json(self) -> str:
        orders = self.parent.element_order
        doc = {
            "kind": self.kind,
            "vertices": [
                {"index": int(v), "order": int(orders[v])} for v in self.vertices
            ],
            "edges": [[a, b] for a, b in self.edges()],
            "components": [[int(v) for v in comp] for comp in self.components],
            "diameters": [int(d) for d in self.diameters],
        }
        return json.dumps(doc, indent=2) + "\n"

    def __repr__(self) -> str:
        return (
            f"GroupGraph({self.kind}, {self.vertices.size} vertices, "
            f"{len(self.components)} components)"
        )


def _mask_positions(mask: int) -> np.ndarray:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return np.asarray(out, dtype=np.int64)


def build_graph(group: ConcreteGroup, kind: str) -> GroupGraph:
    """Build the requested graph with components and diameters attached."""
    n = group.order
    if kind == KIND_FULL:
        vertices = np.arange(n, dtype=np.int32)
        base = nilpotent_pair_matrix(group)
    elif kind == KIND_REDUCED:
        vertices = np.nonzero(~hypercenter(group).membership)[0].astype(np.int32)
        base = nilpotent_pair_matrix(group)
    elif kind == KIND_COMMUTING:
        vertices = np.nonzero(~center(group).membership)[0].astype(np.int32)
        base = group.commutes_table()
    else:
        raise GroupError(f"unknown graph kind {kind!r}")
    adj = base[np.ix_(vertices, vertices)].copy()
    if vertices.size:
        np.fill_diagonal(adj, False)
    return GroupGraph(group, kind, vertices, adj)


def universal_vertices(graph: GroupGraph) -> np.ndarray:
    """Vertices adjacent to every other vertex (full nilpotent graph only)."""
    if graph.kind != KIND_FULL:
        raise GroupError("universal vertices are defined on the full nilpotent graph")
    nv = graph.vertices.size
    if nv == 0:
        return graph.vertices.copy()
    degrees = graph._adj.sum(axis=1)
    return graph.vertices[degrees == nv - 1]


def graphs_equal(a: GroupGraph, b: GroupGraph) -> bool:
    """Same vertex set and same edge set."""
    return np.array_equal(a.vertices, b.vertices) and np.array_equal(a._adj, b._adj)
