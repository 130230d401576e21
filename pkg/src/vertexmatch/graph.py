"""Graphs, vertex weights, matchings and the weight-sorted adjacency structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from vertexmatch import _kernels

NONE = -1


class DimensionError(ValueError):
    """Raised when a weight assignment does not fit its graph."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``.

    ``edges`` is an ``(m, 2)`` int64 array with ``u < v`` in every row and
    rows in lexicographic order.  Use :meth:`from_pairs` to build one from
    raw input; it drops self-loops and duplicate pairs and records how many
    were dropped.
    """

    vertex_count: int
    edges: np.ndarray
    dropped_self_loops: int = 0
    dropped_duplicates: int = 0
    _csr: list = field(default_factory=list, repr=False, compare=False)

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs) -> "Graph":
        n = int(vertex_count)
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        arr = np.asarray(pairs, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("pairs must be a sequence of (u, v) tuples")
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise ValueError(f"edge endpoint out of range [0, {n})")
        loops = arr[:, 0] == arr[:, 1]
        n_loops = int(loops.sum())
        arr = arr[~loops]
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        codes = np.unique(lo * n + hi) if n else np.empty(0, np.int64)
        edges = np.empty((codes.size, 2), dtype=np.int64)
        if n:
            edges[:, 0] = codes // n
            edges[:, 1] = codes % n
        return cls(n, edges, n_loops, int(arr.shape[0] - codes.size))

    @property
    def edge_count(self) -> int:
        return int(self.edges.shape[0])

    def adjacency(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR adjacency ``(indptr, indices)`` with neighbours in id order."""
        if not self._csr:
            n = self.vertex_count
            src = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
            dst = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
            perm = np.argsort(src * max(n, 1) + dst, kind="stable")
            indptr = np.zeros(n + 1, dtype=np.int64)
            np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
            self._csr.extend([indptr, dst[perm]])
        return self._csr[0], self._csr[1]

    def neighbors(self, v: int) -> np.ndarray:
        indptr, indices = self.adjacency()
        return indices[indptr[v]:indptr[v + 1]]

    def degrees(self) -> np.ndarray:
        indptr, _ = self.adjacency()
        return np.diff(indptr)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
            return False
        nb = self.neighbors(min(u, v))
        i = np.searchsorted(nb, max(u, v))
        return bool(i < nb.size and nb[i] == max(u, v))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


@dataclass(frozen=True, eq=False)
class WeightAssignment:
    """Non-negative vertex weights in ``int`` (int64) or ``real`` (float64) mode."""

    mode: str
    values: np.ndarray

    def __post_init__(self):
        if self.mode not in ("int", "real"):
            raise ValueError(f"unknown weight mode {self.mode!r}")
        dtype = np.int64 if self.mode == "int" else np.float64
        values = np.ascontiguousarray(self.values, dtype=dtype)
        if values.ndim != 1:
            raise ValueError("weights must be one-dimensional")
        if self.mode == "real" and np.isnan(values).any():
            raise ValueError("weights must not be NaN")
        if values.size and values.min() < 0:
            raise ValueError("weights must be non-negative")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, values: Sequence) -> "WeightAssignment":
        """Infer the mode: integer-valued input gives ``int`` mode."""
        arr = np.asarray(values)
        mode = "int" if arr.size == 0 or np.issubdtype(arr.dtype, np.integer) else "real"
        return cls(mode, arr)

    def __len__(self) -> int:
        return int(self.values.size)

    def __getitem__(self, v):
        return self.values[v]

    def total(self, vertices: Iterable[int]):
        """Exact sum of the weights of ``vertices`` as a Python number."""
        idx = np.fromiter(vertices, dtype=np.int64)
        if self.mode == "int":
            return int(self.values[idx].sum())
        return float(np.sum(self.values[idx]))


class Matching:
    """Partner array: ``partner[v]`` is the mate of ``v`` or ``NONE`` (-1)."""

    __slots__ = ("partner",)

    def __init__(self, partner):
        self.partner = np.asarray(partner, dtype=np.int64)

    @classmethod
    def empty(cls, vertex_count: int) -> "Matching":
        return cls(np.full(vertex_count, NONE, dtype=np.int64))

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Iterable[tuple[int, int]]) -> "Matching":
        """Build from matched pairs.  Does not validate; see ``verify_matching``."""
        m = cls.empty(vertex_count)
        for u, v in pairs:
            m.partner[u] = v
            m.partner[v] = u
        return m

    @property
    def vertex_count(self) -> int:
        return int(self.partner.size)

    @property
    def cardinality(self) -> int:
        return int(np.count_nonzero(self.partner != NONE)) // 2

    def mate(self, v: int) -> Optional[int]:
        p = int(self.partner[v])
        return None if p == NONE else p

    def is_matched(self, v: int) -> bool:
        return self.partner[v] != NONE

    def matched_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.partner != NONE)

    def pairs(self) -> list[tuple[int, int]]:
        """Matched pairs ``(u, v)`` with ``u < v``, sorted."""
        u = np.flatnonzero(self.partner > np.arange(self.partner.size))
        return [(int(a), int(b)) for a, b in zip(u, self.partner[u])]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs())

    def copy(self) -> "Matching":
        return Matching(self.partner.copy())

    def __eq__(self, other) -> bool:
        return isinstance(other, Matching) and np.array_equal(self.partner, other.partner)

    def __repr__(self) -> str:
        return f"Matching(cardinality={self.cardinality}, n={self.vertex_count})"


def vertex_order(weights: WeightAssignment) -> np.ndarray:
    """Vertices sorted by weight non-increasing, ties by ascending id."""
    n = len(weights)
    return np.lexsort((np.arange(n), -weights.values)).astype(np.int64)


@dataclass(eq=False)
class SortedGraph:
    """Adjacency lists sorted heaviest-neighbour first, plus HUN cursors.

    ``rank[v]`` is the position of ``v`` in the global weight order
    (weight descending, id ascending); lower rank means heavier, so sorting
    a neighbour list by rank gives the required per-vertex order.
    ``cursor[v]`` is an offset into the list of ``v``: every neighbour before
    it is known to be matched.
    """

    graph: Graph
    weights: WeightAssignment
    indptr: np.ndarray
    adj: np.ndarray
    order: np.ndarray
    rank: np.ndarray
    cursor: np.ndarray

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def max_degree(self) -> int:
        return int(np.diff(self.indptr).max()) if self.vertex_count else 0

    def sorted_neighbors(self, v: int) -> np.ndarray:
        return self.adj[self.indptr[v]:self.indptr[v + 1]]

    def fresh_cursor(self) -> np.ndarray:
        return np.zeros(self.vertex_count, dtype=np.int64)

    def reset_cursors(self) -> None:
        self.cursor[:] = 0


def build_sorted_graph(g: Graph, w: WeightAssignment) -> SortedGraph:
    if len(w) != g.vertex_count:
        raise DimensionError(
            f"{len(w)} weights for a graph with {g.vertex_count} vertices")
    n = g.vertex_count
    order = vertex_order(w)
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n, dtype=np.int64)
    src = np.concatenate([g.edges[:, 0], g.edges[:, 1]])
    dst = np.concatenate([g.edges[:, 1], g.edges[:, 0]])
    # one global sort on (source, neighbour rank) sorts every list at once
    perm = np.argsort(src * max(n, 1) + rank[dst])
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return SortedGraph(g, w, indptr, dst[perm], order, rank,
                       np.zeros(n, dtype=np.int64))


def heaviest_unmatched_neighbor(sg: SortedGraph, v: int, m: Matching,
                                exclude: Optional[int] = None) -> Optional[int]:
    """First neighbour of ``v`` in sorted order that is unmatched and not ``exclude``.

    Advances ``sg.cursor[v]`` past matched neighbours only, never past
    ``exclude``.  This is sound only while matched vertices stay matched,
    which holds for the augmenting-path algorithms in this package; callers
    that unmatch vertices must not use the cursor.
    """
    x = _kernels.hun(sg.indptr, sg.adj, sg.cursor, m.partner, v,
                     NONE if exclude is None else exclude)
    return None if x == NONE else int(x)
