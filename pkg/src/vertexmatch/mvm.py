"""Vertex-weighted matching: the 2/3-approximation, the exact algorithm and Greedy Half.

All three process vertices heaviest first (ties by ascending id) and only
ever grow the matched vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from vertexmatch import _kernels
from vertexmatch.graph import Matching, SortedGraph


@dataclass(frozen=True)
class AugmentingPath:
    """Alternating path from ``origin`` to ``terminus``, both unmatched before the flip."""

    vertices: tuple[int, ...]

    @property
    def origin(self) -> int:
        return self.vertices[0]

    @property
    def terminus(self) -> int:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def _paths(log: np.ndarray, offsets: np.ndarray) -> list[AugmentingPath]:
    return [AugmentingPath(tuple(int(x) for x in log[a:b]))
            for a, b in zip(offsets[:-1], offsets[1:])]


def _two_thirds(sg: SortedGraph, record: bool):
    mate = np.full(sg.vertex_count, -1, dtype=np.int64)
    log, offsets = _kernels.two_thirds(sg.indptr, sg.adj, sg.order, sg.rank,
                                       sg.weights.values, mate, sg.fresh_cursor(), record)
    return Matching(mate), log, offsets


def two_thirds_mvm(sg: SortedGraph) -> Matching:
    """2/3-approximate MVM using augmenting paths of length at most three.

    Each unmatched vertex, taken heaviest first, is matched to the heaviest
    unmatched vertex reachable by a path of length one (a direct neighbour)
    or three (through a matched neighbour and its mate).  A vertex with no
    such path is skipped for good, though it may still be picked up later as
    the terminus of another vertex's path.  When the direct neighbour and a
    length-3 terminus weigh the same, the direct edge is taken.  Runs in O(m log Δ + n log n)
    including the construction of ``sg``.
    """
    return _two_thirds(sg, False)[0]


def two_thirds_trace(sg: SortedGraph) -> tuple[Matching, list[AugmentingPath]]:
    m, log, offsets = _two_thirds(sg, True)
    return m, _paths(log, offsets)


def _exact(sg: SortedGraph, visited_marks: bool, early_stop: bool, record: bool):
    mate = np.full(sg.vertex_count, -1, dtype=np.int64)
    log, offsets, _, _ = _kernels.exact(sg.indptr, sg.adj, sg.order, sg.rank,
                                        sg.weights.values, mate,
                                        visited_marks, early_stop, record)
    return Matching(mate), log, offsets


def exact_mvm(sg: SortedGraph, *, visited_marks: bool = True,
              early_stop: bool = True) -> Matching:
    """Maximum vertex-weighted matching.

    From each unmatched vertex, heaviest first, an Edmonds alternating tree
    (with blossom contraction) collects every unmatched vertex reachable by
    an augmenting path; the matching is augmented towards the heaviest one.
    The result has a lexicographically maximum weight vector and maximum
    cardinality.

    ``visited_marks``: after a failed search every vertex of its tree is
    skipped by later searches until the next augmentation.

    ``early_stop``: a search ends as soon as it reaches a terminus as heavy as
    the heaviest unmatched vertex later in the processing order, since no
    heavier terminus can exist.
    """
    return _exact(sg, visited_marks, early_stop, False)[0]


def exact_trace(sg: SortedGraph, *, visited_marks: bool = True,
                early_stop: bool = True) -> tuple[Matching, list[AugmentingPath]]:
    m, log, offsets = _exact(sg, visited_marks, early_stop, True)
    return m, _paths(log, offsets)


def half_mvm(sg: SortedGraph) -> Matching:
    """Greedy 1/2-approximation: match each unmatched vertex to its heaviest unmatched neighbour."""
    mate = np.full(sg.vertex_count, -1, dtype=np.int64)
    _kernels.half(sg.indptr, sg.adj, sg.order, mate, sg.fresh_cursor())
    return Matching(mate)


def replay(n: int, paths: list[AugmentingPath], has_edge) -> Matching:
    """Apply ``paths`` to the empty matching, checking each step.

    Raises ``AssertionError`` if a path is not an augmenting path for the
    matching built so far or if a matched vertex would become unmatched.
    """
    m = Matching.empty(n)
    for path in paths:
        vs = path.vertices
        assert len(vs) % 2 == 0 and len(set(vs)) == len(vs), vs
        assert not m.is_matched(vs[0]) and not m.is_matched(vs[-1]), vs
        for k in range(len(vs) - 1):
            assert has_edge(vs[k], vs[k + 1]), vs
            if k % 2:
                assert m.partner[vs[k]] == vs[k + 1], vs
        before = set(m.matched_vertices().tolist())
        for k in range(0, len(vs), 2):
            m.partner[vs[k]] = vs[k + 1]
            m.partner[vs[k + 1]] = vs[k]
        assert before <= set(m.matched_vertices().tolist())
    return m
