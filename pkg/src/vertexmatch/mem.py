"""Edge-weighted matching algorithms used for comparison.

Includes the vertex-to-edge weight reduction, Greedy, the Global Paths
Algorithm (GPA), and the (2/3 - eps) local improvement scheme built on
2-augmentations, in Random and Round-Robin flavours.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from vertexmatch.graph import NONE, Graph, Matching, WeightAssignment


class EdgeWeightedGraph:
    """A :class:`Graph` with one non-negative weight per row of ``graph.edges``."""

    def __init__(self, graph: Graph, weights):
        weights = np.asarray(weights)
        if weights.shape != (graph.edge_count,):
            raise ValueError(f"{weights.size} weights for {graph.edge_count} edges")
        if weights.size and weights.min() < 0:
            raise ValueError("edge weights must be non-negative")
        self.graph = graph
        self.integral = np.issubdtype(weights.dtype, np.integer)
        self.weights = weights.astype(np.int64 if self.integral else np.float64)
        self._nbrs = None
        self._wmap = None

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def _number(self, x):
        return int(x) if self.integral else float(x)

    @property
    def nbrs(self) -> list[list[tuple[int, int | float]]]:
        """Per-vertex ``(neighbour, edge weight)`` lists in neighbour id order."""
        if self._nbrs is None:
            nbrs = [[] for _ in range(self.vertex_count)]
            for (u, v), x in zip(self.graph.edges.tolist(), self.weights.tolist()):
                nbrs[u].append((v, x))
                nbrs[v].append((u, x))
            for lst in nbrs:
                lst.sort()
            self._nbrs = nbrs
        return self._nbrs

    @property
    def weight_map(self) -> dict[tuple[int, int], int | float]:
        if self._wmap is None:
            self._wmap = {(u, v): x for (u, v), x in
                          zip(self.graph.edges.tolist(), self.weights.tolist())}
        return self._wmap

    def weight(self, u: int, v: int):
        """Weight of edge ``{u, v}``, or ``None`` if absent."""
        return self.weight_map.get((u, v) if u < v else (v, u))

    def matching_weight(self, m: Matching):
        return sum((self.weight(u, v) for u, v in m.pairs()), self._number(0))


def mvm_to_mem(g: Graph, w: WeightAssignment) -> EdgeWeightedGraph:
    """Give each edge the sum of its endpoint weights."""
    if len(w) != g.vertex_count:
        raise ValueError("weights do not match the graph")
    vals = w.values
    return EdgeWeightedGraph(g, vals[g.edges[:, 0]] + vals[g.edges[:, 1]])


def _edge_order(eg: EdgeWeightedGraph) -> np.ndarray:
    # weight descending, then (min id, max id) ascending
    e = eg.graph.edges
    return np.lexsort((e[:, 1], e[:, 0], -eg.weights))


def greedy_mem(eg: EdgeWeightedGraph) -> Matching:
    """Take edges heaviest first whenever both endpoints are still free."""
    mate = [NONE] * eg.vertex_count
    edges = eg.graph.edges.tolist()
    for k in _edge_order(eg).tolist():
        u, v = edges[k]
        if mate[u] == NONE and mate[v] == NONE:
            mate[u], mate[v] = v, u
    return Matching(mate)


# --- Global Paths Algorithm -------------------------------------------------

def _path_dp(weights: list) -> list[int]:
    """Indices of a maximum-weight set of pairwise non-adjacent path edges.

    Ties go to the larger set so that a non-empty path always yields an edge.
    """
    k = len(weights)
    best = [(0, 0)] * (k + 1)
    take = [False] * (k + 1)
    for i in range(1, k + 1):
        skip = best[i - 1]
        prev = best[i - 2] if i >= 2 else (0, 0)
        took = (prev[0] + weights[i - 1], prev[1] + 1)
        if took >= skip:
            best[i], take[i] = took, True
        else:
            best[i] = skip
    chosen = []
    i = k
    while i > 0:
        if take[i]:
            chosen.append(i - 1)
            i -= 2
        else:
            i -= 1
    return chosen[::-1]


def _dp_value(weights, idx):
    return (sum(weights[i] for i in idx), len(idx))


def gpa_mem(eg: EdgeWeightedGraph, *, check: bool = False) -> Matching:
    """Global Paths Algorithm.

    Each round scans the remaining edges heaviest first and keeps an edge
    when the kept set stays a disjoint union of paths and even cycles.  Every
    path and cycle is then solved exactly by dynamic programming; matched
    vertices and their edges are removed and the next round starts on what
    is left.  With ``check`` the path/cycle structure is validated after
    every accepted edge.
    """
    n = eg.vertex_count
    edges = eg.graph.edges.tolist()
    wts = eg.weights.tolist()
    mate = [NONE] * n
    remaining = _edge_order(eg).tolist()
    while remaining:
        parent = list(range(n))
        size = {}
        deg = [0] * n
        link: list[list[int]] = [[] for _ in range(n)]  # edge ids at each vertex
        closing = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in remaining:
            u, v = edges[e]
            if deg[u] >= 2 or deg[v] >= 2:
                continue
            ru, rv = find(u), find(v)
            if ru == rv:
                if size.get(ru, 0) % 2 == 0:
                    continue  # would close an odd cycle
                closing[ru] = e
            else:
                parent[ru] = rv
                size[rv] = size.get(rv, 0) + size.pop(ru, 0) + 1
            deg[u] += 1
            deg[v] += 1
            link[u].append(e)
            link[v].append(e)
            if check:
                _check_paths_and_cycles(n, edges, link)

        seen = [False] * n
        for start in range(n):
            if seen[start] or deg[start] == 0:
                continue
            root = find(start)
            if root in closing:
                if deg[start] != 2:
                    continue
                c = closing[root]
                a, b = edges[c]
                seq = _walk(a, b, edges, link, seen, skip_edge=c)
                path_ws = [wts[e] for e in seq]
                first = _path_dp(path_ws)                   # closing edge left out
                rot = seq[1:] + [c]                         # first edge left out
                rot_ws = [wts[e] for e in rot]
                second = _path_dp(rot_ws)
                if _dp_value(path_ws, first) >= _dp_value(rot_ws, second):
                    picked = [seq[i] for i in first]
                else:
                    picked = [rot[i] for i in second]
            else:
                if deg[start] != 1:
                    continue
                seq = _walk(start, None, edges, link, seen)
                picked = [seq[i] for i in _path_dp([wts[e] for e in seq])]
            for e in picked:
                u, v = edges[e]
                mate[u], mate[v] = v, u
        remaining = [e for e in remaining
                     if mate[edges[e][0]] == NONE and mate[edges[e][1]] == NONE]
    return Matching(mate)


def _walk(start, stop, edges, link, seen, skip_edge=None):
    """Edge ids along the path from ``start``; marks visited vertices."""
    seq = []
    prev_edge = skip_edge
    x = start
    seen[x] = True
    while True:
        nxt = [e for e in link[x] if e != prev_edge]
        if not nxt:
            break
        e = nxt[0]
        seq.append(e)
        u, v = edges[e]
        x = v if u == x else u
        seen[x] = True
        prev_edge = e
        if x == stop or x == start:
            break
    return seq


def _check_paths_and_cycles(n, edges, link):
    seen = [False] * n
    for s in range(n):
        if seen[s] or not link[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for e in link[x]:
                u, v = edges[e]
                y = v if u == x else u
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        degs = [len(link[x]) for x in comp]
        n_edges = sum(degs) // 2
        assert max(degs) <= 2, "vertex of degree > 2 in path structure"
        if n_edges == len(comp):
            assert n_edges % 2 == 0, "odd cycle in path structure"
        else:
            assert n_edges == len(comp) - 1, "component is neither a path nor a cycle"


# --- 2-augmentations ----------------------------------------------------------

@dataclass(frozen=True)
class Arm:
    """``(v, u)`` with ``u`` free, or ``(v, u, u2)`` with ``(u, u2)`` matched."""

    vertices: tuple[int, ...]
    gain: int | float

    @property
    def group(self) -> int:
        # arms sharing a group touch the same free vertex or matched edge
        return min(self.vertices[1:])

    @property
    def edge_in(self) -> tuple[int, int]:
        v, u = self.vertices[:2]
        return (min(v, u), max(v, u))

    @property
    def edges_out(self) -> tuple[tuple[int, int], ...]:
        if len(self.vertices) == 2:
            return ()
        u, u2 = self.vertices[1:]
        return ((min(u, u2), max(u, u2)),)


KIND_ORDER = {"cycle4": 0, "path-join": 1, "arm-apply": 2}


@dataclass(frozen=True)
class TwoAugmentation:
    kind: str
    edges_in: tuple[tuple[int, int], ...]
    edges_out: tuple[tuple[int, int], ...]
    gain: int | float

    def sort_key(self):
        return (-self.gain, KIND_ORDER[self.kind], self.edges_in, self.edges_out)

    def apply(self, partner) -> None:
        """Apply in place to a partner list or array."""
        for u, v in self.edges_out:
            partner[u] = partner[v] = NONE
        for u, v in self.edges_in:
            partner[u], partner[v] = v, u


def _arms(x, block, mate, nbrs, wmap):
    out = []
    for u, wxu in nbrs[x]:
        if u == block:
            continue
        u2 = mate[u]
        if u2 == NONE:
            out.append(Arm((x, u), wxu))
        elif u2 != x:
            out.append(Arm((x, u, u2), wxu - wmap[(u, u2) if u < u2 else (u2, u)]))
    return out


def _top_two(arms):
    """Best arm, and best arm from a different group (either may be None)."""
    ranked = sorted(arms, key=lambda a: (-a.gain, a.vertices))
    if not ranked:
        return None, None
    first = ranked[0]
    second = next((a for a in ranked[1:] if a.group != first.group), None)
    return first, second


def _edge(a, b):
    return (a, b) if a < b else (b, a)


def _best_at(v, mate, nbrs, wmap) -> Optional[TwoAugmentation]:
    cands = []
    v2 = mate[v]
    if v2 == NONE:
        for arm in _arms(v, NONE, mate, nbrs, wmap):
            if arm.gain > 0:
                cands.append(TwoAugmentation("arm-apply", (arm.edge_in,), arm.edges_out, arm.gain))
    else:
        wvv = wmap[_edge(v, v2)]
        for a, w2a in nbrs[v2]:
            b = mate[a]
            if a == v or b == NONE or b == v:
                continue
            wbv = wmap.get(_edge(b, v))
            if wbv is None:
                continue
            gain = w2a + wbv - wvv - wmap[_edge(a, b)]
            if gain > 0:
                cands.append(TwoAugmentation(
                    "cycle4", tuple(sorted((_edge(v2, a), _edge(b, v)))),
                    tuple(sorted((_edge(v, v2), _edge(a, b)))), gain))
        p_opts = [a for a in _top_two(_arms(v, v2, mate, nbrs, wmap)) if a] + [None]
        q_opts = [a for a in _top_two(_arms(v2, v, mate, nbrs, wmap)) if a] + [None]
        for p in p_opts:
            for q in q_opts:
                if p is None and q is None:
                    continue
                if p is not None and q is not None and p.group == q.group:
                    continue
                gain = (p.gain if p else 0) + (q.gain if q else 0) - wvv
                if gain > 0:
                    e_in = tuple(sorted(a.edge_in for a in (p, q) if a))
                    e_out = tuple(sorted([_edge(v, v2)] + [e for a in (p, q) if a
                                                           for e in a.edges_out]))
                    cands.append(TwoAugmentation("path-join", e_in, e_out, gain))
    return min(cands, key=TwoAugmentation.sort_key) if cands else None


def best_two_augmentation(eg: EdgeWeightedGraph, m: Matching, v: int) -> Optional[TwoAugmentation]:
    """Highest positive-gain 2-augmentation centred at ``v``, or ``None``.

    Unmatched ``v``: the best arm.  ``v`` matched to ``v2``: the best of the
    alternating 4-cycles through ``(v, v2)`` and the paths formed by an arm
    of ``v``, the edge ``(v, v2)`` and an arm of ``v2`` (either arm may be
    empty).  The two best group-disjoint arms on each side are combined,
    which always contains the best vertex-disjoint pair.
    """
    return _best_at(v, m.partner.tolist(), eg.nbrs, eg.weight_map)


def phase_count(epsilon: float) -> int:
    """``ceil(ln(1/epsilon) / 3)``, the number of improvement phases."""
    if not 0 < epsilon < 2 / 3:
        raise ValueError("epsilon must lie in (0, 2/3)")
    return max(1, math.ceil(math.log(1 / epsilon) / 3))


class ImproveRun(NamedTuple):
    matching: Matching
    phases: int
    applied: int


def _start(eg, m0, epsilon):
    k = phase_count(epsilon)
    if m0 is None:
        m0 = Matching.empty(eg.vertex_count)
    if m0.vertex_count != eg.vertex_count:
        raise ValueError("initial matching does not fit the graph")
    return k, m0.partner.tolist()


def random_improve_run(eg: EdgeWeightedGraph, m0: Optional[Matching], epsilon: float,
                       seed: int) -> ImproveRun:
    k, mate = _start(eg, m0, epsilon)
    n = eg.vertex_count
    rng = np.random.default_rng(seed)
    nbrs, wmap = eg.nbrs, eg.weight_map
    applied = 0
    picks = rng.integers(0, n, size=n * k).tolist() if n else []
    for v in picks:
        aug = _best_at(v, mate, nbrs, wmap)
        if aug is not None:
            aug.apply(mate)
            applied += 1
    return ImproveRun(Matching(mate), k, applied)


def random_improve_mem(eg: EdgeWeightedGraph, m0: Optional[Matching], epsilon: float,
                       seed: int) -> Matching:
    """Apply the best 2-augmentation at ``n * phase_count(epsilon)`` uniformly random vertices."""
    return random_improve_run(eg, m0, epsilon, seed).matching


def round_robin_run(eg: EdgeWeightedGraph, m0: Optional[Matching], epsilon: float,
                    seed: int) -> ImproveRun:
    k, mate = _start(eg, m0, epsilon)
    rng = np.random.default_rng(seed)
    nbrs, wmap = eg.nbrs, eg.weight_map
    applied = 0
    phases = 0
    for _ in range(k):
        phases += 1
        before = applied
        for v in rng.permutation(eg.vertex_count).tolist():
            aug = _best_at(v, mate, nbrs, wmap)
            if aug is not None:
                aug.apply(mate)
                applied += 1
        if applied == before:
            break
    return ImproveRun(Matching(mate), phases, applied)


def round_robin_improve_mem(eg: EdgeWeightedGraph, m0: Optional[Matching], epsilon: float,
                            seed: int) -> Matching:
    """Up to ``phase_count(epsilon)`` sweeps over fresh random vertex permutations.

    Stops early after a sweep that applies nothing.  Started from the empty
    matching this is the RR variant; started from :func:`gpa_mem` it is GPA-RR.
    """
    return round_robin_run(eg, m0, epsilon, seed).matching
