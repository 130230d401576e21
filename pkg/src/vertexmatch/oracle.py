"""Brute-force optima, optimality checks and matching statistics.

Everything here is plain Python and shares no code with the compiled
algorithms, so it can serve as ground truth for them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional

from vertexmatch.graph import NONE, Graph, Matching, WeightAssignment

ORACLE_LIMIT = 16

WeightVector = tuple


class OracleLimitError(ValueError):
    pass


def weight_vector(m: Matching, w: WeightAssignment) -> WeightVector:
    """Weights of the matched vertices, non-increasing."""
    vals = w.values[m.matched_vertices()]
    return tuple(sorted(vals.tolist(), reverse=True))


def _exact_total(values) -> int | Fraction:
    return sum((v if isinstance(v, int) else Fraction(v) for v in values), 0)


def exact_weight(m: Matching, w: WeightAssignment) -> int | Fraction:
    """Matched weight without rounding: an int, or a Fraction in real mode."""
    return _exact_total(weight_vector(m, w))


@dataclass(frozen=True)
class MatchStats:
    """``cardinality`` counts matched edges; ``weight_vector`` has twice as many entries."""

    weight: int | float
    cardinality: int
    weight_vector: WeightVector
    gap_percent: Optional[float] = None


def stats(m: Matching, w: WeightAssignment, optimal=None) -> MatchStats:
    """Weight, cardinality, weight vector and ``100 (1 - weight / optimal)``.

    The gap is left as ``None`` when no optimum is given, or when the optimum
    is zero but the matching is not.
    """
    vec = weight_vector(m, w)
    exact = _exact_total(vec)
    weight = int(exact) if w.mode == "int" else float(exact)
    gap = None
    if optimal is not None:
        opt = optimal if isinstance(optimal, int) else Fraction(optimal)
        if opt == 0:
            gap = 0.0 if exact == 0 else None
        else:
            gap = float(100 * (1 - Fraction(exact) / Fraction(opt)))
    return MatchStats(weight, len(vec) // 2, vec, gap)


def verify_matching(g: Graph, m: Matching) -> bool:
    """Symmetric partner map, no self-matches, every matched pair an edge."""
    partner = m.partner
    n = g.vertex_count
    if partner.shape != (n,):
        return False
    for u in range(n):
        v = int(partner[u])
        if v == NONE:
            continue
        if not 0 <= v < n or v == u or partner[v] != u or not g.has_edge(u, v):
            return False
    return True


# --- vertex-weighted oracle -------------------------------------------------

def _check_limit(n: int, limit: int) -> None:
    if n > limit:
        raise OracleLimitError(f"{n} vertices exceeds the oracle limit of {limit}")


def _best_vertex_value(n, order, nbrs, value):
    """Branch and bound for the matching maximising an additive vertex value.

    Vertices are decided in ``order``: matched to a still-undecided
    neighbour, or left out.  The bound is the value collected so far plus the
    value of every undecided vertex that still has an undecided neighbour.
    """
    UNDECIDED, MATCHED, OUT = 0, 1, 2
    status = [UNDECIDED] * n
    partner = [NONE] * n
    best = [None, None]

    def bound(idx):
        total = 0
        for k in range(idx, n):
            x = order[k]
            if status[x] == UNDECIDED and any(status[y] == UNDECIDED for y in nbrs[x]):
                total += value[x]
        return total

    def dfs(idx, current):
        while idx < n and status[order[idx]] != UNDECIDED:
            idx += 1
        if best[0] is not None and current + bound(idx) <= best[0]:
            return
        if idx == n:
            best[0] = current
            best[1] = list(partner)
            return
        v = order[idx]
        for u in nbrs[v]:
            if status[u] == UNDECIDED:
                status[v] = status[u] = MATCHED
                partner[v], partner[u] = u, v
                dfs(idx + 1, current + value[v] + value[u])
                status[v] = status[u] = UNDECIDED
                partner[v] = partner[u] = NONE
        status[v] = OUT
        dfs(idx + 1, current)
        status[v] = UNDECIDED

    dfs(0, 0)
    return best[0], best[1]


class MVMOracle(NamedTuple):
    matching: Matching
    vector: WeightVector
    max_weight: int | float
    max_cardinality: int


def oracle_mvm(g: Graph, w: WeightAssignment, limit: int = ORACLE_LIMIT) -> MVMOracle:
    """Exhaustive MVM: a matching with the lexicographically maximum weight vector.

    Lexicographic order on sorted weight vectors equals numeric order on
    ``sum((n + 1) ** class(v))`` over matched vertices, where ``class`` ranks
    the distinct weight values, so one additive branch and bound suffices.
    Maximum weight and maximum cardinality are computed by separate searches
    and checked against the lex-max matching.
    """
    n = g.vertex_count
    _check_limit(n, limit)
    if len(w) != n:
        raise ValueError("weights do not match the graph")
    weights = w.values.tolist()
    nbrs = [g.neighbors(v).tolist() for v in range(n)]
    order = sorted(range(n), key=lambda v: (-weights[v], v))
    distinct = sorted(set(weights))
    cls = {x: k for k, x in enumerate(distinct)}
    lex_value = [(n + 1) ** cls[x] for x in weights]

    _, partner = _best_vertex_value(n, order, nbrs, lex_value)
    matching = Matching(partner)
    vector = weight_vector(matching, w)

    exact_weights = [x if w.mode == "int" else Fraction(x) for x in weights]
    max_w, _ = _best_vertex_value(n, order, nbrs, exact_weights)
    max_c, _ = _best_vertex_value(n, order, nbrs, [1] * n)
    max_c //= 2
    assert _exact_total(vector) == max_w, "lex-max matching must have maximum weight"
    if all(x > 0 for x in weights):
        assert len(vector) == 2 * max_c, "lex-max matching must have maximum cardinality"
    max_weight = int(max_w) if w.mode == "int" else float(max_w)
    return MVMOracle(matching, vector, max_weight, max_c)


def all_matchings(g: Graph) -> Iterator[Matching]:
    """Every matching of ``g``, including the empty one.  No pruning."""
    n = g.vertex_count
    edges = [tuple(map(int, e)) for e in g.edges]
    partner = [NONE] * n

    def rec(k):
        if k == len(edges):
            yield Matching(list(partner))
            return
        yield from rec(k + 1)
        u, v = edges[k]
        if partner[u] == NONE and partner[v] == NONE:
            partner[u], partner[v] = v, u
            yield from rec(k + 1)
            partner[u] = partner[v] = NONE

    yield from rec(0)


def naive_lexmax_vector(g: Graph, w: WeightAssignment) -> WeightVector:
    return max(weight_vector(m, w) for m in all_matchings(g))


# --- edge-weighted oracle ---------------------------------------------------

def oracle_mem(eg, limit: int = ORACLE_LIMIT) -> tuple[Matching, int | float]:
    """Exhaustive maximum edge-weight matching of an ``EdgeWeightedGraph``."""
    g = eg.graph
    n = g.vertex_count
    _check_limit(n, limit)
    exact = [int(x) if eg.integral else Fraction(float(x)) for x in eg.weights]
    nbrs: list[list[tuple[int, object]]] = [[] for _ in range(n)]
    for (u, v), x in zip(g.edges.tolist(), exact):
        nbrs[u].append((v, x))
        nbrs[v].append((u, x))
    heaviest = [max((x for _, x in nb), default=0) for nb in nbrs]
    free = [True] * n
    partner = [NONE] * n
    best = [None, None]

    def dfs(v, current, slack):
        # slack = sum of heaviest incident weight over free vertices >= v
        while v < n and not free[v]:
            v += 1
        if best[0] is not None and 2 * current + slack <= 2 * best[0]:
            return
        if v == n:
            best[0], best[1] = current, list(partner)
            return
        free[v] = False
        for u, x in nbrs[v]:
            if free[u]:
                free[u] = False
                partner[u], partner[v] = v, u
                dfs(v + 1, current + x, slack - heaviest[v] - heaviest[u])
                partner[u] = partner[v] = NONE
                free[u] = True
        dfs(v + 1, current, slack - heaviest[v])
        free[v] = True

    dfs(0, 0, sum(heaviest))
    value = int(best[0]) if eg.integral else float(best[0])
    return Matching(best[1]), value


# --- augmenting paths -------------------------------------------------------

def _search_from(root: int, nbrs: list[list[int]], mate: list[int]) -> bool:
    """Edmonds search with blossom shrinking; True if an augmenting path exists."""
    n = len(mate)
    base = list(range(n))
    parent = [NONE] * n
    used = [False] * n
    used[root] = True
    q = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == NONE:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while q:
        v = q.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != NONE and parent[mate[to]] != NONE):
                b = lca(v, to)
                blossom = [False] * n
                mark(v, b, to, blossom)
                mark(to, b, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = b
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif parent[to] == NONE:
                parent[to] = v
                if mate[to] == NONE:
                    return True
                used[mate[to]] = True
                q.append(mate[to])
    return False


def has_augmenting_path(g: Graph, m: Matching) -> bool:
    """True iff some alternating path joins two unmatched vertices."""
    nbrs = [g.neighbors(v).tolist() for v in range(g.vertex_count)]
    mate = m.partner.tolist()
    return any(mate[r] == NONE and _search_from(r, nbrs, mate)
               for r in range(g.vertex_count))


def max_cardinality(g: Graph) -> int:
    """Maximum matching size by exhaustive search (small graphs only)."""
    n = g.vertex_count
    order = list(range(n))
    nbrs = [g.neighbors(v).tolist() for v in range(n)]
    value, _ = _best_vertex_value(n, order, nbrs, [1] * n)
    return value // 2
