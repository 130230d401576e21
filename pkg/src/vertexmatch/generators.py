"""Synthetic graphs for desk-scale benchmarks."""

from __future__ import annotations

import math

import numpy as np

from vertexmatch.graph import Graph

KINDS = ("path", "cycle", "grid", "gnm", "regular")


def path_graph(n: int) -> Graph:
    i = np.arange(max(n - 1, 0), dtype=np.int64)
    return Graph.from_pairs(n, np.column_stack([i, i + 1]))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        return path_graph(n)
    i = np.arange(n, dtype=np.int64)
    return Graph.from_pairs(n, np.column_stack([i, (i + 1) % n]))


def grid_graph(n: int) -> Graph:
    """Row-major grid of width ``ceil(sqrt(n))``; the last row may be short."""
    width = max(1, math.isqrt(max(n - 1, 0)) + 1) if n else 1
    i = np.arange(n, dtype=np.int64)
    right = i[((i + 1) % width != 0) & (i + 1 < n)]
    down = i[i + width < n]
    pairs = np.concatenate([np.column_stack([right, right + 1]),
                            np.column_stack([down, down + width])])
    return Graph.from_pairs(n, pairs)


def gnm_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform random simple graph with exactly ``m`` edges."""
    if m > n * (n - 1) // 2:
        raise ValueError(f"{m} edges do not fit in a simple graph on {n} vertices")
    rng = np.random.default_rng(seed)
    codes = np.empty(0, dtype=np.int64)
    while codes.size < m:
        k = int((m - codes.size) * 1.1) + 16
        uv = rng.integers(0, n, size=(k, 2), dtype=np.int64)
        uv = uv[uv[:, 0] != uv[:, 1]]
        lo = np.minimum(uv[:, 0], uv[:, 1])
        hi = np.maximum(uv[:, 0], uv[:, 1])
        codes = np.union1d(codes, lo * n + hi)
    if codes.size > m:
        codes = np.sort(rng.choice(codes, size=m, replace=False))
    edges = np.column_stack([codes // n, codes % n])
    return Graph(n, edges)


def regular_graph(n: int, d: int, seed: int) -> Graph:
    """Random near-``d``-regular graph from one pairing of ``n * d`` stubs.

    Self-loops and repeated pairs produced by the pairing are dropped, so a
    few vertices end up with degree below ``d``.
    """
    if (n * d) % 2:
        raise ValueError("n * d must be even")
    rng = np.random.default_rng(seed)
    stubs = rng.permutation(np.repeat(np.arange(n, dtype=np.int64), d))
    return Graph.from_pairs(n, stubs.reshape(-1, 2))


def generate(kind: str, n: int, m: int | None = None, seed: int = 0, degree: int = 3) -> Graph:
    if kind == "path":
        return path_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "grid":
        return grid_graph(n)
    if kind == "gnm":
        if m is None:
            raise ValueError("gnm graphs need an edge count")
        return gnm_graph(n, m, seed)
    if kind == "regular":
        return regular_graph(n, degree, seed)
    raise ValueError(f"unknown graph kind {kind!r}; choose from {', '.join(KINDS)}")
