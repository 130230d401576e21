"""Experiment driver and CSV reports.

A run fixes one graph and repeats every selected algorithm over ``trials``
weight draws, trial ``t`` using seed ``seed + t``.  Timed regions cover the
algorithm including its own preprocessing (sorted adjacency for the vertex
algorithms, the edge-weight reduction for the edge algorithms), but not
parsing or weight generation.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from vertexmatch import mem, mvm
from vertexmatch.formats import graph_name, load_graph
from vertexmatch.graph import Graph, Matching, build_sorted_graph
from vertexmatch.oracle import ORACLE_LIMIT, OracleLimitError, exact_weight, oracle_mvm, stats
from vertexmatch.weights import INT_1_1000, WeightMode, generate_weights

CSV_HEADER = ("graph", "n", "m", "algorithm", "trial", "seed", "weight",
              "cardinality", "time_ms", "gap_percent")
AGGREGATE = "geomean"


def _sorted(g, w):
    return build_sorted_graph(g, w)


def _exact(g, w, cfg, seed):
    return mvm.exact_mvm(_sorted(g, w))


def _two_thirds(g, w, cfg, seed):
    return mvm.two_thirds_mvm(_sorted(g, w))


def _half(g, w, cfg, seed):
    return mvm.half_mvm(_sorted(g, w))


def _greedy(g, w, cfg, seed):
    return mem.greedy_mem(mem.mvm_to_mem(g, w))


def _gpa(g, w, cfg, seed):
    return mem.gpa_mem(mem.mvm_to_mem(g, w))


def _rr(g, w, cfg, seed):
    return mem.round_robin_improve_mem(mem.mvm_to_mem(g, w), None, cfg.epsilon, seed)


def _gpa_rr(g, w, cfg, seed):
    eg = mem.mvm_to_mem(g, w)
    return mem.round_robin_improve_mem(eg, mem.gpa_mem(eg), cfg.epsilon, seed)


def _random(g, w, cfg, seed):
    return mem.random_improve_mem(mem.mvm_to_mem(g, w), None, cfg.epsilon, seed)


ALGORITHMS: dict[str, Callable[..., Matching]] = {
    "exact-mvm": _exact,
    "twothirds-mvm": _two_thirds,
    "half-mvm": _half,
    "greedy-mem": _greedy,
    "gpa-mem": _gpa,
    "rr": _rr,
    "gpa-rr": _gpa_rr,
    "random-improve": _random,
}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    input: str
    algorithms: Sequence[str] = ("exact-mvm", "twothirds-mvm", "half-mvm")
    weights: WeightMode = INT_1_1000
    trials: int = 10
    seed: int = 0
    epsilon: float = 0.01
    oracle: bool = False
    output: Optional[str] = None
    fmt: Optional[str] = None
    oracle_limit: int = ORACLE_LIMIT

    def __post_init__(self):
        self.algorithms = tuple(self.algorithms)
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown:
            raise ConfigError(f"unknown algorithm(s): {', '.join(unknown)}; "
                              f"choose from {', '.join(ALGORITHMS)}")
        if not self.algorithms:
            raise ConfigError("no algorithms selected")
        if len(set(self.algorithms)) != len(self.algorithms):
            raise ConfigError("duplicate algorithm in selection")
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be an unsigned 64-bit integer")
        try:
            mem.phase_count(self.epsilon)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None


@dataclass
class RunReport:
    graph: str
    n: int
    m: int
    algorithm: str
    trial: Union[int, str]
    seed: Optional[int]
    weight: Union[int, float]
    cardinality: Union[int, float]
    time_ms: float
    gap_percent: Optional[float] = None

    def row(self) -> list[str]:
        return [self.graph, _fmt(self.n), _fmt(self.m), self.algorithm, _fmt(self.trial),
                _fmt(self.seed), _fmt(self.weight), _fmt(self.cardinality),
                _fmt(self.time_ms), _fmt(self.gap_percent)]


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if x.is_integer() and abs(x) < 2**53:
            return str(int(x))
        return format(x, ".17g")
    return str(x)


def geometric_mean(values: Sequence[float]) -> float:
    """Geometric mean; zero if any value is zero."""
    if not values:
        raise ValueError("geometric mean of nothing")
    if any(v < 0 for v in values):
        raise ValueError("geometric mean needs non-negative values")
    if any(v == 0 for v in values):
        return 0.0
    return math.exp(math.fsum(math.log(v) for v in values) / len(values))


def aggregate(rows: Sequence[RunReport]) -> list[RunReport]:
    """One ``geomean`` row per algorithm over its trial rows."""
    out = []
    for algo in dict.fromkeys(r.algorithm for r in rows):
        mine = [r for r in rows if r.algorithm == algo and r.trial != AGGREGATE]
        gaps = [r.gap_percent for r in mine]
        first = mine[0]
        out.append(RunReport(
            first.graph, first.n, first.m, algo, AGGREGATE, None,
            geometric_mean([float(r.weight) for r in mine]),
            geometric_mean([float(r.cardinality) for r in mine]),
            geometric_mean([r.time_ms for r in mine]),
            geometric_mean(gaps) if all(x is not None for x in gaps) else None))
    return out


def config_echo(cfg: RunConfig, g: Optional[Graph] = None) -> list[str]:
    lines = [
        f"input={cfg.input}",
        f"algorithms={','.join(cfg.algorithms)}",
        f"weights={cfg.weights}",
        f"trials={cfg.trials} seed={cfg.seed}",
        f"epsilon={cfg.epsilon!r} phases={mem.phase_count(cfg.epsilon)} log_base=e rounding=ceil",
        f"reference={'oracle' if cfg.oracle else 'exact-mvm' if 'exact-mvm' in cfg.algorithms else 'none'}",
    ]
    if g is not None:
        lines.append(f"n={g.vertex_count} m={g.edge_count} "
                     f"dropped_self_loops={g.dropped_self_loops} "
                     f"dropped_duplicates={g.dropped_duplicates}")
    return lines


def _warm_up(cfg: RunConfig) -> None:
    # first calls pay for JIT compilation; keep that out of the timings
    g = Graph.from_pairs(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    w = generate_weights(4, cfg.weights, 0)
    for algo in cfg.algorithms:
        ALGORITHMS[algo](g, w, cfg, 0)


def run_experiment(cfg: RunConfig, graph: Optional[Graph] = None,
                   name: Optional[str] = None) -> list[RunReport]:
    """Trial rows for every selected algorithm followed by the aggregate rows."""
    g = graph if graph is not None else load_graph(cfg.input, cfg.fmt)
    name = name or graph_name(cfg.input)
    if cfg.oracle and g.vertex_count > cfg.oracle_limit:
        raise OracleLimitError(
            f"oracle requested on {g.vertex_count} vertices (limit {cfg.oracle_limit})")
    _warm_up(cfg)
    order = sorted(cfg.algorithms, key=lambda a: a != "exact-mvm")
    rows: list[RunReport] = []
    for t in range(cfg.trials):
        seed = (cfg.seed + t) % 2**64
        w = generate_weights(g.vertex_count, cfg.weights, seed)
        optimum = (exact_weight(oracle_mvm(g, w, cfg.oracle_limit).matching, w)
                   if cfg.oracle else None)
        results = {}
        for algo in order:
            start = time.perf_counter()
            matching = ALGORITHMS[algo](g, w, cfg, seed)
            elapsed = (time.perf_counter() - start) * 1000.0
            results[algo] = (matching, elapsed)
            if algo == "exact-mvm" and optimum is None:
                optimum = exact_weight(matching, w)
        for algo in cfg.algorithms:
            matching, elapsed = results[algo]
            s = stats(matching, w, optimum)
            rows.append(RunReport(name, g.vertex_count, g.edge_count, algo, t, seed,
                                  s.weight, s.cardinality, elapsed, s.gap_percent))
    return rows + aggregate(rows)


def emit_csv(reports: Sequence[RunReport], path) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in reports:
            writer.writerow(r.row())


def summary(reports: Sequence[RunReport]) -> list[str]:
    """Text table of the aggregate rows with runtime relative to exact-mvm."""
    agg = [r for r in reports if r.trial == AGGREGATE]
    ref = next((r.time_ms for r in agg if r.algorithm == "exact-mvm"), None)
    lines = [f"{'algorithm':<16}{'time_ms':>14}{'relative':>12}{'gap_percent':>14}"]
    for r in agg:
        rel = f"{ref / r.time_ms:.3g}" if ref and r.time_ms else "-"
        gap = "-" if r.gap_percent is None else f"{r.gap_percent:.4g}"
        lines.append(f"{r.algorithm:<16}{r.time_ms:>14.4g}{rel:>12}{gap:>14}")
    return lines
