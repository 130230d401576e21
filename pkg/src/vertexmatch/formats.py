"""Reading and writing graphs and matchings."""

from __future__ import annotations

import io
import os
import re

import numpy as np

from vertexmatch.graph import Graph, Matching


class ParseError(ValueError):
    pass


_MM_HEADER = re.compile(r"%%MatrixMarket\s+matrix\s+(\w+)\s+(\w+)\s+(\w+)\s*$", re.I)


def _int_pairs(lines: list[str], where: str) -> np.ndarray:
    if not lines:
        return np.empty((0, 2), dtype=np.int64)
    try:
        arr = np.loadtxt(io.StringIO("".join(lines)), dtype=np.int64,
                         usecols=(0, 1), ndmin=2)
    except ValueError as exc:
        raise ParseError(f"{where}: malformed entry ({exc})") from None
    return arr


def parse_matrix_market(path) -> Graph:
    """Graph of the sparsity pattern of a square coordinate Matrix Market file.

    Values are ignored.  General matrices are symmetrised; self-loops and
    repeated pairs are dropped and counted on the returned graph.
    """
    with open(path) as f:
        header = f.readline()
        m = _MM_HEADER.match(header.strip())
        if not m:
            raise ParseError(f"{path}: missing or malformed %%MatrixMarket header")
        layout, field, symmetry = (s.lower() for s in m.groups())
        if layout != "coordinate":
            raise ParseError(f"{path}: only coordinate format is supported, got {layout!r}")
        if field not in ("pattern", "real", "integer", "complex", "double"):
            raise ParseError(f"{path}: unknown field {field!r}")
        if symmetry not in ("general", "symmetric", "skew-symmetric", "hermitian"):
            raise ParseError(f"{path}: unknown symmetry {symmetry!r}")
        line = f.readline()
        while line and (line.startswith("%") or not line.strip()):
            line = f.readline()
        try:
            rows, cols, nnz = (int(x) for x in line.split())
        except ValueError:
            raise ParseError(f"{path}: malformed size line {line.strip()!r}") from None
        if rows != cols:
            raise ParseError(f"{path}: matrix is {rows} x {cols}, not square")
        body = [ln for ln in f if ln.strip() and not ln.startswith("%")]
    if len(body) != nnz:
        raise ParseError(f"{path}: header declares {nnz} entries, found {len(body)}")
    pairs = _int_pairs(body, str(path))
    if pairs.size and (pairs.min() < 1 or pairs.max() > rows):
        raise ParseError(f"{path}: index out of bounds [1, {rows}]")
    return Graph.from_pairs(rows, pairs - 1)


_N_HEADER = re.compile(r"#\s*n\s*=\s*(\d+)\s*$")


def parse_edge_list(path) -> Graph:
    """Whitespace-separated 0-based ``u v`` lines; ``# n=<count>`` fixes the vertex count."""
    declared = None
    body = []
    with open(path) as f:
        for ln in f:
            s = ln.strip()
            if not s:
                continue
            if s.startswith("#"):
                hm = _N_HEADER.match(s)
                if hm and declared is None:
                    declared = int(hm.group(1))
                continue
            body.append(ln)
    pairs = _int_pairs(body, str(path))
    if pairs.size and pairs.min() < 0:
        raise ParseError(f"{path}: negative vertex index")
    top = int(pairs.max()) + 1 if pairs.size else 0
    n = top if declared is None else declared
    if top > n:
        raise ParseError(f"{path}: vertex {top - 1} out of declared range [0, {n})")
    return Graph.from_pairs(n, pairs)


def load_graph(path, fmt: str | None = None) -> Graph:
    if fmt is None:
        fmt = "mtx" if str(path).lower().endswith(".mtx") else "edgelist"
    if fmt == "mtx":
        return parse_matrix_market(path)
    if fmt == "edgelist":
        return parse_edge_list(path)
    raise ValueError(f"unknown graph format {fmt!r}")


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w") as f:
        f.write(f"# n={g.vertex_count}\n")
        np.savetxt(f, g.edges, fmt="%d")


def write_matrix_market(g: Graph, path) -> None:
    """Pattern symmetric file holding the lower triangle."""
    with open(path, "w") as f:
        f.write("%%MatrixMarket matrix coordinate pattern symmetric\n")
        f.write(f"{g.vertex_count} {g.vertex_count} {g.edge_count}\n")
        np.savetxt(f, g.edges[:, ::-1] + 1, fmt="%d")


def write_graph(g: Graph, path) -> None:
    if str(path).lower().endswith(".mtx"):
        write_matrix_market(g, path)
    else:
        write_edge_list(g, path)


def read_matching(path, vertex_count: int) -> Matching:
    """Matching from ``u v`` lines.  Pairs are not validated here."""
    body = []
    with open(path) as f:
        body = [ln for ln in f if ln.strip() and not ln.lstrip().startswith("#")]
    pairs = _int_pairs(body, str(path))
    if pairs.size and (pairs.min() < 0 or pairs.max() >= vertex_count):
        raise ParseError(f"{path}: vertex out of range [0, {vertex_count})")
    return Matching.from_pairs(vertex_count, pairs.tolist())


def write_matching(m: Matching, path) -> None:
    with open(path, "w") as f:
        for u, v in m.pairs():
            f.write(f"{u} {v}\n")


def graph_name(path) -> str:
    base = os.path.basename(str(path))
    for ext in (".mtx", ".txt", ".edges", ".el"):
        if base.lower().endswith(ext):
            return base[: -len(ext)]
    return base
