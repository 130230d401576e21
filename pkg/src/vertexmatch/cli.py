"""Command line: ``run`` benchmarks, ``verify`` a matching, ``gen`` a synthetic graph.

Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 invalid matching.
"""

from __future__ import annotations

import argparse
import logging
import sys

from vertexmatch import formats, generators, harness
from vertexmatch.oracle import OracleLimitError, verify_matching
from vertexmatch.weights import WeightMode

log = logging.getLogger("vertexmatch")

EXIT_USAGE = 1
EXIT_IO = 2
EXIT_INVALID = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _weights(text: str) -> WeightMode:
    try:
        return WeightMode.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vertexmatch",
                description="Vertex-weighted matching benchmarks and checks.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("run", help="time algorithms over seeded weight trials")
    r.add_argument("--input", required=True)
    r.add_argument("--format", choices=("mtx", "edgelist"))
    r.add_argument("--algos", default="exact-mvm,twothirds-mvm,half-mvm",
                   help=f"comma-separated subset of {','.join(harness.ALGORITHMS)}")
    r.add_argument("--weights", type=_weights, default=harness.INT_1_1000,
                   help="int:LO:HI or real:LO:HI (default int:1:1000)")
    r.add_argument("--trials", type=int, default=10)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--epsilon", type=float, default=0.01)
    r.add_argument("--oracle", action="store_true",
                   help="compute gaps against the brute-force optimum (small graphs)")
    r.add_argument("--out", required=True, help="CSV output path")

    v = sub.add_parser("verify", help="check that a matching file is a valid matching")
    v.add_argument("--input", required=True)
    v.add_argument("--format", choices=("mtx", "edgelist"))
    v.add_argument("--matching", required=True)

    g = sub.add_parser("gen", help="write a synthetic graph")
    g.add_argument("--kind", required=True, choices=generators.KINDS)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--degree", type=int, default=3, help="degree for --kind regular")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True, help="edge list path (.mtx for Matrix Market)")
    return p


def _run(args) -> int:
    try:
        cfg = harness.RunConfig(
            input=args.input, algorithms=[a.strip() for a in args.algos.split(",") if a.strip()],
            weights=args.weights, trials=args.trials, seed=args.seed, epsilon=args.epsilon,
            oracle=args.oracle, output=args.out, fmt=args.format)
    except harness.ConfigError as exc:
        raise UsageError(str(exc))
    g = formats.load_graph(cfg.input, cfg.fmt)
    for line in harness.config_echo(cfg, g):
        print(f"# {line}")
    try:
        reports = harness.run_experiment(cfg, graph=g)
    except OracleLimitError as exc:
        raise UsageError(str(exc))
    harness.emit_csv(reports, cfg.output)
    for line in harness.summary(reports):
        print(line)
    return 0


def _verify(args) -> int:
    g = formats.load_graph(args.input, args.format)
    m = formats.read_matching(args.matching, g.vertex_count)
    if verify_matching(g, m):
        print(f"valid matching: cardinality={m.cardinality}")
        return 0
    print("invalid matching")
    return EXIT_INVALID


def _gen(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    if args.kind == "gnm" and args.m is None:
        raise UsageError("--kind gnm needs --m")
    try:
        g = generators.generate(args.kind, args.n, args.m, args.seed, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc))
    formats.write_graph(g, args.out)
    print(f"wrote {args.kind} graph n={g.vertex_count} m={g.edge_count} to {args.out}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    handler = {"run": _run, "verify": _verify, "gen": _gen}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"vertexmatch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, formats.ParseError) as exc:
        print(f"vertexmatch: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
