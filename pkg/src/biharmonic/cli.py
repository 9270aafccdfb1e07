"""Command line front end.

Six subcommands: gen, dist, matrix, index, verify, bounds. All numeric output
uses 12 significant digits so identical inputs give byte-identical stdout.
Exit codes: 0 on success, 1 when a verification check fails, 2 on usage or
input errors (unreadable or malformed files, disconnected graphs, bad
vertices or parameters).
"""

from __future__ import annotations

import argparse
import sys

from . import graphs, metrics, verification
from .graphs import DisconnectedGraphError, EdgeListFormatError


def _fmt(x) -> str:
    return f"{float(x):.12g}"


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _index_set(indices) -> str:
    return "{" + ",".join(str(i) for i in indices) + "}"


def cmd_gen(args) -> int:
    g = graphs.generate(args.family, *args.params)
    graphs.write_edge_list(g, args.output)
    print(f"wrote {args.output}: n={g.n} m={g.m}")
    return 0


_METHODS = {
    "spectral": metrics.biharmonic_spectral,
    "pinv": metrics.biharmonic_pinv_entries,
    "det": metrics.biharmonic_determinant,
    "minnorm": metrics.biharmonic_minnorm,
}


def cmd_dist(args) -> int:
    g = graphs.read_edge_list(args.path)
    if not graphs.is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")
    u, v = args.u, args.v
    for x in (u, v):
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range [0, {g.n})")
    if u == v and args.method in ("det", "all"):
        print(
            "warning: distance from a vertex to itself is 0 by definition; "
            "the determinant formula needs distinct vertices and is skipped",
            file=sys.stderr,
        )
    if args.method == "all":
        if u == v:
            values = {"spectral": 0.0, "pinv": 0.0, "det": 0.0, "minnorm": 0.0}
            spread = 0.0
        else:
            report = metrics.all_methods(g, u, v)
            values = {
                "spectral": report.spectral,
                "pinv": report.pinv_entries,
                "det": report.determinant,
                "minnorm": report.min_norm,
            }
            spread = report.max_relative_spread
        for name in ("spectral", "pinv", "det", "minnorm"):
            print(f"{name} {_fmt(values[name])}")
        print(f"spread {_fmt(spread)}")
    else:
        if u == v:
            print(_fmt(0.0))
        else:
            print(_fmt(_METHODS[args.method](g, u, v)))
    return 0


def cmd_matrix(args) -> int:
    g = graphs.read_edge_list(args.path)
    dm = metrics.distance_matrix(g)
    print(",".join(f"v{i}" for i in range(g.n)))
    for row in dm:
        print(",".join(_fmt(x) for x in row))
    return 0


def cmd_index(args) -> int:
    g = graphs.read_edge_list(args.path)
    cache = metrics.build_cache(g)
    print(f"B {_fmt(metrics.biharmonic_index_spectral(cache))}")
    print(f"Kf {_fmt(metrics.kirchhoff_index(cache))}")
    if g.n >= 2:
        brk = metrics.check_brk(cache)
        print(f"BRK {_fmt(brk.rhs)}{' equality' if brk.equality else ''}")
    floor = metrics.check_index_floor(cache)
    print(f"floor {_fmt(floor.floor)}{' equality' if floor.equality else ''}")
    return 0


def cmd_verify(args) -> int:
    g = graphs.read_edge_list(args.path)
    results = verification.verify_graph(g)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
    return 0 if verification.all_passed(results) else 1


def cmd_bounds(args) -> int:
    g = graphs.read_edge_list(args.path)
    r = metrics.bounds_report(g, args.u, args.v)
    print(f"lower {_fmt(r.lower)}")
    print(f"value {_fmt(r.value)}")
    print(f"upper {_fmt(r.upper)}")
    print(f"lower-attained {_flag(r.lower_attained)}")
    print(f"upper-attained {_flag(r.upper_attained)}")
    print(f"sigmaN {_index_set(r.sigma_n)} orthogonal {_flag(r.sigma_n_orthogonal)}")
    print(f"sigma2 {_index_set(r.sigma2)} orthogonal {_flag(r.sigma2_orthogonal)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biharmonic",
        description="Biharmonic distances, spectral indices, and consistency checks for graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a family graph and write it as an edge list")
    gen.add_argument("family", help="complete, path, cycle, wheel, hypercube, or k4minus")
    gen.add_argument("params", nargs="*", type=int, help="family size parameters")
    gen.add_argument("-o", "--output", required=True, help="output file path")
    gen.set_defaults(func=cmd_gen)

    dist = sub.add_parser("dist", help="biharmonic distance between two vertices")
    dist.add_argument("path")
    dist.add_argument("u", type=int)
    dist.add_argument("v", type=int)
    dist.add_argument(
        "--method",
        choices=["spectral", "pinv", "det", "minnorm", "all"],
        default="pinv",
        help="computational route (default pinv); 'all' cross-checks every route",
    )
    dist.set_defaults(func=cmd_dist)

    matrix = sub.add_parser("matrix", help="full distance matrix as CSV")
    matrix.add_argument("path")
    matrix.set_defaults(func=cmd_matrix)

    index = sub.add_parser("index", help="biharmonic and Kirchhoff indices with their lower bounds")
    index.add_argument("path")
    index.set_defaults(func=cmd_index)

    verify = sub.add_parser("verify", help="run every consistency check against the graph")
    verify.add_argument("path")
    verify.set_defaults(func=cmd_verify)

    bounds = sub.add_parser("bounds", help="two-sided spectral bounds and attainment analysis")
    bounds.add_argument("path")
    bounds.add_argument("u", type=int)
    bounds.add_argument("v", type=int)
    bounds.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code is None else int(exc.code)
    try:
        return args.func(args)
    except (EdgeListFormatError, DisconnectedGraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
