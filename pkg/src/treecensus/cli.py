"""Command line front end: counting, censuses, identity checks, oracle dumps.

Output is JSON on stdout (one document per invocation; one JSON line per
report for verify).  Counts are decimal strings so arbitrarily large values
survive round-trips exactly, and identical invocations produce byte-identical
output.  Exit codes: 0 success, 1 a checked property failed, 2 bad input or
oracle budget exceeded.
"""

import argparse
import json
import sys
from fractions import Fraction

from .census import (
    FAMILY_KMN,
    FAMILY_KN,
    FAMILY_KN_MINUS_EDGE,
    base_graph,
    census_cells,
    census_formula,
    census_mtt,
    census_oracle,
)
from .graphs import Graph, delete_edges, graph_from_json, graph_to_json, normalize_edge
from .identities import (
    verify_all,
    verify_general_a,
    verify_general_a_minus_edge,
    verify_identity1,
    verify_identity2,
    verify_kn_minus_edge_norm,
    verify_kn_minus_edge_total,
    verify_refinement,
    verify_simplified_1,
    verify_simplified_2,
    verify_sumrefine,
)
from .kirchhoff import count_spanning_trees, count_spanning_trees_with_edge
from .oracle import DEFAULT_BUDGET, enumerate_spanning_trees, tree_to_json
from .tables import GRAIN_ROOT, GRAIN_ROOT_CHILD, CensusTable

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

GRAPH_FAMILIES = (FAMILY_KN, FAMILY_KMN, FAMILY_KN_MINUS_EDGE, "file")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _ints(text: str, expected: int, what: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != expected:
        raise ValueError(f"{what} needs {expected} comma-separated integers, got {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"{what} needs integers, got {text!r}") from None


def _resolve_family(args) -> tuple[str, dict]:
    """Split a --family spec into (tag, params), merging inline and flag params."""
    tag, _, inline = args.family.partition(":")
    if tag not in GRAPH_FAMILIES:
        raise ValueError(f"unknown family {tag!r}; expected one of {', '.join(GRAPH_FAMILIES)}")
    if tag == "file":
        if not inline:
            raise ValueError('family "file" needs a path, e.g. file:graph.json')
        return tag, {"path": inline}
    n = getattr(args, "n", None)
    m = getattr(args, "m", None)
    if inline:
        if tag == FAMILY_KMN:
            m, n = _ints(inline, 2, f"family {tag}")
        else:
            (n,) = _ints(inline, 1, f"family {tag}")
    if tag == FAMILY_KMN:
        if m is None or n is None:
            raise ValueError("family kmn needs m and n (inline kmn:M,N or --m/--n)")
        return tag, {"m": m, "n": n}
    if n is None:
        raise ValueError(f"family {tag} needs n (inline {tag}:N or --n)")
    return tag, {"n": n}


def _family_graph(tag: str, params: dict) -> Graph:
    if tag == "file":
        with open(params["path"], encoding="utf-8") as handle:
            return graph_from_json(json.load(handle))
    return base_graph(tag, **params)


def cmd_count(args) -> int:
    tag, params = _resolve_family(args)
    graph = _family_graph(tag, params)
    _emit({
        "graph": {"family": tag, "params": params},
        "spanning_trees": str(count_spanning_trees(graph)),
    })
    return EXIT_OK


def cmd_count_edge(args) -> int:
    tag, params = _resolve_family(args)
    graph = _family_graph(tag, params)
    u, v = normalize_edge(*_ints(args.edge, 2, "--edge"))
    with_edge = count_spanning_trees_with_edge(graph, (u, v))
    without_edge = count_spanning_trees(delete_edges(graph, [(u, v)]))
    total = count_spanning_trees(graph)
    assert with_edge + without_edge == total
    _emit({
        "graph": {"family": tag, "params": params},
        "edge": [u, v],
        "with_edge": str(with_edge),
        "without_edge": str(without_edge),
        "total": str(total),
    })
    return EXIT_OK


def _restrict_table(table: CensusTable, keep: set) -> CensusTable:
    entries = {key: count for key, count in table.entries.items() if key in keep}
    return CensusTable(table.family, table.params, table.grain, table.method, entries)


def cmd_census(args) -> int:
    tag, params = _resolve_family(args)
    if tag == "file":
        raise ValueError("census is defined for the kn, kmn and kn-minus-edge families")
    builders = {
        "formula": lambda: census_formula(tag, args.grain, **params),
        "mtt": lambda: census_mtt(tag, args.grain, **params),
        "oracle": lambda: census_oracle(tag, args.grain, budget=args.budget, **params),
    }
    methods = list(builders) if args.method == "all" else [args.method]
    tables = [builders[method]() for method in methods]

    if args.k is not None or args.j is not None:
        # cell tuples are (n,k), (m,n,k) or (n,k,j); j exists only for kn pairs
        refined = (tag, args.grain) == (FAMILY_KN, GRAIN_ROOT_CHILD)
        if args.j is not None and not refined:
            raise ValueError("--j only applies to family kn with grain root+highest-child")
        keep = set()
        for key, cell in census_cells(tag, args.grain, **params):
            k = cell[-2] if refined else cell[-1]
            if args.k is not None and k != args.k:
                continue
            if args.j is not None and cell[-1] != args.j:
                continue
            keep.add(key)
        tables = [_restrict_table(table, keep) for table in tables]

    if args.method != "all":
        _emit(tables[0].to_json())
        return EXIT_OK
    agreement = all(table.entries == tables[0].entries for table in tables[1:])
    _emit({
        "tables": [table.to_json() for table in tables],
        "agreement": agreement,
    })
    return EXIT_OK if agreement else EXIT_VIOLATION


def _verify_reports(args) -> list:
    n_max, m_max = args.n_max, args.m_max
    samples = [Fraction(a) for a in args.a or []]
    ident = args.identity

    def n_range(minimum):
        if args.n is not None:
            return [args.n]
        return range(minimum, n_max + 1)

    def m_range():
        if args.m is not None:
            return [args.m]
        return range(1, m_max + 1)

    if ident == "all":
        return verify_all(n_max, m_max, samples)
    if ident in ("identity1", "sumrefine", "simplified-1"):
        fn = {"identity1": verify_identity1, "sumrefine": verify_sumrefine,
              "simplified-1": verify_simplified_1}[ident]
        return [fn(n) for n in n_range(2)]
    if ident in ("kn-minus-edge-total", "kn-minus-edge-norm"):
        fn = {"kn-minus-edge-total": verify_kn_minus_edge_total,
              "kn-minus-edge-norm": verify_kn_minus_edge_norm}[ident]
        return [fn(n) for n in n_range(3)]
    if ident in ("identity2", "simplified-2"):
        fn = {"identity2": verify_identity2, "simplified-2": verify_simplified_2}[ident]
        return [fn(m, n) for m in m_range() for n in n_range(2)]
    if ident == "refinement":
        reports = []
        for n in n_range(2):
            ks = [args.k] if args.k is not None else range(n - 1)
            reports.extend(verify_refinement(n, k) for k in ks)
        return reports
    if ident in ("general-a", "general-a-minus-edge"):
        if not samples:
            raise ValueError(f"--a is required for identity {ident!r}")
        fn = verify_general_a if ident == "general-a" else verify_general_a_minus_edge
        minimum = 2 if ident == "general-a" else 3
        return [fn(n, a) for a in samples for n in n_range(minimum)]
    raise ValueError(f"unknown identity {ident!r}")


def cmd_verify(args) -> int:
    reports = _verify_reports(args)
    for report in reports:
        _emit(report.to_json())
    return EXIT_OK if all(r.holds for r in reports) else EXIT_VIOLATION


def cmd_oracle(args) -> int:
    tag, params = _resolve_family(args)
    graph = _family_graph(tag, params)
    trees = enumerate_spanning_trees(graph, args.budget)
    _emit({
        "graph": graph_to_json(graph),
        "count": str(len(trees)),
        "trees": [tree_to_json(t) for t in trees],
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecensus",
        description="Exact spanning-tree counts and uprooted-tree censuses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family(p):
        p.add_argument(
            "--family", required=True, metavar="SPEC",
            help='kn, kmn, kn-minus-edge or file; parameters inline after a '
                 'colon (kn:8, kmn:2,3, file:graph.json) or via --n/--m',
        )
        p.add_argument("--n", type=int, help="vertex count (kn families) or right part size")
        p.add_argument("--m", type=int, help="left part size (kmn)")

    p = sub.add_parser("count", help="number of spanning trees")
    add_family(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("count-edge", help="spanning trees through one edge")
    add_family(p)
    p.add_argument("--edge", required=True, metavar="U,V")
    p.set_defaults(func=cmd_count_edge)

    p = sub.add_parser("census", help="uprooted-tree census tables")
    add_family(p)
    p.add_argument("--grain", required=True, choices=[GRAIN_ROOT, GRAIN_ROOT_CHILD])
    p.add_argument("--method", default="all",
                   choices=["formula", "mtt", "oracle", "all"])
    p.add_argument("--k", type=int, help="restrict to the cell(s) with this k")
    p.add_argument("--j", type=int, help="restrict to the cell(s) with this j")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="oracle subset budget")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="check census identities exactly")
    p.add_argument("--identity", required=True, metavar="ID",
                   help="identity1, identity2, refinement, sumrefine, "
                        "simplified-1, simplified-2, general-a, "
                        "kn-minus-edge-total, kn-minus-edge-norm, "
                        "general-a-minus-edge, or all")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--a", action="append", metavar="P/Q",
                   help="rational parameter sample (repeatable)")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--m-max", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="enumerate spanning trees explicitly")
    add_family(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
