"""Command-line front end: construct graph families, verify graph files,
evaluate order bounds, and print the known-polygon family table.

Exit codes: 0 success, 1 verify-expectation mismatch, 2 usage or domain
error, 3 violated mathematical assertion.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import (
    BoundsError,
    excess_of,
    improved_bound,
    polygon_family_table,
)
from .deletions import NAMED_FAMILIES, construct_named
from .designs import DesignError, sts_generate, steiner_truncate
from .gf import FieldError, field_of_order
from .graphs import (
    BipartiteGraph,
    GraphError,
    bipartition,
    diameter,
    from_dimacs,
    from_graph6,
    girth,
    graph_from_edges,
    is_connected,
    levi,
    to_dimacs,
    to_graph6,
)
from .polygons import ConstructionError, gq_q4, gq_q5, split_cayley_hexagon
from .projective import GeometryError
from .prune import (
    affine_girth6_graph,
    affine_slab_graph,
    find_free_edge,
    induced_branch_graph,
    mixed_degree_prune,
)

_USAGE_ERRORS = (
    ValueError,
    FieldError,
    GeometryError,
    GraphError,
    DesignError,
    BoundsError,
)

HOSTS = ("q4", "q5", "hexagon")
FAMILIES = (
    "q4",
    "q5",
    "hexagon",
    *sorted(NAMED_FAMILIES),
    "branch-prune",
    "mixed-prune",
    "t2-slab",
    "ag2-girth6",
    "steiner-cage",
)


def _host_structure(name: str, q: int):
    field = field_of_order(q)
    if name == "q4":
        return gq_q4(field)
    if name == "q5":
        return gq_q5(field)
    return split_cayley_hexagon(field)


def _anchor_edge(structure, g: BipartiteGraph, mode: str):
    if mode == "lex":
        return None
    point, block = find_free_edge(structure)
    return (point, g.n_a + block)


def _build_family(args) -> BipartiteGraph:
    fam = args.family
    if fam in ("q4", "q5", "hexagon"):
        _require(args.q is not None, "--q is required")
        return levi(_host_structure(fam, args.q))
    if fam in NAMED_FAMILIES:
        _require(args.q is not None, "--q is required")
        return construct_named(fam, args.q)
    if fam == "branch-prune":
        _require(args.q is not None, "--q is required")
        _require(args.m1 is not None and args.n1 is not None, "--m1/--n1 required")
        structure = _host_structure(args.host, args.q)
        g = levi(structure)
        edge = _anchor_edge(structure, g, args.edge)
        return induced_branch_graph(g, args.m1, args.n1, edge=edge)
    if fam == "mixed-prune":
        _require(args.q is not None, "--q is required")
        structure = _host_structure(args.host, args.q)
        g = levi(structure)
        edge = _anchor_edge(structure, g, args.edge)
        return mixed_degree_prune(g, edge=edge)
    if fam == "t2-slab":
        _require(args.q is not None, "--q is required")
        _require(args.m1 is not None and args.n1 is not None, "--m1/--n1 required")
        return affine_slab_graph(field_of_order(args.q), args.m1, args.n1)
    if fam == "ag2-girth6":
        _require(args.q is not None, "--q is required")
        _require(args.m1 is not None and args.n1 is not None, "--m1/--n1 required")
        return affine_girth6_graph(field_of_order(args.q), args.m1, args.n1)
    # steiner-cage
    _require(args.v is not None, "--v is required for steiner-cage")
    return steiner_truncate(sts_generate(args.v))


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def _graph_report(g: BipartiteGraph, family: str, params: dict) -> dict:
    da, db = g.degree_sets()
    gi = girth(g)
    connected = is_connected(g)
    report = {
        "schema": 1,
        "family": family,
        "params": params,
        "vertices": g.n_vertices,
        "edges": g.num_edges,
        "class_sizes": [g.n_a, g.n_b],
        "degrees": [sorted(da), sorted(db)],
        "girth": None if gi == float("inf") else int(gi),
        "diameter": diameter(g) if connected else None,
        "connected": connected,
    }
    if len(da) == 1 and len(db) == 1 and gi != float("inf"):
        report.update(excess_of(g).to_dict())
        report["schema"] = 1
    return report


def _emit(report: dict, path: str | None):
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if path:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_construct(args) -> int:
    g = _build_family(args)
    params = {
        k: v
        for k, v in (
            ("q", args.q),
            ("v", args.v),
            ("m1", args.m1),
            ("n1", args.n1),
            ("host", args.host if args.family in ("branch-prune", "mixed-prune") else None),
            ("edge", args.edge if args.family in ("branch-prune", "mixed-prune") else None),
        )
        if v is not None
    }
    if args.out:
        data = to_dimacs(g) if args.format == "dimacs" else to_graph6(g)
        with open(args.out, "wb") as fh:
            fh.write(data)
    _emit(_graph_report(g, args.family, params), args.report)
    return 0


def _cmd_verify(args) -> int:
    with open(args.infile, "rb") as fh:
        data = fh.read()
    head = data.lstrip()[:1]
    if head in (b"p", b"c"):
        n, edges = from_dimacs(data)
    else:
        n, edges = from_graph6(data)
    if n == 0:
        raise GraphError("empty graph")
    parts = bipartition(n, edges)
    if parts is None:
        raise GraphError("input graph is not bipartite")
    g = graph_from_edges(n, edges)
    report = _graph_report(g, "verify", {"infile": args.infile})
    failures = []
    if args.expect_girth is not None and report["girth"] != args.expect_girth:
        failures.append(f"girth {report['girth']} != expected {args.expect_girth}")
    if args.expect_m is not None or args.expect_n is not None:
        da, db = g.degree_sets()
        if len(da) != 1 or len(db) != 1:
            failures.append(f"not biregular: degrees {sorted(da)}/{sorted(db)}")
        else:
            got = {next(iter(da)), next(iter(db))}
            want = {x for x in (args.expect_m, args.expect_n) if x is not None}
            if not want.issubset(got):
                failures.append(f"degrees {sorted(got)} != expected {sorted(want)}")
    report["expectation_failures"] = failures
    _emit(report, args.report)
    return 1 if failures else 0


def _cmd_bounds(args) -> int:
    report = improved_bound(args.m, args.n, args.girth)
    sys.stdout.write(report.to_json())
    return 0


def _cmd_table(args) -> int:
    rows = polygon_family_table(args.q)
    measured = {}
    for q in args.q:
        if q <= 3:
            g = mixed_degree_prune(levi(gq_q4(field_of_order(q))))
            measured[("gq(q,q)", q)] = g.n_vertices
        if q == 2:
            g = mixed_degree_prune(levi(split_cayley_hexagon(field_of_order(q))))
            measured[("hex(q,q)", q)] = g.n_vertices
    header = (
        f"{'family':<12} {'q':>2} {'degs':>7} {'girth':>5} "
        f"{'prune':>10} {'moore':>10} {'excess':>12} flags"
    )
    sys.stdout.write(header + "\n")
    for row in rows:
        flags = []
        for col in ("prune_col", "moore_col", "excess"):
            if row.get(f"{col}_mismatch"):
                flags.append(f"{col}-mismatch")
        key = (row["family"], row["q"])
        if key in measured:
            scale = row["degree_small"] + row["degree_large"] - 1
            ok = measured[key] == row["prune_col"] * scale
            flags.append("measured-ok" if ok else "measured-MISMATCH")
            if not ok:
                raise ConstructionError(
                    f"violated invariant: measured prune order {measured[key]} "
                    f"!= {row['prune_col'] * scale}"
                )
        sys.stdout.write(
            f"{row['family']:<12} {row['q']:>2} "
            f"{row['degree_small']},{row['degree_large']:>3} {row['girth']:>5} "
            f"{row['prune_col']:>10} {row['moore_col']:>10} {row['excess']:>12} "
            f"{';'.join(flags) if flags else '-'}\n"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bbcage",
        description="Construct, verify and bound bipartite biregular graphs "
        "built from finite geometries and designs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a graph family and report on it")
    c.add_argument("--family", required=True, choices=FAMILIES)
    c.add_argument("--q", type=int, help="field order (prime power)")
    c.add_argument("--v", type=int, help="point count for steiner-cage")
    c.add_argument("--m1", type=int)
    c.add_argument("--n1", type=int)
    c.add_argument("--host", choices=HOSTS, default="q4", help="prune host polygon")
    c.add_argument("--edge", choices=("auto", "lex"), default="lex")
    c.add_argument("--format", choices=("graph6", "dimacs"), default="graph6")
    c.add_argument("--out", help="graph output path")
    c.add_argument("--report", help="JSON report path (stdout when omitted)")
    c.set_defaults(func=_cmd_construct)

    v = sub.add_parser("verify", help="measure a graph file and check expectations")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--expect-m", type=int)
    v.add_argument("--expect-n", type=int)
    v.add_argument("--expect-girth", type=int)
    v.add_argument("--report", help="JSON report path (stdout when omitted)")
    v.set_defaults(func=_cmd_verify)

    b = sub.add_parser("bounds", help="evaluate order bounds for (m, n; girth)")
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--girth", type=int, required=True)
    b.set_defaults(func=_cmd_bounds)

    t = sub.add_parser("table", help="print the known-polygon family table")
    t.add_argument("--q", type=int, action="append", required=True)
    t.set_defaults(func=_cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"bbcage: assertion failed: {exc}", file=sys.stderr)
        return 3
    except _USAGE_ERRORS as exc:
        print(f"bbcage: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"bbcage: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
