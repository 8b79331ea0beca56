"""Command-line front end.

One self-describing JSON record per result on standard output.  Exit
status contract: 0 success, 2 input or parse error, 3 precondition
violation, 4 counterexample or internal contradiction (either one means a
bug somewhere, not bad input).

Graph arguments take three forms: a graph6 record, ``@file`` for a graph6
file (a bare ``@`` is the graph6 record for the one-vertex graph), or
``name:key`` for a registered example (``fig21``, ``k14``, ``cycle:n``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .constructions import (
    HypothesisViolated,
    InternalContradiction,
    check_min_leaf_drop,
    composed_origin,
    find_preserving_edge,
    lift_tree,
    lift_tree_relaxed,
    reduce_leaf_count,
)
from .corpus import CorpusSpec, UnknownName, named_graph
from .graph6 import Graph6Error, _MAX_LONG, parse_graph6, write_graph6
from .graphs import Edge, Graph, GraphError, contract
from .spanning import SpanningTree, leaf_report, spanning_tree_count
from .suites import VerificationReport, run_suite


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=True))


def _edge_list(edges) -> list[list[int]]:
    return [list(e) for e in sorted(tuple(e) for e in edges)]


def _origin_map(origin) -> dict[str, list[int]]:
    return {str(v): sorted(s) for v, s in sorted(origin.items())}


def _fmt_edges(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(tuple(e) for e in edges))


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        bits = part.split("-")
        if len(bits) != 2:
            raise ValueError(f"bad edge {part!r}; expected the form u-v")
        pairs.append((int(bits[0]), int(bits[1])))
    if not pairs:
        raise ValueError("empty edge list")
    return pairs


def _resolve_graphs(arg: str) -> list[tuple[str, Graph]]:
    if arg.startswith("name:"):
        ng = named_graph(arg[5:])
        return [(ng.name, ng.graph)]
    if arg.startswith("@") and len(arg) > 1:
        out = []
        with open(arg[1:], "rb") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.rstrip(b"\r\n")
                if not line or line == b">>graph6<<":
                    continue
                try:
                    g = parse_graph6(line)
                except Graph6Error as e:
                    raise type(e)(f"{arg[1:]}:{lineno}: {e}") from e
                out.append((line.decode("ascii"), g))
        if not out:
            raise ValueError(f"no graph6 records in {arg[1:]}")
        return out
    return [(arg, parse_graph6(arg))]


def _resolve_one(arg: str) -> tuple[str, Graph]:
    graphs = _resolve_graphs(arg)
    if len(graphs) != 1:
        raise ValueError(f"expected exactly one graph, got {len(graphs)}")
    return graphs[0]


def cmd_minleaf(args) -> int:
    for label, g in _resolve_graphs(args.graph):
        rep = leaf_report(g)
        _emit(
            {
                "kind": "leaf_report",
                "input": label,
                "n": g.vertex_count,
                "m": g.edge_count,
                "min_leaves": rep.min_leaves,
                "spectrum": sorted(rep.spectrum),
                "witness": _edge_list(rep.witness.tree_edges),
            }
        )
    return 0


def cmd_contract(args) -> int:
    label, g = _resolve_one(args.graph)
    res = contract(g, Edge(args.u, args.v))
    _emit(
        {
            "kind": "contraction",
            "input": label,
            "edge": [args.u, args.v],
            "merged_vertex": res.merged_vertex,
            "n": res.contracted.vertex_count,
            "m": res.contracted.edge_count,
            "edges": _edge_list(res.contracted.edges()),
            "origin": _origin_map(res.origin),
        }
    )
    return 0


def cmd_preserve(args) -> int:
    label, g = _resolve_one(args.graph)
    t = SpanningTree(g, _parse_pairs(args.tree))
    w = find_preserving_edge(g, t)
    _emit(
        {
            "kind": "preservation",
            "input": label,
            "edge": list(w.edge),
            "merged_vertex": w.contracted.merged_vertex,
            "origin": _origin_map(w.contracted.origin),
            "tree_after": _edge_list(w.tree_after.tree_edges),
            "leaf_count": w.tree_after.leaf_count(),
        }
    )
    return 0


def cmd_reduce(args) -> int:
    label, g = _resolve_one(args.graph)
    t = SpanningTree(g, _parse_pairs(args.tree))
    tr = reduce_leaf_count(g, t)
    _emit(
        {
            "kind": "reduction",
            "input": label,
            "leaf": tr.leaf,
            "branch_vertex": tr.branch_vertex,
            "edge_sequence": [list(e) for e in tr.edge_sequence],
            "edge_sequence_current": [list(e) for e in tr.edge_sequence_current],
            "steps": [
                {"edge": list(e), "merged_vertex": r.merged_vertex}
                for e, r in zip(tr.edge_sequence_current, tr.graph_sequence)
            ],
            "origin": _origin_map(composed_origin(tr.graph_sequence)),
            "tree_after": _edge_list(tr.tree_after.tree_edges),
            "leaf_count_before": t.leaf_count(),
            "leaf_count_after": tr.tree_after.leaf_count(),
        }
    )
    return 0


def cmd_lift(args) -> int:
    label, g = _resolve_one(args.graph)
    e = Edge(args.u, args.v)
    res = contract(g, e)
    tp = SpanningTree(res.contracted, _parse_pairs(args.tree))
    fn = lift_tree_relaxed if args.relaxed else lift_tree
    w = fn(g, e, res, tp)
    _emit(
        {
            "kind": "lift",
            "input": label,
            "edge": [args.u, args.v],
            "case_used": w.case_used,
            "attachments": {str(y): end for y, end in sorted(w.attachments.items())},
            "x1": w.x1,
            "x2": w.x2,
            "origin": _origin_map(res.origin),
            "tree": _edge_list(w.tree.tree_edges),
            "leaf_count_before": tp.leaf_count(),
            "leaf_count_after": w.tree.leaf_count(),
        }
    )
    return 0


def cmd_verify(args) -> int:
    if args.suite == "1.2" and args.leaf_bound is None:
        raise ValueError("suite 1.2 needs --leaf-bound")
    if args.suite != "1.2" and args.leaf_bound is not None:
        raise ValueError("--leaf-bound applies to suite 1.2 only")
    if args.corpus is not None:
        spec = CorpusSpec(3, _MAX_LONG, source="file", path=args.corpus)
    else:
        spec = CorpusSpec(3, args.nmax)
    report = run_suite(
        args.suite, spec, leaf_bound=args.leaf_bound, workers=args.workers
    )
    record = {
        "kind": "verification",
        "suite": report.suite,
        "corpus": report.corpus,
        "checked": report.checked,
        "hypothesis_met": report.hypothesis_met,
        "passed": report.passed,
        "skipped": report.skipped,
        "counterexamples": [list(c) for c in report.counterexamples],
        "wall_time": round(report.wall_time, 3),
    }
    if report.suite == "1.2":
        record["smallest_leaf_bound"] = report.smallest_leaf_bound
    _emit(record)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")
    if report.counterexamples:
        for rec, detail in report.counterexamples[:20]:
            print(f"counterexample: {rec}  {detail}", file=sys.stderr)
        return 4
    return 0


def _demo_fig21(out) -> None:
    ng = named_graph("fig21")
    g = ng.graph
    print(f"G = fig21: {g.vertex_count} vertices, {g.edge_count} edges", file=out)
    print(f"edges: {_fmt_edges(g.edges())}", file=out)
    print(f"graph6: {write_graph6(g).decode('ascii')}", file=out)
    rep = leaf_report(g)
    print(f"spanning trees: {spanning_tree_count(g)}", file=out)
    print(f"leaf spectrum: {sorted(rep.spectrum)}", file=out)
    print(f"witness {rep.min_leaves}-leaf tree: {_fmt_edges(rep.witness.tree_edges)}", file=out)
    e = Edge(1, 4)
    res = contract(g, e)
    print(
        f'contract edge "py" = 1-4: merged vertex {res.merged_vertex} '
        f"stands for {sorted(res.origin[res.merged_vertex])}",
        file=out,
    )
    h = res.contracted
    print(f"G/py: {h.vertex_count} vertices, {h.edge_count} edges", file=out)
    print(f"edges: {_fmt_edges(h.edges())}", file=out)
    rep2 = leaf_report(h)
    print(f"leaf spectrum: {sorted(rep2.spectrum)}", file=out)
    print(
        f"no single contraction of G drops the minimum by 2: {check_min_leaf_drop(g)}",
        file=out,
    )
    print(f"minLeaf(G)={rep.min_leaves}, minLeaf(G/py)={rep2.min_leaves}", file=out)


def _demo_reduce(out) -> None:
    g = named_graph("fig21").graph
    rep = leaf_report(g)
    t = rep.witness
    print(f"G = fig21: {g.vertex_count} vertices, {g.edge_count} edges", file=out)
    print(f"start tree ({t.leaf_count()} leaves): {_fmt_edges(t.tree_edges)}", file=out)
    print(f"tree leaves: {' '.join(map(str, t.leaves()))}", file=out)
    tr = reduce_leaf_count(g, t)
    path = t.path(tr.leaf, tr.branch_vertex)
    print(f"chosen leaf: {tr.leaf}", file=out)
    print(f"nearest branch vertex: {tr.branch_vertex} (tree distance {len(path) - 1})", file=out)
    print(f"path to contract: {'-'.join(map(str, path))}", file=out)
    for i, (e, res) in enumerate(zip(tr.edge_sequence_current, tr.graph_sequence), 1):
        print(f"step {i}: contract {e.u}-{e.v} -> merged vertex {res.merged_vertex}", file=out)
    final = tr.graph_sequence[-1].merged_vertex
    merged_from = sorted(composed_origin(tr.graph_sequence)[final])
    print(f"merged vertex {final} stands for {merged_from}", file=out)
    print(
        f"final tree ({tr.tree_after.leaf_count()} leaves): {_fmt_edges(tr.tree_after.tree_edges)}",
        file=out,
    )
    print(
        f"leaf count: {t.leaf_count()} before, {tr.tree_after.leaf_count()} after",
        file=out,
    )


def _demo_lift(out) -> None:
    from .graphs import neighborhood_condition

    ng = named_graph("cycle:5")
    g = ng.graph
    e = Edge(0, 1)
    print(f"G = cycle:5: {g.vertex_count} vertices, {g.edge_count} edges", file=out)
    print(f"edges: {_fmt_edges(g.edges())}", file=out)
    res = contract(g, e)
    print(
        f"contract edge 0-1: merged vertex {res.merged_vertex} "
        f"stands for {sorted(res.origin[res.merged_vertex])}",
        file=out,
    )
    h = res.contracted
    print(f"G/e: {h.vertex_count} vertices, {h.edge_count} edges", file=out)
    print(f"edges: {_fmt_edges(h.edges())}", file=out)
    print(f"neighborhood condition on 0-1: {neighborhood_condition(g, e)}", file=out)
    tp = leaf_report(h).witness
    print(f"tree of G/e ({tp.leaf_count()} leaves): {_fmt_edges(tp.tree_edges)}", file=out)
    print(f"merged vertex tree degree: {tp.degree(res.merged_vertex)}", file=out)
    w = lift_tree(g, e, res, tp)
    print(f"lift case: {w.case_used}", file=out)
    att = ", ".join(f"{y}->{end}" for y, end in sorted(w.attachments.items()))
    print(f"attachments: {att}", file=out)
    print(f"lifted tree ({w.tree.leaf_count()} leaves): {_fmt_edges(w.tree.tree_edges)}", file=out)
    wr = lift_tree_relaxed(g, e, res, tp)
    print(
        f"relaxed lift ({wr.tree.leaf_count()} leaves, allowed up to "
        f"{tp.leaf_count() + 1}): {_fmt_edges(wr.tree.tree_edges)}",
        file=out,
    )
    print(
        f"leaf count: {tp.leaf_count()} before, {w.tree.leaf_count()} after (exact)",
        file=out,
    )


_DEMOS = {"fig21": _demo_fig21, "reduce": _demo_reduce, "lift": _demo_lift}


def cmd_demo(args) -> int:
    fn = _DEMOS.get(args.name)
    if fn is None:
        raise UnknownName(f"no demo named {args.name!r}; valid: fig21, reduce, lift")
    fn(sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leafspan",
        description="Spanning trees with few leaves, under edge contraction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minleaf", help="minimum leaf count and full leaf spectrum")
    p.add_argument("graph", help="graph6 record, @file, or name:key")
    p.set_defaults(func=cmd_minleaf)

    p = sub.add_parser("verify", help="run a verification suite over a corpus")
    p.add_argument("--suite", required=True, help="one of 1.1, 1.2, 2.1, 2.2, 2.3, 2.4")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--nmax", type=int, default=6, help="generated corpus bound (default 6)")
    group.add_argument("--corpus", help="graph6 file to sweep instead of generating")
    p.add_argument("--leaf-bound", type=int, default=None, help="bound for suite 1.2")
    p.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--out", help="also write the report record to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo", help="deterministic walkthrough transcripts")
    p.add_argument("name", help="fig21, reduce, or lift")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("contract", help="contract one edge")
    p.add_argument("graph")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("reduce", help="contract a leaf-to-branch path of a tree")
    p.add_argument("graph")
    p.add_argument("tree", help="spanning tree edges, e.g. 0-1,1-2,2-3")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("preserve", help="find a leaf-count-preserving contraction")
    p.add_argument("graph")
    p.add_argument("tree", help="spanning tree edges, e.g. 0-1,1-2,2-3")
    p.set_defaults(func=cmd_preserve)

    p = sub.add_parser("lift", help="pull a tree of G/e back to G")
    p.add_argument("--relaxed", action="store_true", help="skip the neighborhood condition, allow one extra leaf")
    p.add_argument("graph")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("tree", help="spanning tree edges of G/e, in G/e vertex ids")
    p.set_defaults(func=cmd_lift)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, UnknownName, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InternalContradiction as e:
        print(f"internal contradiction (this is a bug): {e}", file=sys.stderr)
        return 4
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
