"""Empirical verification suites over graph corpora.

Each suite sweeps a corpus of connected graphs and checks one statement:

* 1.1  degree-sum condition implies a Hamiltonian path
* 1.2  star-free + sigma-4 condition implies few spanning-tree leaves
       (scan mode: also report the smallest bound that works empirically)
* 2.1  leaf-preserving contraction exists for every qualifying tree
* 2.2  leaf-to-branch path contraction removes exactly one leaf
* 2.3  exact lifts through condition-satisfying contractions, plus the
       spectrum-containment consequence
* 2.4  no contraction drops the minimum leaf count by 2, and the relaxed
       lift never costs more than one leaf

A counterexample from suites 2.1-2.4 indicates an implementation bug, not
a mathematical discovery; the statements are proved.  The sharding unit is
one graph, so every counterexample report is self-contained.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from multiprocessing import Pool
from typing import Iterator, Optional

from .constructions import (
    find_preserving_edge,
    lift_tree,
    lift_tree_relaxed,
    min_leaf_drop_violation,
    reduce_leaf_count,
)
from .corpus import CorpusSpec, _iter_file_records, _mask_stream, graph_from_mask, record_from_mask
from .graph6 import Graph6Error, _read_size, parse_graph6, write_graph6
from .graphs import Graph, contract, is_connected, is_k1r_free, neighborhood_condition, sigma_k
from .spanning import (
    check_ore_condition,
    enumerate_spanning_trees,
    has_hamiltonian_path,
    leaf_report,
    min_leaf_count,
    spanning_tree_count,
)

#: suites 2.3/2.4 skip a graph when one contraction has more trees than this
TREE_CAP = 5000

SUITE_IDS = ("1.1", "1.2", "2.1", "2.2", "2.3", "2.4")


@dataclass
class VerificationReport:
    """Outcome of one suite run.

    ``passed <= hypothesis_met <= checked``; counterexamples are nonempty
    exactly when passed < hypothesis_met.  ``skipped`` counts graphs set
    aside by the spanning-tree cap (they are in ``checked`` but in neither
    of the other tallies).  ``smallest_leaf_bound`` is filled by suite 1.2
    only: the largest minimum leaf count seen among hypothesis graphs.
    """

    suite: str
    corpus: str
    checked: int = 0
    hypothesis_met: int = 0
    passed: int = 0
    counterexamples: list[tuple[str, str]] = field(default_factory=list)
    wall_time: float = 0.0
    skipped: int = 0
    smallest_leaf_bound: Optional[int] = None

    @property
    def ok(self) -> bool:
        return not self.counterexamples


class _Outcome:
    __slots__ = ("record", "hypothesis", "ok", "detail", "skipped", "extra")

    def __init__(self, record, hypothesis, ok, detail=None, skipped=False, extra=None):
        self.record = record
        self.hypothesis = hypothesis
        self.ok = ok
        self.detail = detail
        self.skipped = skipped
        self.extra = extra


def _edges_str(edges) -> str:
    return ",".join(f"{u}-{v}" for u, v in sorted(tuple(e) for e in edges))


def _check_11(g: Graph, leaf_bound, tree_cap) -> tuple:
    if not check_ore_condition(g):
        return False, True, None, False, None
    if has_hamiltonian_path(g):
        return True, True, None, False, None
    return True, False, "satisfies the degree-sum condition but has no Hamiltonian path", False, None


def _check_12(g: Graph, leaf_bound, tree_cap) -> tuple:
    s4 = sigma_k(g, 4)
    hyp = is_k1r_free(g, 4) and (s4 is None or s4 >= g.vertex_count - 1)
    if not hyp:
        return False, True, None, False, None
    ml = min_leaf_count(g)
    if leaf_bound is not None and ml > leaf_bound:
        detail = f"minimum leaf count {ml} exceeds the requested bound {leaf_bound}"
        return True, False, detail, False, ml
    return True, True, None, False, ml


def _check_21(g: Graph, leaf_bound, tree_cap) -> tuple:
    n = g.vertex_count
    hyp = False
    for t in enumerate_spanning_trees(g):
        k = t.leaf_count()
        if n <= k + 1:
            continue
        hyp = True
        try:
            w = find_preserving_edge(g, t)
        except Exception as e:
            return True, False, f"tree {_edges_str(t.tree_edges)}: {type(e).__name__}: {e}", False, None
        if (
            w.tree_after.leaf_count() != k
            or w.tree_after.host != w.contracted.contracted
            or not g.has_edge(*w.edge)
        ):
            return True, False, f"tree {_edges_str(t.tree_edges)}: witness invariants fail for edge {tuple(w.edge)}", False, None
    return hyp, True, None, False, None


def _check_22(g: Graph, leaf_bound, tree_cap) -> tuple:
    hyp = False
    for t in enumerate_spanning_trees(g):
        k = t.leaf_count()
        if k < 3:
            continue
        hyp = True
        try:
            tr = reduce_leaf_count(g, t)
        except Exception as e:
            return True, False, f"tree {_edges_str(t.tree_edges)}: {type(e).__name__}: {e}", False, None
        path = t.path(tr.leaf, tr.branch_vertex)
        bad = (
            tr.tree_after.leaf_count() != k - 1
            or len(tr.edge_sequence) != len(path) - 1
            or any(t.degree(x) != 2 for x in path[1:-1])
            or tr.tree_after.host != tr.graph_sequence[-1].contracted
        )
        if bad:
            return True, False, f"tree {_edges_str(t.tree_edges)}: trace invariants fail (leaf {tr.leaf}, branch {tr.branch_vertex})", False, None
    return hyp, True, None, False, None


def _check_23(g: Graph, leaf_bound, tree_cap) -> tuple:
    qualifying = []
    for e in g.edges():
        if not neighborhood_condition(g, e):
            continue
        res = contract(g, e)
        if res.contracted.vertex_count < 2:
            continue
        if spanning_tree_count(res.contracted) > tree_cap:
            return False, True, None, True, None
        qualifying.append((e, res))
    if not qualifying:
        return False, True, None, False, None
    spectrum = set(leaf_report(g).spectrum)
    for e, res in qualifying:
        seen = set()
        for tp in enumerate_spanning_trees(res.contracted):
            seen.add(tp.leaf_count())
            try:
                w = lift_tree(g, e, res, tp)
            except Exception as ex:
                return True, False, f"edge {tuple(e)}, tree {_edges_str(tp.tree_edges)}: {type(ex).__name__}: {ex}", False, None
            if w.tree.leaf_count() != tp.leaf_count() or w.tree.host != g:
                return True, False, f"edge {tuple(e)}, tree {_edges_str(tp.tree_edges)}: lift changed the leaf count", False, None
        if not seen <= spectrum:
            return True, False, f"edge {tuple(e)}: contraction spectrum {sorted(seen)} not within {sorted(spectrum)}", False, None
    return True, True, None, False, None


def _check_24(g: Graph, leaf_bound, tree_cap) -> tuple:
    violation = min_leaf_drop_violation(g)
    if violation is not None:
        e, before, after = violation
        return True, False, f"contracting {tuple(e)} drops the minimum leaf count {before} -> {after}", False, None
    skipped = False
    for e in g.edges():
        res = contract(g, e)
        if res.contracted.vertex_count < 2:
            continue
        if spanning_tree_count(res.contracted) > tree_cap:
            skipped = True
            continue
        for tp in enumerate_spanning_trees(res.contracted):
            try:
                w = lift_tree_relaxed(g, e, res, tp)
            except Exception as ex:
                return True, False, f"edge {tuple(e)}, tree {_edges_str(tp.tree_edges)}: {type(ex).__name__}: {ex}", False, None
            if w.tree.leaf_count() > tp.leaf_count() + 1 or w.tree.host != g:
                return True, False, f"edge {tuple(e)}, tree {_edges_str(tp.tree_edges)}: relaxed lift gained more than one leaf", False, None
    if skipped:
        return False, True, None, True, None
    return True, True, None, False, None


_CHECKS = {
    "1.1": _check_11,
    "1.2": _check_12,
    "2.1": _check_21,
    "2.2": _check_22,
    "2.3": _check_23,
    "2.4": _check_24,
}

# worker-process state, set once per process by the pool initializer
_CTX: tuple = ()


def _init_worker(suite: str, leaf_bound, tree_cap) -> None:
    global _CTX
    _CTX = (suite, leaf_bound, tree_cap)


def _run_item(item) -> _Outcome:
    suite, leaf_bound, tree_cap = _CTX
    kind = item[0]
    if kind == "mask":
        _, n, mask = item
        g = graph_from_mask(n, mask)
        record = record_from_mask(n, mask).decode("ascii")
    else:
        _, lineno, line = item
        try:
            g = parse_graph6(line)
        except Graph6Error as e:
            raise type(e)(f"line {lineno}: {e}") from e
        record = line.decode("ascii")
        if not is_connected(g):
            return _Outcome(record, False, True)
    hyp, ok, detail, skipped, extra = _CHECKS[suite](g, leaf_bound, tree_cap)
    return _Outcome(record, hyp, ok, detail, skipped, extra)


def _items(spec: CorpusSpec) -> Iterator[tuple]:
    if spec.source == "generated":
        for n in range(max(spec.n_min, 3), spec.n_max + 1):
            for mask in _mask_stream(n, spec.connected_only):
                yield "mask", n, mask
        return
    lo = max(spec.n_min, 3)
    for lineno, line in _iter_file_records(spec.path):
        try:
            n, _ = _read_size(line)
        except Graph6Error as e:
            raise type(e)(f"line {lineno}: {e}") from e
        if lo <= n <= spec.n_max:
            yield "file", lineno, line


def run_suite(
    suite: str,
    corpus: CorpusSpec,
    leaf_bound: Optional[int] = None,
    workers: int = 1,
    tree_cap: int = TREE_CAP,
) -> VerificationReport:
    """Sweep the corpus with one suite's check and tally the outcomes.

    The theorems quantify over graphs with at least 3 vertices, so smaller
    corpus members are not streamed at all.  With ``workers > 1`` graphs
    fan out to a process pool; results are merged in stream order, so the
    report does not depend on the worker count.
    """
    if suite not in _CHECKS:
        raise ValueError(f"unknown suite {suite!r}; valid: {', '.join(SUITE_IDS)}")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    start = time.perf_counter()
    report = VerificationReport(suite=suite, corpus=corpus.describe())
    items = _items(corpus)
    if workers == 1:
        _init_worker(suite, leaf_bound, tree_cap)
        outcomes = map(_run_item, items)
        _reduce(report, outcomes)
    else:
        with Pool(workers, initializer=_init_worker, initargs=(suite, leaf_bound, tree_cap)) as pool:
            _reduce(report, pool.imap(_run_item, items, chunksize=64))
    report.wall_time = time.perf_counter() - start
    return report


def _reduce(report: VerificationReport, outcomes) -> None:
    best: Optional[int] = None
    for out in outcomes:
        report.checked += 1
        if out.skipped:
            report.skipped += 1
            continue
        if not out.hypothesis:
            continue
        report.hypothesis_met += 1
        if out.ok:
            report.passed += 1
        else:
            report.counterexamples.append((out.record, out.detail or ""))
        if out.extra is not None and (best is None or out.extra > best):
            best = out.extra
    if report.suite == "1.2":
        report.smallest_leaf_bound = best
