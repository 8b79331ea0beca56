"""Constructive procedures on spanning trees under edge contraction.

Four operations, each returning a witness object that carries enough
structure to re-check its own guarantee:

* ``find_preserving_edge``: given a spanning tree with k leaves in a graph
  on more than k+1 vertices, produce an edge whose contraction still has a
  spanning tree with exactly k leaves (the image of the input tree).
* ``reduce_leaf_count``: given a tree with k >= 3 leaves, contract the path
  from a leaf to the nearest branch vertex; the image tree has k-1 leaves.
* ``lift_tree``: invert one contraction.  When the contracted edge
  satisfies the neighborhood condition, a k-leaf spanning tree of G/e pulls
  back to a k-leaf spanning tree of G.
* ``lift_tree_relaxed``: the same pull-back without any condition, paying
  at most one extra leaf.

Every choice the constructions make (which leaf, which branch vertex,
which attachment endpoint) is tie-broken toward the smallest vertex id, so
identical inputs always produce identical witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import (
    ContractionResult,
    Edge,
    Graph,
    GraphError,
    contract,
    is_connected,
    neighborhood_condition,
)
from .spanning import NotConnected, SpanningTree, TooSmall, min_leaf_count


class HypothesisViolated(GraphError):
    """The input does not satisfy the operation's stated hypothesis."""


class ConditionViolated(GraphError):
    """The contracted edge fails the neighborhood condition."""


class InternalContradiction(RuntimeError):
    """A property the underlying argument guarantees failed to hold.

    Seeing this means the implementation (not the caller) is wrong.
    """


class NoValidAttachment(InternalContradiction):
    """No admissible choice of attachment vertices x1, x2 exists."""


@dataclass(frozen=True)
class PreservationWitness:
    """Edge whose contraction keeps a spanning tree with the same leaf count."""

    edge: Edge
    contracted: ContractionResult
    tree_after: SpanningTree


@dataclass(frozen=True)
class ReductionTrace:
    """Contraction chain that removes exactly one leaf from a spanning tree.

    ``edge_sequence`` lists the contracted path edges in source-graph ids;
    ``edge_sequence_current`` lists the same edges as they are named inside
    each intermediate graph (the head of the path is a fresh merged vertex
    from the second step on).
    """

    leaf: int
    branch_vertex: int
    edge_sequence: tuple[Edge, ...]
    edge_sequence_current: tuple[Edge, ...]
    graph_sequence: tuple[ContractionResult, ...]
    tree_after: SpanningTree


@dataclass(frozen=True)
class LiftWitness:
    """Spanning tree of the source graph recovered from a contraction.

    ``attachments`` maps each former tree neighbor of the merged vertex to
    the edge endpoint it was re-attached to; empty in the subdivision case.
    """

    tree: SpanningTree
    case_used: str
    attachments: dict[int, int]
    x1: Optional[int] = None
    x2: Optional[int] = None


def composed_origin(chain: Sequence[ContractionResult]) -> dict[int, frozenset[int]]:
    """Origin map of a contraction chain: final vertex -> source vertices."""
    if not chain:
        return {}
    acc = {v: set(s) for v, s in chain[0].origin.items()}
    for res in chain[1:]:
        acc = {
            v: {src for mid in s for src in acc[mid]} for v, s in res.origin.items()
        }
    return {v: frozenset(s) for v, s in acc.items()}


def _require_spans(t: SpanningTree, g: Graph, what: str) -> None:
    if t.host != g:
        raise HypothesisViolated(f"{what} does not span the given graph")


def _contract_tree(t: SpanningTree, res: ContractionResult, e: Edge) -> SpanningTree:
    """Image of a spanning tree under contraction of one of its edges."""
    w = res.merged_vertex
    ends = {e.u, e.v}

    def img(x: int) -> int:
        return w if x in ends else x

    mapped = [Edge(img(a), img(b)) for a, b in t.tree_edges if Edge(a, b) != e]
    return SpanningTree(res.contracted, mapped)


def find_preserving_edge(g: Graph, t: SpanningTree) -> PreservationWitness:
    """An edge whose contraction admits a spanning tree with the same leaves.

    Requires leaf_count(t) = k >= 2 and |V| > k + 1.  Takes the two
    smallest non-leaf vertices u, v of t, walks the tree path from u toward
    v, and contracts the first edge of that path.  Both endpoints have tree
    degree at least 2, so no leaf is created or destroyed.
    """
    _require_spans(t, g, "tree")
    k = t.leaf_count()
    n = g.vertex_count
    if k < 2:
        raise HypothesisViolated(f"need a tree with at least 2 leaves, got {k}")
    if n <= k + 1:
        raise HypothesisViolated(f"need more than {k + 1} vertices, graph has {n}")
    nonleaves = [x for x in g.vertices if t.degree(x) != 1]
    if len(nonleaves) <= 1:
        raise InternalContradiction(
            "fewer than two non-leaf vertices despite n > k + 1"
        )
    u, v = nonleaves[0], nonleaves[1]
    e = Edge(u, t.path(u, v)[1])
    res = contract(g, e)
    after = _contract_tree(t, res, e)
    if after.leaf_count() != k:
        raise InternalContradiction(
            f"contracting {e} changed the leaf count {k} -> {after.leaf_count()}"
        )
    return PreservationWitness(e, res, after)


def reduce_leaf_count(g: Graph, t: SpanningTree) -> ReductionTrace:
    """Contract a leaf-to-branch path, lowering the leaf count by one.

    Requires leaf_count(t) = k >= 3 (which forces a branch vertex to
    exist).  Picks the smallest leaf, then the nearest branch vertex (ties
    to the smallest id), and contracts the connecting path edge by edge.
    """
    _require_spans(t, g, "tree")
    k = t.leaf_count()
    if k < 3:
        raise HypothesisViolated(f"need a tree with at least 3 leaves, got {k}")
    leaf = min(t.leaves())
    branches = [x for x in g.vertices if t.degree(x) > 2]
    if not branches:
        raise InternalContradiction("no branch vertex despite 3 or more leaves")
    # tree distances from the leaf, breadth first
    dist = {leaf: 0}
    frontier = [leaf]
    while frontier:
        nxt = []
        for x in frontier:
            for y in t.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    branch = min(branches, key=lambda x: (dist[x], x))
    path = t.path(leaf, branch)
    for x in path[1:-1]:
        if t.degree(x) != 2:
            raise InternalContradiction(
                f"interior path vertex {x} has tree degree {t.degree(x)}, not 2"
            )
    source_edges = tuple(Edge(a, b) for a, b in zip(path, path[1:]))
    current_edges: list[Edge] = []
    chain: list[ContractionResult] = []
    cur_g = g
    cur_t = t
    head = path[0]
    for x in path[1:]:
        e = Edge(head, x)
        res = contract(cur_g, e)
        cur_t = _contract_tree(cur_t, res, e)
        current_edges.append(e)
        chain.append(res)
        cur_g = res.contracted
        head = res.merged_vertex
    if cur_t.leaf_count() != k - 1:
        raise InternalContradiction(
            f"path contraction gave {cur_t.leaf_count()} leaves, expected {k - 1}"
        )
    return ReductionTrace(
        leaf, branch, source_edges, tuple(current_edges), tuple(chain), cur_t
    )


def _check_lift_inputs(
    g: Graph, e: Edge, contraction: ContractionResult, t_prime: SpanningTree
) -> tuple[int, int, int]:
    e = Edge(*e)
    redone = contract(g, e)
    if (
        redone.contracted != contraction.contracted
        or redone.merged_vertex != contraction.merged_vertex
        or redone.origin != contraction.origin
    ):
        raise HypothesisViolated("contraction record does not match contract(g, e)")
    _require_spans(t_prime, contraction.contracted, "tree")
    if contraction.contracted.vertex_count < 2:
        # A one-vertex image has a 0-leaf tree; no lift can preserve that.
        raise HypothesisViolated("cannot lift from a single-vertex contraction")
    return e.u, e.v, contraction.merged_vertex


def _rename(x: int, old: int, new: int) -> int:
    return new if x == old else x


def lift_tree(
    g: Graph, e: Edge, contraction: ContractionResult, t_prime: SpanningTree
) -> LiftWitness:
    """Pull a spanning tree of G/e back to G with the same leaf count.

    Needs the neighborhood condition on e = uv: each endpoint has at most
    one private neighbor outside the other's.  Two cases, named by what
    happens to the merged vertex w.

    Subdivision (w is a leaf of t_prime with tree neighbor y): the lone
    tree edge wy becomes a two-edge path through whichever endpoint is
    adjacent to y, and w's leaf role passes to the other endpoint.

    Replacement (w is internal): w becomes the edge uv; a tree neighbor x1
    adjacent to v and another x2 adjacent to u anchor the two sides, and
    every remaining neighbor attaches to v when possible, else to u.  The
    condition bounds each endpoint's private neighbors, which is exactly
    what makes x1 and x2 exist.
    """
    u, v, w = _check_lift_inputs(g, e, contraction, t_prime)
    if not neighborhood_condition(g, Edge(u, v)):
        raise ConditionViolated(
            f"edge {u}-{v} fails the neighborhood condition in the source graph"
        )
    k = t_prime.leaf_count()
    nbrs = t_prime.neighbors(w)
    keep = [ed for ed in t_prime.sorted_edges() if w not in ed]

    if len(nbrs) == 1:
        y = nbrs[0]
        if g.has_edge(v, y):
            edges = [Edge(_rename(a, w, u), _rename(b, w, u)) for a, b in keep]
            edges += [Edge(u, v), Edge(v, y)]
            attachments: dict[int, int] = {y: v}
        elif g.has_edge(u, y):
            edges = [Edge(_rename(a, w, v), _rename(b, w, v)) for a, b in keep]
            edges += [Edge(u, v), Edge(u, y)]
            attachments = {y: u}
        else:
            raise InternalContradiction(
                f"{y} neighbors the merged vertex but neither endpoint of {u}-{v}"
            )
        tree = SpanningTree(g, edges)
        if tree.leaf_count() != k:
            raise InternalContradiction(
                f"subdivision lift changed the leaf count {k} -> {tree.leaf_count()}"
            )
        return LiftWitness(tree, "subdivision", attachments)

    adj_u = [y for y in nbrs if g.has_edge(u, y)]
    adj_v = [y for y in nbrs if g.has_edge(v, y)]
    only_u = [y for y in adj_u if y not in adj_v]
    only_v = [y for y in adj_v if y not in adj_u]
    x1 = only_v[0] if only_v else min(adj_v, default=None)
    if x1 is None:
        raise NoValidAttachment(f"no tree neighbor of {w} is adjacent to {v}")
    rem_u = [y for y in only_u if y != x1]
    x2 = rem_u[0] if rem_u else min((y for y in adj_u if y != x1), default=None)
    if x2 is None:
        raise NoValidAttachment(f"no tree neighbor of {w} but {x1} is adjacent to {u}")
    attachments = {x1: v, x2: u}
    for y in nbrs:
        if y in attachments:
            continue
        attachments[y] = v if g.has_edge(v, y) else u
    edges = [Edge(*ed) for ed in keep]
    edges.append(Edge(u, v))
    edges += [Edge(y, end) for y, end in attachments.items()]
    tree = SpanningTree(g, edges)
    if tree.leaf_count() != k:
        raise InternalContradiction(
            f"replacement lift changed the leaf count {k} -> {tree.leaf_count()}"
        )
    return LiftWitness(tree, "replacement", attachments, x1=x1, x2=x2)


def lift_tree_relaxed(
    g: Graph, e: Edge, contraction: ContractionResult, t_prime: SpanningTree
) -> LiftWitness:
    """Pull back a spanning tree through any contraction, one extra leaf at most.

    No condition on the edge: the merged vertex becomes the edge uv and
    every former tree neighbor attaches to u when adjacent, else to v.
    When all of them land on one endpoint the other endpoint dangles as a
    new leaf, hence the +1.
    """
    u, v, w = _check_lift_inputs(g, e, contraction, t_prime)
    k = t_prime.leaf_count()
    nbrs = t_prime.neighbors(w)
    keep = [Edge(*ed) for ed in t_prime.sorted_edges() if w not in ed]
    attachments = {y: (u if g.has_edge(u, y) else v) for y in nbrs}
    edges = keep + [Edge(u, v)] + [Edge(y, end) for y, end in attachments.items()]
    tree = SpanningTree(g, edges)
    if tree.leaf_count() > k + 1:
        raise InternalContradiction(
            f"relaxed lift has {tree.leaf_count()} leaves, allowed at most {k + 1}"
        )
    return LiftWitness(tree, "relaxed", attachments)


def min_leaf_drop_violation(g: Graph) -> Optional[tuple[Edge, int, int]]:
    """First edge whose contraction drops the minimum leaf count by 2+.

    Returns (edge, min_leaves before, min_leaves after) or None.  The
    relaxed lift argument says None is the only possible answer; anything
    else is an implementation bug worth reporting.
    """
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    if g.vertex_count < 3:
        raise TooSmall("need at least 3 vertices")
    base = min_leaf_count(g)
    for e in g.edges():
        after = min_leaf_count(contract(g, e).contracted)
        if after < base - 1:
            return e, base, after
    return None


def check_min_leaf_drop(g: Graph) -> bool:
    """True iff no single contraction lowers the minimum leaf count by 2+."""
    return min_leaf_drop_violation(g) is None
