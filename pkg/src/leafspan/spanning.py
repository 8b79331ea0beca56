"""Spanning trees and their leaf counts.

The central object is the leaf spectrum of a connected graph: the set of
integers k for which some spanning tree has exactly k leaves.  The minimum
of the spectrum is 2 exactly when the graph has a Hamiltonian path (for two
or more vertices), which gives two independent algorithms to cross-check:
a leaf-count search over trees and a path backtracker.

The exact solver enumerates spanning trees outright while the tree count is
small and switches to a depth-first search over edge subsets with
forced-leaf pruning beyond ``ENUMERATION_THRESHOLD``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

import numpy as np

from .graphs import Edge, Graph, GraphError, is_connected, is_k1r_free, sigma_k

#: leaf_report enumerates every spanning tree when there are at most this many
ENUMERATION_THRESHOLD = 2000


class NotConnected(GraphError):
    """The operation needs a connected graph."""


class TooSmall(GraphError):
    """The graph has fewer vertices than the operation's hypothesis allows."""


class NotATree(GraphError):
    """An edge set that was supposed to be a spanning tree is not one."""


class SpanningTree:
    """A spanning tree of a host graph, held as an edge subset.

    Construction checks the invariants: exactly n-1 edges, all present in
    the host, connecting every vertex (which forces acyclicity).
    """

    __slots__ = ("host", "tree_edges", "_adj")

    def __init__(self, host: Graph, edges: Iterable):
        tree_edges = frozenset(Edge(*e) for e in edges)
        n = host.vertex_count
        if len(tree_edges) != n - 1:
            raise NotATree(f"expected {n - 1} edges, got {len(tree_edges)}")
        adj: dict[int, list[int]] = {v: [] for v in host.vertices}
        for u, v in tree_edges:
            if not host.has_edge(u, v):
                raise NotATree(f"edge {u}-{v} is not an edge of the host graph")
            adj[u].append(v)
            adj[v].append(u)
        if n > 0:
            start = host.vertices[0]
            seen = {start}
            stack = [start]
            while stack:
                for y in adj[stack.pop()]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != n:
                raise NotATree("edge set does not connect all vertices")
        self.host = host
        self.tree_edges = tree_edges
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @classmethod
    def _trusted(cls, host: Graph, edges: Iterable[Edge]) -> "SpanningTree":
        # Fast path for edge sets that are spanning trees by construction.
        t = cls.__new__(cls)
        t.host = host
        t.tree_edges = frozenset(edges)
        adj: dict[int, list[int]] = {v: [] for v in host.vertices}
        for u, v in t.tree_edges:
            adj[u].append(v)
            adj[v].append(u)
        t._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        return t

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in self.host.vertices if len(self._adj[v]) == 1)

    def leaf_count(self) -> int:
        return sum(1 for ns in self._adj.values() if len(ns) == 1)

    def path(self, a: int, b: int) -> list[int]:
        """The unique tree path from a to b, inclusive; [a] when a == b.

        The second entry of the result is a's neighbour towards b.
        """
        if a not in self._adj or b not in self._adj:
            raise ValueError(f"{a} or {b} is not a vertex of the host graph")
        if a == b:
            return [a]
        parent: dict[int, int] = {a: a}
        stack = [a]
        while stack:
            x = stack.pop()
            if x == b:
                break
            for y in self._adj[x]:
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        out = [b]
        while out[-1] != a:
            out.append(parent[out[-1]])
        out.reverse()
        return out

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.tree_edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.tree_edges == other.tree_edges and self.host == other.host

    def __hash__(self) -> int:
        return hash(self.tree_edges)

    def __repr__(self) -> str:
        return f"SpanningTree({len(self.tree_edges) + 1} vertices, {self.leaf_count()} leaves)"


@dataclass(frozen=True)
class LeafReport:
    """Exact answer to every spanning k-leaf question about one graph."""

    min_leaves: int
    witness: SpanningTree
    spectrum: frozenset[int]


class ConditionReport(NamedTuple):
    hypothesis_holds: bool
    conclusion_holds: bool


def enumerate_spanning_trees(g: Graph) -> Iterator[SpanningTree]:
    """Yield every spanning tree of ``g`` exactly once.

    Recursive include/exclude over the sorted edge list: including an edge
    merges its endpoints (contraction), excluding one is allowed only when
    the remaining edges still connect the graph (deletion of a non-bridge).
    Deterministic order for a fixed input.
    """
    if not is_connected(g):
        raise NotConnected("spanning trees exist only for connected graphs")
    n = g.vertex_count
    if n == 0:
        return
    if n == 1:
        yield SpanningTree(g, ())
        return
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    edges = g.edges()
    m = len(edges)
    eidx = [(index[e.u], index[e.v]) for e in edges]

    parent = list(range(n))
    rank = [0] * n

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[Edge] = []

    def connects_without(start: int) -> bool:
        # Do chosen + edges[start:] still span all vertices?
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in chosen:
            a, b = index[e.u], index[e.v]
            adj[a].append(b)
            adj[b].append(a)
        for j in range(start, m):
            a, b = eidx[j]
            adj[a].append(b)
            adj[b].append(a)
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            for y in adj[stack.pop()]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        return count == n

    def rec(i: int) -> Iterator[SpanningTree]:
        if len(chosen) == n - 1:
            yield SpanningTree._trusted(g, chosen)
            return
        if i == m:
            return
        a, b = eidx[i]
        ra, rb = find(a), find(b)
        if ra != rb:
            # include edges[i]
            if rank[ra] < rank[rb]:
                ra, rb = rb, ra
            parent[rb] = ra
            bumped = rank[ra] == rank[rb]
            if bumped:
                rank[ra] += 1
            chosen.append(edges[i])
            yield from rec(i + 1)
            chosen.pop()
            if bumped:
                rank[ra] -= 1
            parent[rb] = rb
        # exclude edges[i] unless it is a bridge of what remains
        if connects_without(i + 1):
            yield from rec(i + 1)

    yield from rec(0)


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees, by the determinant of a reduced Laplacian."""
    n = g.vertex_count
    if n == 0:
        return 0
    if n == 1:
        return 1
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    lap = np.zeros((n, n))
    for v in verts:
        i = index[v]
        lap[i, i] = g.degree(v)
        for w in g.neighbors(v):
            lap[i, index[w]] = -1.0
    return int(round(np.linalg.det(lap[1:, 1:])))


def _search_arrays(g: Graph):
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    edges = g.edges()
    eidx = [(index[e.u], index[e.v]) for e in edges]
    avail = [0] * len(verts)
    for a, b in eidx:
        avail[a] += 1
        avail[b] += 1
    return verts, edges, eidx, avail


def _min_leaf_search(g: Graph) -> tuple[int, list[Edge]]:
    """Exact minimum leaf count via include/exclude DFS with forced-leaf pruning.

    A vertex whose current tree degree plus remaining incident edges is at
    most 1 will be a leaf in every completion, so the count of such vertices
    bounds every completion from below.  The search stops as soon as the
    static lower bound (degree-1 vertices of the graph, at least 2) is met.
    """
    n = g.vertex_count
    verts, edges, eidx, avail = _search_arrays(g)
    m = len(edges)
    floor = max(2, sum(1 for v in verts if g.degree(v) == 1))
    best = n
    best_edges: list[Edge] = []
    deg = [0] * n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[Edge] = []

    def rec(i: int) -> bool:
        # Returns True when the search can stop globally.
        nonlocal best, best_edges
        count = len(chosen)
        if count == n - 1:
            leaves = deg.count(1)
            if leaves < best:
                best = leaves
                best_edges = chosen.copy()
            return best <= floor
        if m - i < n - 1 - count:
            return False
        forced = 0
        for v in range(n):
            dv = deg[v]
            if dv + avail[v] <= 1:
                if dv + avail[v] == 0:
                    return False  # vertex can never be reached
                forced += 1
        if forced >= best:
            return False
        a, b = eidx[i]
        avail[a] -= 1
        avail[b] -= 1
        try:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
                deg[a] += 1
                deg[b] += 1
                chosen.append(edges[i])
                stop = rec(i + 1)
                chosen.pop()
                deg[a] -= 1
                deg[b] -= 1
                parent[rb] = rb
                if stop:
                    return True
            return rec(i + 1)
        finally:
            avail[a] += 1
            avail[b] += 1

    rec(0)
    return best, best_edges


def _exact_leaf_search(g: Graph, k: int) -> bool:
    """Is there a spanning tree with exactly k leaves?  DFS with two-sided pruning."""
    n = g.vertex_count
    verts, edges, eidx, avail = _search_arrays(g)
    m = len(edges)
    deg = [0] * n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int, count: int) -> bool:
        if count == n - 1:
            return deg.count(1) == k
        if m - i < n - 1 - count:
            return False
        forced = 0
        possible = 0
        for v in range(n):
            dv = deg[v]
            if dv <= 1:
                possible += 1
                if dv + avail[v] == 0:
                    return False
                if dv + avail[v] == 1:
                    forced += 1
        if forced > k or possible < k:
            return False
        a, b = eidx[i]
        avail[a] -= 1
        avail[b] -= 1
        try:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
                deg[a] += 1
                deg[b] += 1
                if rec(i + 1, count + 1):
                    return True
                deg[a] -= 1
                deg[b] -= 1
                parent[rb] = rb
            return rec(i + 1, count)
        finally:
            avail[a] += 1
            avail[b] += 1

    return rec(0, 0)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnected("graph is not connected")


def min_leaf_count(g: Graph) -> int:
    """Smallest leaf count over all spanning trees (0 for K1, 2 for K2)."""
    _require_connected(g)
    n = g.vertex_count
    if n == 0:
        raise NotConnected("empty graph has no spanning tree")
    if n == 1:
        return 0
    if n == 2:
        return 2
    return _min_leaf_search(g)[0]


def leaf_report(g: Graph) -> LeafReport:
    """Minimum leaf count, a witness tree, and the full leaf spectrum.

    Small instances (tree count at most ENUMERATION_THRESHOLD) are handled
    by plain enumeration; larger ones by the pruned searches, one membership
    query per candidate leaf count.
    """
    _require_connected(g)
    n = g.vertex_count
    if n == 0:
        raise NotConnected("empty graph has no spanning tree")
    if n == 1:
        t = SpanningTree(g, ())
        return LeafReport(0, t, frozenset((0,)))
    if n == 2:
        t = SpanningTree(g, g.edges())
        return LeafReport(2, t, frozenset((2,)))
    if spanning_tree_count(g) <= ENUMERATION_THRESHOLD:
        spectrum: set[int] = set()
        best: Optional[SpanningTree] = None
        best_k = n
        for t in enumerate_spanning_trees(g):
            k = t.leaf_count()
            spectrum.add(k)
            if k < best_k:
                best_k = k
                best = t
        assert best is not None
        return LeafReport(best_k, best, frozenset(spectrum))
    best_k, best_edges = _min_leaf_search(g)
    spectrum = {best_k}
    for k in range(best_k + 1, n):
        if _exact_leaf_search(g, k):
            spectrum.add(k)
    return LeafReport(best_k, SpanningTree(g, best_edges), frozenset(spectrum))


def has_k_end_tree(g: Graph, k: int) -> bool:
    """Does some spanning tree have exactly ``k`` leaves?"""
    _require_connected(g)
    n = g.vertex_count
    if n == 0:
        raise NotConnected("empty graph has no spanning tree")
    if n == 1:
        return k == 0
    if n == 2:
        return k == 2
    if k < 2 or k > n - 1:
        return False
    return _exact_leaf_search(g, k)


def has_k_ended_tree(g: Graph, k: int) -> bool:
    """Does some spanning tree have at most ``k`` leaves?"""
    return min_leaf_count(g) <= k


def has_hamiltonian_path(g: Graph) -> bool:
    """True iff some path visits every vertex.

    Independent of the leaf-count machinery: plain backtracking over
    adjacency bitmasks, after cheap rejections (disconnected, or more than
    two vertices of degree 1).
    """
    n = g.vertex_count
    if n <= 1:
        return True
    if not is_connected(g):
        return False
    if sum(1 for v in g.vertices if g.degree(v) == 1) > 2:
        return False
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * n
    for v in verts:
        for w in g.neighbors(v):
            adj[index[v]] |= 1 << index[w]
    full = (1 << n) - 1

    def extend(last: int, visited: int) -> bool:
        if visited == full:
            return True
        cand = adj[last] & ~visited
        while cand:
            low = cand & -cand
            nxt = low.bit_length() - 1
            if extend(nxt, visited | low):
                return True
            cand ^= low
        return False

    return any(extend(s, 1 << s) for s in range(n))


def check_ore_condition(g: Graph) -> bool:
    """Degree-sum test: every non-adjacent pair sums to at least n - 1.

    Vacuously true on complete graphs.  Needs at least 3 vertices.
    """
    n = g.vertex_count
    if n < 3:
        raise TooSmall("the degree-sum condition is stated for graphs on 3+ vertices")
    verts = g.vertices
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if not g.has_edge(u, v) and g.degree(u) + g.degree(v) < n - 1:
                return False
    return True


def check_sigma4_condition(g: Graph, leaf_bound: int) -> ConditionReport:
    """Hypothesis and conclusion of the sigma-4 sufficient condition.

    Hypothesis: no induced star with 4 leaves, and every independent 4-set
    has total degree at least n - 1 (vacuously true when no independent
    4-set exists).  Conclusion: some spanning tree has at most
    ``leaf_bound`` leaves.  The bound is a parameter on purpose; nothing is
    hard-coded.
    """
    _require_connected(g)
    s4 = sigma_k(g, 4)
    hypothesis = is_k1r_free(g, 4) and (s4 is None or s4 >= g.vertex_count - 1)
    conclusion = has_k_ended_tree(g, leaf_bound)
    return ConditionReport(hypothesis, conclusion)
