"""Simple undirected graphs with value semantics.

Everything here is pure: operations never mutate their inputs and return
fresh graphs.  Vertex identifiers are small non-negative integers, but any
integers work; contraction always invents a fresh identifier for the merged
vertex so that chains of contractions stay unambiguous.
"""

from __future__ import annotations

import itertools
from collections import namedtuple
from dataclasses import dataclass
from typing import Iterable, Optional


class GraphError(Exception):
    """Base class for precondition violations raised by this package."""


class EdgeNotPresent(GraphError):
    """An operation was asked to use an edge the graph does not contain."""


class Edge(namedtuple("Edge", ("u", "v"))):
    """Unordered pair of distinct vertices; endpoints are stored sorted."""

    __slots__ = ()

    def __new__(cls, u: int, v: int) -> "Edge":
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        if u > v:
            u, v = v, u
        return super().__new__(cls, u, v)

    def other(self, x: int) -> int:
        """The endpoint that is not ``x``."""
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"vertex {x} is not an endpoint of {self}")


class Graph:
    """Immutable simple graph stored as vertex -> frozenset of neighbours.

    Invariants: no loops, no parallel edges, adjacency is symmetric, and
    every named endpoint is a vertex.  Instances compare and hash by value.
    """

    __slots__ = ("_adj", "_verts", "_edge_cache", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable = ()):
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge {u}-{v} names a vertex outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        self._verts = tuple(sorted(adj))
        self._adj = {v: frozenset(adj[v]) for v in self._verts}
        self._edge_cache: Optional[tuple[Edge, ...]] = None
        self._hash: Optional[int] = None

    @classmethod
    def from_edges(cls, edges: Iterable, isolated: Iterable[int] = ()) -> "Graph":
        """Build a graph whose vertex set is collected from the edges."""
        edges = [tuple(e) for e in edges]
        verts = set(isolated)
        for u, v in edges:
            verts.add(u)
            verts.add(v)
        return cls(verts, edges)

    @classmethod
    def _from_adj(cls, adj: dict[int, frozenset[int]]) -> "Graph":
        # Trusted fast path: adj must already satisfy the class invariants.
        g = cls.__new__(cls)
        g._verts = tuple(sorted(adj))
        g._adj = {v: adj[v] for v in g._verts}
        g._edge_cache = None
        g._hash = None
        return g

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._verts

    @property
    def vertex_count(self) -> int:
        return len(self._verts)

    @property
    def edge_count(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> tuple[Edge, ...]:
        """All edges, sorted by endpoint pair."""
        if self._edge_cache is None:
            self._edge_cache = tuple(
                sorted(Edge(u, v) for u, ns in self._adj.items() for v in ns if u < v)
            )
        return self._edge_cache

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple((v, self._adj[v]) for v in self._verts))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


@dataclass(frozen=True)
class ContractionResult:
    """Outcome of contracting one edge.

    ``origin`` maps every vertex of the contracted graph to the set of
    source vertices it stands for: singletons everywhere except at
    ``merged_vertex``, which stands for both endpoints of the contracted
    edge.
    """

    contracted: Graph
    merged_vertex: int
    origin: dict[int, frozenset[int]]


def _require_edge(g: Graph, e: Edge) -> None:
    if not g.has_edge(e.u, e.v):
        raise EdgeNotPresent(f"edge {e.u}-{e.v} not present")


def contract(g: Graph, e) -> ContractionResult:
    """Contract edge ``e``: delete it, identify its endpoints, keep the result simple.

    The merged vertex gets a fresh identifier (max vertex id + 1), never one
    of the old endpoints; provenance is recorded in the origin map.
    """
    e = Edge(*e)
    _require_edge(g, e)
    u, v = e.u, e.v
    w = max(g.vertices) + 1
    merged_nbrs = (g.neighbors(u) | g.neighbors(v)) - {u, v}
    adj: dict[int, frozenset[int]] = {}
    for x in g.vertices:
        if x == u or x == v:
            continue
        ns = g.neighbors(x)
        if u in ns or v in ns:
            ns = (ns - {u, v}) | {w}
        adj[x] = ns
    adj[w] = frozenset(merged_nbrs)
    origin = {x: frozenset((x,)) for x in adj}
    origin[w] = frozenset((u, v))
    return ContractionResult(Graph._from_adj(adj), w, origin)


def subdivide(g: Graph, e) -> tuple[Graph, int]:
    """Replace edge uv by a path u-w-v through a fresh vertex w.

    Returns the new graph and the fresh vertex id.
    """
    e = Edge(*e)
    _require_edge(g, e)
    u, v = e.u, e.v
    w = max(g.vertices) + 1
    adj = dict(g._adj)
    adj[u] = (adj[u] - {v}) | {w}
    adj[v] = (adj[v] - {u}) | {w}
    adj[w] = frozenset((u, v))
    return Graph._from_adj(adj), w


def edge_private_neighbors(g: Graph, e) -> tuple[frozenset[int], frozenset[int]]:
    """Neighbours of each endpoint of ``e``, excluding the other endpoint.

    Returned in endpoint order of the normalized edge (smaller id first).
    """
    e = Edge(*e)
    _require_edge(g, e)
    return g.neighbors(e.u) - {e.v}, g.neighbors(e.v) - {e.u}


def neighborhood_condition(g: Graph, e) -> bool:
    """True iff each endpoint has at most one private neighbour over the other.

    That is, both set differences N_e(u) - N_e(v) and N_e(v) - N_e(u) have
    size at most 1.  Holds on every edge of every cycle.
    """
    n_u, n_v = edge_private_neighbors(g, e)
    return len(n_u - n_v) <= 1 and len(n_v - n_u) <= 1


def is_connected(g: Graph) -> bool:
    """True iff the graph has a single component (empty and K1 count as connected)."""
    verts = g.vertices
    if len(verts) <= 1:
        return True
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)


def is_k1r_free(g: Graph, r: int) -> bool:
    """True iff no vertex has ``r`` pairwise non-adjacent neighbours.

    Equivalently the graph contains no induced star with one centre and r
    leaves.  Exact search, centred at each vertex in turn.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    for c in g.vertices:
        nbrs = sorted(g.neighbors(c))
        if len(nbrs) < r:
            continue
        for group in itertools.combinations(nbrs, r):
            if all(not g.has_edge(a, b) for a, b in itertools.combinations(group, 2)):
                return False
    return True


def sigma_k(g: Graph, k: int) -> Optional[int]:
    """Minimum total degree over independent vertex sets of size exactly ``k``.

    Returns None when the graph has no independent set of size k (the
    minimum over an empty collection).
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    best: Optional[int] = None
    for group in itertools.combinations(g.vertices, k):
        if all(not g.has_edge(a, b) for a, b in itertools.combinations(group, 2)):
            total = sum(g.degree(x) for x in group)
            if best is None or total < best:
                best = total
    return best
