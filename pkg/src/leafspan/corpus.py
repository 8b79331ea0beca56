"""Graph corpora: exhaustive small-graph enumeration and named examples.

Generated corpora run over every *labeled* graph on {0..n-1}; no
isomorphism reduction.  An edge subset is a bitmask whose bit order equals
the graph6 column order, so a mask converts to a graph6 record without
building the graph.  File corpora are graph6 streams, one record per line.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Optional, Union

import numpy as np

from .graph6 import (
    Graph6Error,
    HEADER,
    _pack_body,
    _size_field,
    pairs_in_column_order,
    parse_graph6,
)
from .graphs import Graph, is_connected

GENERATED_NMAX = 8

#: labeled connected graph counts for n = 1..7, used as enumeration checks
CONNECTED_LABELED_COUNTS = (1, 1, 4, 38, 728, 26704, 1866256)

_CHUNK = 1 << 20


class UnknownName(LookupError):
    """No graph registered under the requested name."""


@dataclass(frozen=True)
class CorpusSpec:
    """What to iterate over: generated masks or a graph6 file."""

    n_min: int
    n_max: int
    source: str = "generated"
    path: Optional[Union[str, os.PathLike]] = None
    connected_only: bool = True

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError(f"need 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        if self.source == "generated":
            if self.n_max > GENERATED_NMAX:
                raise ValueError(f"generated mode is capped at n_max = {GENERATED_NMAX}")
        elif self.source == "file":
            if self.path is None:
                raise ValueError("file mode needs a path")
        else:
            raise ValueError(f"source must be 'generated' or 'file', not {self.source!r}")

    def describe(self) -> str:
        if self.source == "generated":
            kind = "connected labeled graphs" if self.connected_only else "labeled graphs"
            return f"generated {kind}, n={self.n_min}..{self.n_max}"
        return f"file {self.path}, n={self.n_min}..{self.n_max}"


def graph_from_mask(n: int, mask: int) -> Graph:
    """The graph on {0..n-1} whose edge set is the given bitmask."""
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for i, (u, v) in enumerate(pairs_in_column_order(n)):
        if mask >> i & 1:
            adj[u].add(v)
            adj[v].add(u)
    return Graph._from_adj({v: frozenset(ns) for v, ns in adj.items()})


def record_from_mask(n: int, mask: int) -> bytes:
    """graph6 record for a mask, without building the graph."""
    nbits = n * (n - 1) // 2
    if nbits == 0:
        return _size_field(n)
    # mask bit i is pair i; the record wants pair 0 first (top of the stream)
    stream = int(format(mask, f"0{nbits}b")[::-1], 2)
    return _size_field(n) + _pack_body(stream, nbits)


def _mask_stream(n: int, connected_only: bool) -> Iterator[int]:
    nbits = n * (n - 1) // 2
    total = 1 << nbits
    if n <= 2 or not connected_only:
        if connected_only:
            # n <= 2: only the full mask is connected (K1 or K2)
            yield total - 1
        else:
            yield from range(total)
        return
    pairs = pairs_in_column_order(n)
    full = (1 << n) - 1
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        masks = np.arange(start, stop, dtype=np.int64)
        adj = np.zeros((n, stop - start), dtype=np.int64)
        for i, (u, v) in enumerate(pairs):
            bit = (masks >> i) & 1
            adj[u] |= bit << v
            adj[v] |= bit << u
        reach = np.ones(stop - start, dtype=np.int64)
        for _ in range(n - 1):
            nxt = reach.copy()
            for v in range(n):
                nxt |= np.where((reach >> v) & 1 == 1, adj[v], 0)
            if np.array_equal(nxt, reach):
                break
            reach = nxt
        for m in masks[reach == full]:
            yield int(m)


def connected_masks(n: int) -> Iterator[int]:
    """Bitmasks of all connected labeled graphs on {0..n-1}, ascending."""
    return _mask_stream(n, True)


def _iter_file_records(path) -> Iterator[tuple[int, bytes]]:
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip(b"\r\n")
            if not line or line == HEADER:
                continue
            yield lineno, line


def enumerate_connected(spec: CorpusSpec) -> Iterator[Graph]:
    """Every corpus graph, in deterministic order.

    Generated mode: masks ascending within each n, n ascending.  File mode:
    records in file order, filtered to the requested vertex range (and to
    connected graphs unless the spec says otherwise); parse errors carry
    the line number.
    """
    if spec.source == "generated":
        for n in range(spec.n_min, spec.n_max + 1):
            for mask in _mask_stream(n, spec.connected_only):
                yield graph_from_mask(n, mask)
        return
    for lineno, line in _iter_file_records(spec.path):
        try:
            g = parse_graph6(line)
        except Graph6Error as e:
            raise type(e)(f"line {lineno}: {e}") from e
        if not spec.n_min <= g.vertex_count <= spec.n_max:
            continue
        if spec.connected_only and not is_connected(g):
            continue
        yield g


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    provenance: str


_FIG21 = Graph(range(7), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (4, 6)])

_REGISTRY = {
    "fig21": NamedGraph(
        "fig21",
        _FIG21,
        "seven-vertex example whose minimum spanning-tree leaf count rises "
        "from 3 to 4 when the edge between its two branch vertices (1 and 4) "
        "is contracted",
    ),
    "k14": NamedGraph(
        "k14",
        Graph(range(5), [(0, 4), (1, 4), (2, 4), (3, 4)]),
        "star with four leaves, the smallest graph excluded by the "
        "star-free hypothesis of the degree-sum sufficient condition",
    ),
}


def named_graph(name: str) -> NamedGraph:
    """Look up a registered example graph; ``cycle:n`` builds C_n on demand."""
    if name in _REGISTRY:
        return _REGISTRY[name]
    if name.startswith("cycle:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise UnknownName(f"bad cycle size in {name!r}") from None
        if n < 3:
            raise UnknownName(f"cycles need at least 3 vertices, got {n}")
        g = Graph(range(n), [(i, (i + 1) % n) for i in range(n)])
        return NamedGraph(name, g, f"cycle on {n} vertices")
    raise UnknownName(f"no graph registered under {name!r}")
