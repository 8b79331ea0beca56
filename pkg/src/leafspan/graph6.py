"""Reading and writing the graph6 line format.

One record per line: a size field (``chr(n + 63)`` for n <= 62, a ``~``
prefix plus 3 bytes for n <= 258047, ``~~`` plus 6 bytes above that)
followed by the upper triangle of the adjacency matrix, column by column
(x01, x02, x12, x03, ...), packed 6 bits per byte, most significant bit
first, zero padded.  Every payload byte is offset by 63, so records are
printable ASCII in the range 63..126.  An optional ``>>graph6<<`` header
prefix is accepted and skipped.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Union

from .graphs import Graph

HEADER = b">>graph6<<"

_MAX_SHORT = 62
_MAX_MEDIUM = 258047  # 2**18 - 1 is the field width; format caps here
_MAX_LONG = 68719476735


class Graph6Error(ValueError):
    """Base class for malformed graph6 input."""


class MalformedHeader(Graph6Error):
    """Input starts with '>>' but not with the exact '>>graph6<<' header."""


class BadByteRange(Graph6Error):
    """A payload byte falls outside the printable range 63..126."""


class TruncatedBody(Graph6Error):
    """The record ends before the size field or adjacency bits are complete."""


class TrailingGarbage(Graph6Error):
    """Extra bytes after the body, or nonzero padding bits in the last byte."""


@lru_cache(maxsize=None)
def pairs_in_column_order(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs in the order their bits appear in a record."""
    return tuple((u, v) for v in range(1, n) for u in range(v))


def _check_range(data: bytes, start: int, end: int) -> None:
    for i in range(start, end):
        b = data[i]
        if not 63 <= b <= 126:
            raise BadByteRange(f"byte {b} at position {i} outside 63..126")


def _read_size(data: bytes) -> tuple[int, int]:
    """Decode the size field; return (n, offset of first body byte)."""
    if len(data) == 0:
        raise TruncatedBody("empty record")
    if data[0] != 126:
        _check_range(data, 0, 1)
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise TruncatedBody("record ends inside the 8-byte size field")
        _check_range(data, 2, 8)
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise TruncatedBody("record ends inside the 4-byte size field")
    _check_range(data, 1, 4)
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(line: Union[bytes, str]) -> Graph:
    """Decode one graph6 record into a graph on vertices 0..n-1.

    A single trailing newline (with optional carriage return) is allowed;
    anything else after the body is an error, as are nonzero padding bits.
    """
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    if data.startswith(b">>"):
        if not data.startswith(HEADER):
            raise MalformedHeader("input starts with '>>' but not '>>graph6<<'")
        data = data[len(HEADER) :]
    if data.endswith(b"\n"):
        data = data[:-1]
        if data.endswith(b"\r"):
            data = data[:-1]
    n, at = _read_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) < at + nbytes:
        raise TruncatedBody(
            f"need {nbytes} adjacency bytes for n={n}, found {len(data) - at}"
        )
    if len(data) > at + nbytes:
        raise TrailingGarbage(f"{len(data) - at - nbytes} bytes after the body")
    _check_range(data, at, at + nbytes)
    bits = 0
    for b in data[at : at + nbytes]:
        bits = (bits << 6) | (b - 63)
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise TrailingGarbage("nonzero padding bits in the last body byte")
    bits >>= pad
    edges = []
    for i, (u, v) in enumerate(pairs_in_column_order(n)):
        if bits & (1 << (nbits - 1 - i)):
            edges.append((u, v))
    return Graph(range(n), edges)


def _size_field(n: int) -> bytes:
    if n < 0:
        raise ValueError("vertex count cannot be negative")
    if n <= _MAX_SHORT:
        return bytes((n + 63,))
    if n <= _MAX_MEDIUM:
        parts = [126]
        parts += [63 + ((n >> s) & 63) for s in (12, 6, 0)]
        return bytes(parts)
    if n <= _MAX_LONG:
        parts = [126, 126]
        parts += [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)]
        return bytes(parts)
    raise ValueError(f"{n} vertices exceeds the graph6 limit")


def _pack_body(bits: int, nbits: int) -> bytes:
    """Pack an nbits-wide bit stream (pair 0 at the top) into body bytes."""
    nbytes = (nbits + 5) // 6
    bits <<= 6 * nbytes - nbits
    return bytes(63 + ((bits >> (6 * (nbytes - 1 - i))) & 63) for i in range(nbytes))


def write_graph6(g: Graph) -> bytes:
    """Encode a graph whose vertices are exactly 0..n-1 (see ``densify``)."""
    n = g.vertex_count
    if g.vertices != tuple(range(n)):
        raise ValueError("vertex ids must be 0..n-1; relabel with densify() first")
    nbits = n * (n - 1) // 2
    bits = 0
    for u, v in pairs_in_column_order(n):
        bits = (bits << 1) | (1 if g.has_edge(u, v) else 0)
    return _size_field(n) + _pack_body(bits, nbits)


def densify(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Relabel vertices onto 0..n-1 in sorted order.

    Returns the relabeled graph and the old-to-new id mapping.
    """
    mapping = {v: i for i, v in enumerate(g.vertices)}
    edges = [(mapping[u], mapping[v]) for u, v in g.edges()]
    return Graph(range(g.vertex_count), edges), mapping
