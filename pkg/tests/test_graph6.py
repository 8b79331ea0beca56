import itertools
import random

import pytest

from leafspan.graph6 import (
    BadByteRange,
    MalformedHeader,
    TrailingGarbage,
    TruncatedBody,
    densify,
    pairs_in_column_order,
    parse_graph6,
    write_graph6,
)
from leafspan.graphs import Graph


def test_hand_decoded_star():
    g = parse_graph6("D?{")
    assert g.vertex_count == 5
    assert {tuple(e) for e in g.edges()} == {(0, 4), (1, 4), (2, 4), (3, 4)}


def test_hand_decoded_k2():
    g = parse_graph6("A_")
    assert g.vertex_count == 2
    assert g.has_edge(0, 1)


def test_single_vertex():
    g = parse_graph6("@")
    assert g.vertex_count == 1
    assert g.edge_count == 0


def test_empty_graph_record():
    assert parse_graph6("?").vertex_count == 0
    assert write_graph6(Graph()) == b"?"


def test_header_is_skipped():
    assert parse_graph6(">>graph6<<A_") == parse_graph6("A_")


def test_trailing_newline_allowed():
    assert parse_graph6(b"D?{\n") == parse_graph6("D?{")
    assert parse_graph6(b"D?{\r\n") == parse_graph6("D?{")


def test_bytes_and_str_agree():
    assert parse_graph6(b"FhSGO") == parse_graph6("FhSGO")


@pytest.mark.parametrize(
    "line,exc",
    [
        (">>graph5<<A_", MalformedHeader),
        (">>", MalformedHeader),
        ("", TruncatedBody),
        ("A", TruncatedBody),
        ("D?", TruncatedBody),
        ("~?", TruncatedBody),
        ("D?{X", TrailingGarbage),
        ("@?", TrailingGarbage),
        ("Aa", TrailingGarbage),      # nonzero padding bits
        (bytes([67, 20]), BadByteRange),
        (bytes([200]), BadByteRange),
    ],
)
def test_malformed_records(line, exc):
    with pytest.raises(exc):
        parse_graph6(line)


def test_error_classes_share_a_base():
    from leafspan.graph6 import Graph6Error

    for exc in (MalformedHeader, BadByteRange, TruncatedBody, TrailingGarbage):
        assert issubclass(exc, Graph6Error)
    assert issubclass(Graph6Error, ValueError)


def test_write_requires_dense_ids():
    g = Graph([1, 2, 3], [(1, 2)])
    with pytest.raises(ValueError):
        write_graph6(g)


def test_densify():
    g = Graph([3, 7, 12], [(3, 7), (7, 12)])
    d, mapping = densify(g)
    assert mapping == {3: 0, 7: 1, 12: 2}
    assert d == Graph(range(3), [(0, 1), (1, 2)])
    assert parse_graph6(write_graph6(d)) == d


def test_roundtrip_all_graphs_up_to_n5():
    for n in range(6):
        pairs = pairs_in_column_order(n)
        for mask in range(1 << len(pairs)):
            g = Graph(range(n), [p for i, p in enumerate(pairs) if mask >> i & 1])
            rec = write_graph6(g)
            assert parse_graph6(rec) == g


def test_roundtrip_seeded_random_up_to_n20():
    rng = random.Random(2026)
    for _ in range(1000):
        n = rng.randrange(1, 21)
        edges = [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.3]
        g = Graph(range(n), edges)
        rec = write_graph6(g)
        assert parse_graph6(rec) == g
        assert all(63 <= b <= 126 for b in rec)


def test_large_size_field_forms():
    # boundary of the one-byte form, then the 4-byte form
    for n in (62, 63, 100):
        g = Graph(range(n), [(0, i) for i in range(1, n)])
        rec = write_graph6(g)
        back = parse_graph6(rec)
        assert back.vertex_count == n
        assert back == g


def test_agrees_with_networkx_on_samples():
    nx = pytest.importorskip("networkx")
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(1, 9)
        edges = [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        g = Graph(range(n), edges)
        rec = write_graph6(g)
        gx = nx.from_graph6_bytes(rec)
        assert set(gx.nodes) == set(g.vertices)
        assert {tuple(sorted(e)) for e in gx.edges} == {tuple(e) for e in g.edges()}
        # and the reverse direction
        assert parse_graph6(nx.to_graph6_bytes(gx, header=False).strip()) == g
