import pytest

from leafspan.corpus import (
    CONNECTED_LABELED_COUNTS,
    CorpusSpec,
    NamedGraph,
    UnknownName,
    connected_masks,
    enumerate_connected,
    graph_from_mask,
    named_graph,
    record_from_mask,
)
from leafspan.graph6 import TruncatedBody, parse_graph6, write_graph6
from leafspan.graphs import Graph, is_connected


class TestCorpusSpec:
    def test_describe(self):
        assert "n=1..4" in CorpusSpec(1, 4).describe()
        spec = CorpusSpec(3, 6, source="file", path="x.g6")
        assert "x.g6" in spec.describe()

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(n_min=0, n_max=3),
            dict(n_min=4, n_max=2),
            dict(n_min=1, n_max=9),                      # generated cap is 8
            dict(n_min=1, n_max=3, source="file"),        # needs a path
            dict(n_min=1, n_max=3, source="???"),
        ],
    )
    def test_invalid_specs(self, kwargs):
        with pytest.raises(ValueError):
            CorpusSpec(**kwargs)


class TestGeneratedEnumeration:
    def test_connected_counts_match_known_values(self):
        for n in range(1, 7):
            assert sum(1 for _ in connected_masks(n)) == CONNECTED_LABELED_COUNTS[n - 1]

    def test_n3_graphs_are_the_three_paths_and_triangle(self):
        graphs = list(enumerate_connected(CorpusSpec(3, 3)))
        assert len(graphs) == 4
        assert sorted(g.edge_count for g in graphs) == [2, 2, 2, 3]
        assert all(is_connected(g) for g in graphs)

    def test_n1_is_single_vertex(self):
        (g,) = enumerate_connected(CorpusSpec(1, 1))
        assert g.vertex_count == 1

    def test_masks_ascend(self):
        masks = list(connected_masks(4))
        assert masks == sorted(masks)

    def test_unfiltered_mode_counts_everything(self):
        spec = CorpusSpec(3, 3, connected_only=False)
        assert sum(1 for _ in enumerate_connected(spec)) == 8

    def test_record_from_mask_matches_writer(self):
        import random

        rng = random.Random(9)
        for n in range(1, 8):
            nbits = n * (n - 1) // 2
            for mask in (rng.randrange(1 << nbits) for _ in range(30)):
                assert record_from_mask(n, mask) == write_graph6(graph_from_mask(n, mask))

    def test_graph_from_mask_bit_order(self):
        # bit 0 is the pair (0,1), bit 1 is (0,2), bit 2 is (1,2)
        g = graph_from_mask(3, 0b101)
        assert g.has_edge(0, 1) and g.has_edge(1, 2) and not g.has_edge(0, 2)


class TestFileEnumeration:
    def test_reads_records_in_order(self, tmp_path):
        p = tmp_path / "c.g6"
        p.write_bytes(b">>graph6<<\nA_\nD?{\nBw\n")
        got = list(enumerate_connected(CorpusSpec(1, 8, source="file", path=p)))
        assert [g.vertex_count for g in got] == [2, 5, 3]

    def test_vertex_range_filter(self, tmp_path):
        p = tmp_path / "c.g6"
        p.write_bytes(b"A_\nD?{\nBw\n")
        got = list(enumerate_connected(CorpusSpec(3, 5, source="file", path=p)))
        assert [g.vertex_count for g in got] == [5, 3]

    def test_disconnected_filtered_unless_asked(self, tmp_path):
        p = tmp_path / "c.g6"
        p.write_bytes(b"A?\nA_\n")   # 2 vertices no edge, then K2
        spec = CorpusSpec(1, 8, source="file", path=p)
        assert [g.edge_count for g in enumerate_connected(spec)] == [1]
        spec_all = CorpusSpec(1, 8, source="file", path=p, connected_only=False)
        assert [g.edge_count for g in enumerate_connected(spec_all)] == [0, 1]

    def test_parse_error_carries_line_number(self, tmp_path):
        p = tmp_path / "bad.g6"
        p.write_bytes(b"A_\nD?\n")
        with pytest.raises(TruncatedBody, match="line 2"):
            list(enumerate_connected(CorpusSpec(1, 8, source="file", path=p)))


class TestNamedGraphs:
    def test_fig21_shape(self):
        ng = named_graph("fig21")
        g = ng.graph
        assert isinstance(ng, NamedGraph)
        assert g.vertex_count == 7 and g.edge_count == 7
        assert sorted(g.degree(v) for v in g.vertices) == [1, 1, 1, 2, 2, 3, 4]
        assert {tuple(e) for e in g.edges()} == {
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (4, 6)
        }

    def test_k14_is_the_four_leaf_star(self):
        assert named_graph("k14").graph == parse_graph6("D?{")

    def test_cycles_built_on_demand(self):
        g = named_graph("cycle:5").graph
        assert g.vertex_count == 5
        assert all(g.degree(v) == 2 for v in g.vertices)

    @pytest.mark.parametrize("name", ["cycle:2", "cycle:0", "cycle:x", "petersen", ""])
    def test_unknown_names(self, name):
        with pytest.raises(UnknownName):
            named_graph(name)

    def test_registry_graphs_are_valid(self):
        for key in ("fig21", "k14", "cycle:3", "cycle:12"):
            ng = named_graph(key)
            assert is_connected(ng.graph)
            assert ng.provenance
