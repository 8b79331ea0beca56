import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from leafspan.constructions import (
    ConditionViolated,
    HypothesisViolated,
    LiftWitness,
    PreservationWitness,
    ReductionTrace,
    check_min_leaf_drop,
    composed_origin,
    find_preserving_edge,
    lift_tree,
    lift_tree_relaxed,
    min_leaf_drop_violation,
    reduce_leaf_count,
)
from leafspan.corpus import connected_masks, graph_from_mask
from leafspan.graphs import Edge, Graph, contract, neighborhood_condition
from leafspan.spanning import (
    NotConnected,
    SpanningTree,
    TooSmall,
    enumerate_spanning_trees,
    leaf_report,
    min_leaf_count,
)

FIG21 = Graph(range(7), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (4, 6)])
FIG21_TREE = SpanningTree(FIG21, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)])


def cycle(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


class TestFindPreservingEdge:
    def test_fig21_golden(self):
        w = find_preserving_edge(FIG21, FIG21_TREE)
        # non-leaves of the tree are 1,2,3,4; the two smallest give the edge
        assert w.edge == Edge(1, 2)
        assert w.contracted.merged_vertex == 7
        assert w.tree_after.leaf_count() == 3
        assert w.tree_after.host == w.contracted.contracted

    def test_path_interior_forced(self):
        p4 = Graph(range(4), [(0, 1), (1, 2), (2, 3)])
        w = find_preserving_edge(p4, SpanningTree(p4, p4.edges()))
        assert w.edge == Edge(1, 2)
        assert w.tree_after.leaf_count() == 2

    def test_cycle_hamiltonian_path(self):
        c6 = cycle(6)
        t = leaf_report(c6).witness
        w = find_preserving_edge(c6, t)
        assert w.tree_after.leaf_count() == 2
        assert min_leaf_count(w.contracted.contracted) == 2

    def test_too_few_vertices(self):
        tri = Graph(range(3), [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(HypothesisViolated):
            find_preserving_edge(tri, leaf_report(tri).witness)

    def test_host_mismatch(self):
        with pytest.raises(HypothesisViolated):
            find_preserving_edge(cycle(7), FIG21_TREE)

    def test_deterministic(self):
        a = find_preserving_edge(FIG21, FIG21_TREE)
        b = find_preserving_edge(FIG21, FIG21_TREE)
        assert a.edge == b.edge
        assert a.tree_after == b.tree_after


class TestReduceLeafCount:
    def test_fig21_golden_trace(self):
        tr = reduce_leaf_count(FIG21, FIG21_TREE)
        assert tr.leaf == 0
        assert tr.branch_vertex == 4
        assert tr.edge_sequence == (Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4))
        assert tr.edge_sequence_current == (Edge(0, 1), Edge(2, 7), Edge(3, 8), Edge(4, 9))
        assert [r.merged_vertex for r in tr.graph_sequence] == [7, 8, 9, 10]
        assert tr.tree_after.sorted_edges() == (Edge(5, 10), Edge(6, 10))
        assert tr.tree_after.leaf_count() == 2

    def test_star_single_step(self):
        star = Graph(range(4), [(3, 0), (3, 1), (3, 2)])
        tr = reduce_leaf_count(star, SpanningTree(star, star.edges()))
        assert tr.leaf == 0 and tr.branch_vertex == 3
        assert len(tr.edge_sequence) == 1
        assert tr.tree_after.leaf_count() == 2

    def test_spider_with_unequal_legs(self):
        # center 0, legs 1 and 2 direct, leg 3-4; nearest-branch rule fires from leaf 1
        g = Graph(range(5), [(0, 1), (0, 2), (0, 3), (3, 4)])
        tr = reduce_leaf_count(g, SpanningTree(g, g.edges()))
        assert tr.leaf == 1
        assert tr.branch_vertex == 0
        assert len(tr.edge_sequence) == 1
        assert tr.tree_after.leaf_count() == 2

    def test_two_leaf_tree_rejected(self):
        c6 = cycle(6)
        with pytest.raises(HypothesisViolated):
            reduce_leaf_count(c6, leaf_report(c6).witness)

    def test_interior_vertices_have_degree_two(self):
        tr = reduce_leaf_count(FIG21, FIG21_TREE)
        path = FIG21_TREE.path(tr.leaf, tr.branch_vertex)
        assert all(FIG21_TREE.degree(x) == 2 for x in path[1:-1])

    def test_composed_origin_collapses_the_path(self):
        tr = reduce_leaf_count(FIG21, FIG21_TREE)
        origin = composed_origin(tr.graph_sequence)
        assert origin[10] == frozenset({0, 1, 2, 3, 4})
        assert origin[5] == frozenset({5})
        assert sorted(x for s in origin.values() for x in s) == list(range(7))


class TestComposedOrigin:
    def test_empty_chain(self):
        assert composed_origin([]) == {}

    def test_single_step_is_plain_origin(self):
        res = contract(FIG21, Edge(1, 4))
        assert composed_origin([res]) == res.origin


class TestLiftTree:
    def test_c5_both_cases_appear(self):
        c5 = cycle(5)
        e = Edge(0, 1)
        res = contract(c5, e)
        cases = set()
        for tp in enumerate_spanning_trees(res.contracted):
            w = lift_tree(c5, e, res, tp)
            cases.add(w.case_used)
            assert w.tree.leaf_count() == tp.leaf_count()
            assert w.tree.host == c5
            if w.case_used == "replacement":
                assert c5.has_edge(1, w.x1)
                assert c5.has_edge(0, w.x2)
                assert w.x1 != w.x2
        assert cases == {"subdivision", "replacement"}

    def test_p3_forced_subdivision(self):
        p3 = Graph(range(3), [(0, 1), (1, 2)])
        res = contract(p3, Edge(0, 1))
        tp = SpanningTree(res.contracted, res.contracted.edges())
        w = lift_tree(p3, Edge(0, 1), res, tp)
        assert w.case_used == "subdivision"
        assert w.tree.sorted_edges() == (Edge(0, 1), Edge(1, 2))
        assert w.attachments == {2: 1}

    def test_condition_violation_is_reported(self):
        res = contract(FIG21, Edge(1, 4))
        tp = leaf_report(res.contracted).witness
        with pytest.raises(ConditionViolated):
            lift_tree(FIG21, Edge(1, 4), res, tp)

    def test_stale_contraction_record_rejected(self):
        c5 = cycle(5)
        res = contract(c5, Edge(0, 1))
        tp = leaf_report(res.contracted).witness
        with pytest.raises(HypothesisViolated):
            lift_tree(c5, Edge(1, 2), res, tp)

    def test_single_vertex_image_rejected(self):
        k2 = Graph([0, 1], [(0, 1)])
        res = contract(k2, Edge(0, 1))
        tp = SpanningTree(res.contracted, ())
        with pytest.raises(HypothesisViolated):
            lift_tree(k2, Edge(0, 1), res, tp)
        with pytest.raises(HypothesisViolated):
            lift_tree_relaxed(k2, Edge(0, 1), res, tp)

    def test_scarce_anchor_choice(self):
        # only one tree neighbor of the merged vertex touches u; x2 must not
        # be consumed by the x1 pick
        g = Graph.from_edges([(0, 1), (1, 2), (0, 3), (1, 3), (2, 4), (3, 5)])
        e = Edge(0, 1)
        assert neighborhood_condition(g, e)
        res = contract(g, e)
        for tp in enumerate_spanning_trees(res.contracted):
            w = lift_tree(g, e, res, tp)
            assert w.tree.leaf_count() == tp.leaf_count()


class TestLiftTreeRelaxed:
    def test_fig21_within_one_extra_leaf(self):
        res = contract(FIG21, Edge(1, 4))
        for tp in enumerate_spanning_trees(res.contracted):
            w = lift_tree_relaxed(FIG21, Edge(1, 4), res, tp)
            assert w.case_used == "relaxed"
            assert w.tree.leaf_count() <= tp.leaf_count() + 1

    def test_cycles_stay_close_to_two(self):
        for n in range(4, 8):
            g = cycle(n)
            e = g.edges()[0]
            res = contract(g, e)
            for tp in enumerate_spanning_trees(res.contracted):
                w = lift_tree_relaxed(g, e, res, tp)
                assert w.tree.leaf_count() <= 3

    def test_attachment_prefers_first_endpoint(self):
        res = contract(FIG21, Edge(1, 4))
        tp = leaf_report(res.contracted).witness
        w = lift_tree_relaxed(FIG21, Edge(1, 4), res, tp)
        for y, end in w.attachments.items():
            if FIG21.has_edge(1, y):
                assert end == 1
            else:
                assert end == 4


class TestMinLeafDrop:
    def test_examples(self):
        assert check_min_leaf_drop(FIG21)
        assert min_leaf_drop_violation(FIG21) is None
        assert check_min_leaf_drop(cycle(6))
        star = Graph(range(5), [(4, i) for i in range(4)])
        assert check_min_leaf_drop(star)

    def test_preconditions(self):
        with pytest.raises(TooSmall):
            check_min_leaf_drop(Graph([0, 1], [(0, 1)]))
        with pytest.raises(NotConnected):
            check_min_leaf_drop(Graph([0, 1, 2, 3], [(0, 1), (2, 3)]))

    def test_exhaustive_n4(self):
        for mask in connected_masks(4):
            assert check_min_leaf_drop(graph_from_mask(4, mask))


# randomized sweeps; the full exhaustive versions live in the suites


def _random_connected(rng, n):
    while True:
        mask = rng.randrange(1 << (n * (n - 1) // 2))
        g = graph_from_mask(n, mask)
        from leafspan.graphs import is_connected

        if is_connected(g):
            return g


@given(st.integers(0, 2 ** 32 - 1), st.integers(4, 7))
@settings(max_examples=60, deadline=None)
def test_preserve_and_reduce_on_random_trees(seed, n):
    rng = random.Random(seed)
    g = _random_connected(rng, n)
    trees = list(enumerate_spanning_trees(g))
    t = trees[rng.randrange(len(trees))]
    k = t.leaf_count()
    if n > k + 1:
        w = find_preserving_edge(g, t)
        assert w.tree_after.leaf_count() == k
    if k >= 3:
        tr = reduce_leaf_count(g, t)
        assert tr.tree_after.leaf_count() == k - 1
        assert len(tr.graph_sequence) == len(tr.edge_sequence)


@given(st.integers(0, 2 ** 32 - 1), st.integers(3, 7))
@settings(max_examples=60, deadline=None)
def test_lifts_on_random_contractions(seed, n):
    rng = random.Random(seed)
    g = _random_connected(rng, n)
    edges = g.edges()
    e = edges[rng.randrange(len(edges))]
    res = contract(g, e)
    if res.contracted.vertex_count < 2:
        return
    ctrees = list(enumerate_spanning_trees(res.contracted))
    tp = ctrees[rng.randrange(len(ctrees))]
    w = lift_tree_relaxed(g, e, res, tp)
    assert w.tree.leaf_count() <= tp.leaf_count() + 1
    if neighborhood_condition(g, e):
        w2 = lift_tree(g, e, res, tp)
        assert w2.tree.leaf_count() == tp.leaf_count()
