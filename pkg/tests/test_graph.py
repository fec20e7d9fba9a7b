from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coauthnet.corpus import EdgeRecord
from coauthnet.graph import (
    Graph,
    NodeMetrics,
    GraphError,
    build_graph,
    connected_components,
    mean_distance,
    node_metrics,
    shortest_path_lengths,
)
from oracles import mean_distance_oracle, random_graph


def unit_graph(*pairs: tuple[str, str]) -> Graph:
    return Graph.from_weighted_pairs([(a, b, 1.0) for a, b in pairs])


class TestBuildGraph:
    def test_single_edge_total_weight(self):
        g = build_graph([EdgeRecord("m1", "m2", 2, ("p1", "p2"))])
        assert g.nodes == ("m1", "m2")
        assert g.total_weight == 2.0

    def test_empty_edge_list(self):
        g = build_graph([])
        assert g.nodes == ()
        assert g.total_weight == 0.0

    def test_weighted_degree_sums_incident_weights(self):
        g = unit_graph(("a", "b"), ("b", "c"))
        assert g.weighted_degree("b") == 2.0
        assert g.degree("b") == 2

    def test_duplicate_pair_rejected(self):
        with pytest.raises(GraphError, match="duplicate pair"):
            Graph.from_weighted_pairs([("a", "b", 1.0), ("a", "b", 2.0)])

    def test_self_edge_rejected(self):
        with pytest.raises(GraphError, match="self-edge"):
            Graph.from_weighted_pairs([("a", "a", 1.0)])

    def test_non_positive_weight_rejected(self):
        with pytest.raises(GraphError, match="non-positive"):
            Graph.from_weighted_pairs([("a", "b", 0.0)])

    def test_nodes_sorted_lexicographically(self):
        g = unit_graph(("z", "a"), ("m", "a"))
        assert g.nodes == ("a", "m", "z")


class TestNodeMetrics:
    def test_triangle(self):
        g = unit_graph(("a", "b"), ("b", "c"), ("a", "c"))
        for node in g.nodes:
            assert node_metrics(g, node) == NodeMetrics(2, 2.0)

    def test_self_loop_counts_once(self):
        g = Graph.from_weighted_pairs([("a", "a", 4.0), ("a", "b", 1.0)], allow_self_loops=True)
        metrics = node_metrics(g, "a")
        assert metrics.weighted_degree == 5.0
        assert metrics.degree == 2  # the self-loop is one incident edge

    def test_isolated_pair(self):
        g = Graph.from_weighted_pairs([("a", "b", 3.0)])
        assert node_metrics(g, "a") == NodeMetrics(1, 3.0)

    def test_unknown_node(self):
        g = unit_graph(("a", "b"))
        with pytest.raises(GraphError, match="unknown node"):
            node_metrics(g, "zz")


class TestConnectedComponents:
    def test_two_components(self):
        g = unit_graph(("a", "b"), ("c", "d"))
        assert connected_components(g) == [["a", "b"], ["c", "d"]]

    def test_triangle_single_component(self):
        g = unit_graph(("a", "b"), ("b", "c"), ("a", "c"))
        assert connected_components(g) == [["a", "b", "c"]]

    def test_empty_graph(self):
        assert connected_components(Graph({})) == []

    def test_order_by_smallest_contained_node(self):
        g = unit_graph(("b", "z"), ("a", "y"))
        assert connected_components(g) == [["a", "y"], ["b", "z"]]


class TestShortestPaths:
    def test_path_graph(self):
        g = unit_graph(("a", "b"), ("b", "c"))
        assert shortest_path_lengths(g, "a") == {"a": 0, "b": 1, "c": 2}

    def test_unreachable_nodes_absent(self):
        g = unit_graph(("a", "b"), ("c", "d"))
        assert shortest_path_lengths(g, "a") == {"a": 0, "b": 1}

    def test_complete_graph(self):
        g = unit_graph(("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d"))
        assert shortest_path_lengths(g, "c") == {"c": 0, "a": 1, "b": 1, "d": 1}

    def test_unknown_source(self):
        with pytest.raises(GraphError, match="unknown node"):
            shortest_path_lengths(unit_graph(("a", "b")), "zz")


class TestMeanDistance:
    def test_triangle(self):
        g = unit_graph(("a", "b"), ("b", "c"), ("a", "c"))
        assert mean_distance(g) == 1.0

    def test_path_of_three(self):
        g = unit_graph(("a", "b"), ("b", "c"))
        assert mean_distance(g) == (1 + 1 + 2) / 3

    def test_cross_component_pairs_excluded(self):
        g = unit_graph(("a", "b"), ("c", "d"))
        assert mean_distance(g) == 1.0

    def test_no_connected_pair(self):
        g = Graph.from_weighted_pairs([("a", "a", 2.0)], allow_self_loops=True)
        with pytest.raises(GraphError, match="no connected pair"):
            mean_distance(g)


class TestGraphProperties:
    @given(st.integers(0, 10**9))
    def test_handshake_identity(self, seed):
        g = random_graph(random.Random(seed))
        assert sum(g.weighted_degree(i) for i in g.nodes) == pytest.approx(
            2.0 * g.total_weight, abs=1e-12
        )

    @given(st.integers(0, 10**9))
    def test_mean_distance_matches_bfs_oracle_exactly(self, seed):
        g = random_graph(random.Random(seed), min_nodes=2, max_nodes=30, edge_prob=0.15)
        assert mean_distance(g) == mean_distance_oracle(g)

    @given(st.integers(0, 10**9))
    def test_components_partition_the_nodes(self, seed):
        g = random_graph(random.Random(seed), min_nodes=2, max_nodes=20, edge_prob=0.2)
        components = connected_components(g)
        flattened = [node for component in components for node in component]
        assert sorted(flattened) == sorted(g.nodes)
        index = {node: i for i, component in enumerate(components) for node in component}
        for a, b, _ in g.edges():
            assert index[a] == index[b]  # no edge crosses components

    @given(st.integers(0, 10**9))
    def test_relabeling_preserves_statistics(self, seed):
        g = random_graph(random.Random(seed), min_nodes=2, max_nodes=15)
        relabel = {node: f"z{i:03d}" for i, node in enumerate(reversed(g.nodes))}
        h = Graph.from_weighted_pairs(
            [(min(relabel[a], relabel[b]), max(relabel[a], relabel[b]), w) for a, b, w in g.edges()]
        )
        assert h.total_weight == g.total_weight
        assert sorted(h.degree(i) for i in h.nodes) == sorted(g.degree(i) for i in g.nodes)
        assert sorted(h.weighted_degree(i) for i in h.nodes) == sorted(
            g.weighted_degree(i) for i in g.nodes
        )
        assert len(connected_components(h)) == len(connected_components(g))
        assert mean_distance(h) == mean_distance(g)
