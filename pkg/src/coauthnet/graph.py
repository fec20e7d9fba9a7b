"""Weighted undirected graph with the degree, connectivity, and distance
statistics the rest of the pipeline consumes.

Weights are symmetric and positive. Self-loops are permitted (they arise when
communities are aggregated into super-nodes, never in corpus graphs); a
self-loop counts once in a node's weighted degree and contributes half its
weight to the total weight m, so the handshake identity sum(k) == 2m holds.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Hashable, Iterable, Iterator

if TYPE_CHECKING:
    from coauthnet.corpus import EdgeRecord

NodeId = Hashable  # ids must be mutually sortable within one graph


class GraphError(ValueError):
    """Invalid graph construction or query."""


@dataclass(frozen=True)
class NodeMetrics:
    """Incident-edge count and weighted degree (row sum of the weight function)."""

    degree: int
    weighted_degree: float


class Graph:
    """Immutable undirected graph defined by a symmetric weight function.

    Nodes are exactly the endpoints of at least one edge; there are no
    isolated nodes. The canonical node order is ascending by id.
    """

    def __init__(self, adjacency: dict[NodeId, dict[NodeId, float]]):
        # adjacency must already be symmetric; use the builders below.
        self._adj = adjacency
        self._nodes: tuple[NodeId, ...] = tuple(sorted(adjacency))
        self._k = {
            i: sum(adjacency[i][j] for j in sorted(adjacency[i])) for i in self._nodes
        }
        self._m = sum(
            w if i != j else 0.5 * w
            for i in self._nodes
            for j, w in sorted(adjacency[i].items())
            if i <= j
        )

    @classmethod
    def from_weighted_pairs(
        cls,
        pairs: Iterable[tuple[NodeId, NodeId, float]],
        *,
        allow_self_loops: bool = False,
    ) -> "Graph":
        """Build a graph from (a, b, weight) triples, one per unordered pair."""
        adjacency: dict[NodeId, dict[NodeId, float]] = {}
        for a, b, weight in pairs:
            if a == b and not allow_self_loops:
                raise GraphError(f"self-edge on {a!r}")
            if weight <= 0:
                raise GraphError(f"edge {a!r}-{b!r} has non-positive weight {weight}")
            if a in adjacency and b in adjacency[a]:
                raise GraphError(f"duplicate pair {a!r}-{b!r}")
            adjacency.setdefault(a, {})[b] = weight
            if a != b:
                adjacency.setdefault(b, {})[a] = weight
        return cls(adjacency)

    @property
    def nodes(self) -> tuple[NodeId, ...]:
        return self._nodes

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    @property
    def total_weight(self) -> float:
        """m, half the ordered-pair sum of the weight function."""
        return self._m

    def __contains__(self, node: object) -> bool:
        return node in self._adj

    def _require(self, node: NodeId) -> None:
        if node not in self._adj:
            raise GraphError(f"unknown node {node!r}")

    def neighbors(self, node: NodeId) -> Iterator[tuple[NodeId, float]]:
        """(neighbor, weight) pairs in ascending neighbor order; includes the
        node itself when it carries a self-loop."""
        self._require(node)
        row = self._adj[node]
        for other in sorted(row):
            yield other, row[other]

    def weight(self, a: NodeId, b: NodeId) -> float:
        """A(a, b); zero when no edge joins the pair."""
        self._require(a)
        self._require(b)
        return self._adj[a].get(b, 0.0)

    def degree(self, node: NodeId) -> int:
        self._require(node)
        return len(self._adj[node])

    def weighted_degree(self, node: NodeId) -> float:
        self._require(node)
        return self._k[node]

    def edges(self) -> Iterator[tuple[NodeId, NodeId, float]]:
        """Each unordered edge once, (a, b, w) with a <= b, in canonical order."""
        for i in self._nodes:
            row = self._adj[i]
            for j in sorted(row):
                if i <= j:
                    yield i, j, row[j]

    def edge_count(self) -> int:
        return sum(1 for _ in self.edges())


def build_graph(edges: Iterable["EdgeRecord"]) -> Graph:
    """Build the co-authorship graph from corpus edge records.

    The graph contains exactly the nodes incident to at least one edge;
    members without collaborations never appear.
    """
    return Graph.from_weighted_pairs(
        ((edge.a, edge.b, float(edge.weight)) for edge in edges), allow_self_loops=False
    )


def node_metrics(graph: Graph, node: NodeId) -> NodeMetrics:
    """Degree (self-loop counts once) and weighted degree of one node."""
    return NodeMetrics(graph.degree(node), graph.weighted_degree(node))


def connected_components(graph: Graph) -> list[list[NodeId]]:
    """Maximal mutually-reachable node sets, each sorted, ordered by smallest
    contained node id."""
    seen: set[NodeId] = set()
    components: list[list[NodeId]] = []
    for start in graph.nodes:  # canonical order makes output order canonical
        if start in seen:
            continue
        component = []
        queue = deque([start])
        seen.add(start)
        while queue:
            node = queue.popleft()
            component.append(node)
            for neighbor, _ in graph.neighbors(node):
                if neighbor not in seen:
                    seen.add(neighbor)
                    queue.append(neighbor)
        components.append(sorted(component))
    return components


def shortest_path_lengths(graph: Graph, source: NodeId) -> dict[NodeId, int]:
    """Breadth-first hop counts from ``source``; unreachable nodes are absent."""
    graph._require(source)
    lengths = {source: 0}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for neighbor, _ in graph.neighbors(node):
            if neighbor not in lengths:
                lengths[neighbor] = lengths[node] + 1
                queue.append(neighbor)
    return lengths


def mean_distance(graph: Graph) -> float:
    """Average hop count over unordered pairs of distinct nodes that lie in the
    same component; pairs with no connecting path are excluded."""
    total = 0
    pairs = 0
    for source in graph.nodes:
        for target, hops in shortest_path_lengths(graph, source).items():
            if target != source:
                total += hops
                pairs += 1
    if pairs == 0:
        raise GraphError("mean distance undefined: the graph has no connected pair")
    return total / pairs  # ordered-pair mean equals the unordered mean exactly
