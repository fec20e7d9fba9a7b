"""Collaboration-graph statistics over cumulative year ranges.

For each range [first..y] the report states how many co-authors appear, how
many connected components and detected communities the graph has, the mean
shortest-path distance, and the modularity of the detected partition. A range
with no collaborations yields a row with zero nodes and absent statistics
(rendered as an em dash in text, null in JSON).
"""

from __future__ import annotations

from dataclasses import dataclass

from coauthnet.community import Partition, louvain
from coauthnet.corpus import Corpus, YearRange, derive_edges
from coauthnet.graph import Graph, GraphError, build_graph, connected_components, mean_distance

TABLE_COLUMNS = (
    "Years included",
    "Co-authors (nodes)",
    "Connected components",
    "Clusters",
    "Mean distance between nodes",
    "Modularity",
)

_ABSENT = "—"  # em dash


@dataclass(frozen=True)
class StatsRow:
    """One report line: graph-level statistics for a single year range."""

    years: YearRange
    nodes: int
    components: int
    clusters: int
    mean_distance: float | None
    modularity: float | None

    def to_json(self) -> dict:
        return {
            "from": self.years.start,
            "to": self.years.end,
            "nodes": self.nodes,
            "components": self.components,
            "clusters": self.clusters,
            "mean_distance": self.mean_distance,
            "modularity": self.modularity,
        }


def cumulative_ranges(first: int, last: int) -> list[YearRange]:
    """[first..first], [first..first+1], ..., [first..last]."""
    if first > last:
        raise ValueError(f"inverted year bounds: {first} > {last}")
    return [YearRange(first, year) for year in range(first, last + 1)]


def compute_stats(
    graph: Graph, partition: Partition, q: float | None, years: YearRange
) -> StatsRow:
    """Assemble a row from already-computed analysis artifacts."""
    if graph.node_count == 0:
        return StatsRow(years, 0, 0, 0, None, None)
    try:
        distance = mean_distance(graph)
    except GraphError:
        distance = None
    return StatsRow(
        years,
        graph.node_count,
        len(connected_components(graph)),
        partition.community_count,
        distance,
        q,
    )


def stats_row(corpus: Corpus, years: YearRange) -> StatsRow:
    """Build the graph for the range, detect communities, and summarize."""
    graph = build_graph(derive_edges(corpus.publications, years))
    if graph.node_count == 0:
        return compute_stats(graph, Partition({}), None, years)
    result = louvain(graph)
    return compute_stats(graph, result.partition, result.q, years)


def render_table(rows: list[StatsRow]) -> str:
    """Aligned plain-text table, byte-deterministic for identical rows."""
    body = [
        (
            row.years.label,
            str(row.nodes),
            str(row.components),
            str(row.clusters),
            _ABSENT if row.mean_distance is None else f"{row.mean_distance:.2f}",
            _ABSENT if row.modularity is None else f"{row.modularity:.3f}",
        )
        for row in rows
    ]
    widths = [
        max(len(TABLE_COLUMNS[col]), *(len(line[col]) for line in body)) if body else len(TABLE_COLUMNS[col])
        for col in range(len(TABLE_COLUMNS))
    ]
    def fmt(cells: tuple[str, ...]) -> str:
        return "  ".join(cell.ljust(width) for cell, width in zip(cells, widths)).rstrip()
    lines = [fmt(TABLE_COLUMNS), fmt(tuple("-" * w for w in widths))]
    lines.extend(fmt(line) for line in body)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Report:
    """All cumulative rows plus their rendered text table."""

    rows: tuple[StatsRow, ...]
    table: str

    def to_json(self) -> list[dict]:
        return [row.to_json() for row in self.rows]


def build_report(corpus: Corpus, first: int, last: int) -> Report:
    """One StatsRow per cumulative range, in chronological order."""
    rows = tuple(stats_row(corpus, years) for years in cumulative_ranges(first, last))
    return Report(rows, render_table(list(rows)))
