"""Versioned JSON datasets for the interactive explorer.

One file per year range (``graph-<from>-<to>.json``) plus a ``manifest.json``
index. Serialization uses a fixed key order and coordinates rounded to six
decimal places, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import colorsys
import json
from pathlib import Path

from coauthnet.community import Partition
from coauthnet.corpus import Corpus, YearRange, derive_edges
from coauthnet.graph import Graph
from coauthnet.layout import LayoutState
from coauthnet.report import StatsRow

SCHEMA_VERSION = 1

_COORD_DECIMALS = 6
_COLOR_SATURATION = 0.65
_COLOR_LIGHTNESS = 0.50


def assign_colors(count: int) -> list[str]:
    """Evenly hue-spaced ``#rrggbb`` colors, one per cluster.

    Cluster i receives hue i*360/count at 65% saturation and 50% lightness;
    the palette is deterministic and distinct for any realistic cluster count.
    """
    if count < 0:
        raise ValueError("cluster count must be nonnegative")
    colors = []
    for i in range(count):
        r, g, b = colorsys.hls_to_rgb(i / count, _COLOR_LIGHTNESS, _COLOR_SATURATION)
        colors.append(f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}")
    return colors


def to_document(
    graph: Graph,
    partition: Partition,
    layout: LayoutState,
    corpus: Corpus,
    years: YearRange,
    stats: StatsRow,
) -> dict:
    """Assemble the export document for one year range.

    All inputs must describe the same node set; edge paper lists are re-derived
    from the corpus so every edge is traceable to its publications.
    """
    node_set = set(graph.nodes)
    if set(partition.nodes) != node_set or set(layout.nodes) != node_set:
        raise ValueError("node-set mismatch between graph, partition, and layout")
    edges = derive_edges(corpus.publications, years)
    for edge in edges:
        if (
            edge.a not in graph
            or edge.b not in graph
            or graph.weight(edge.a, edge.b) != edge.weight
        ):
            raise ValueError("node-set mismatch: graph does not match the corpus edges for this range")

    positions = layout.positions
    nodes = [
        {
            "id": node,
            "label": corpus.registry.name_of(node),
            "x": round(positions[node][0], _COORD_DECIMALS),
            "y": round(positions[node][1], _COORD_DECIMALS),
            "cluster": partition.community_of(node),
            "degree": graph.degree(node),
            "weighted_degree": graph.weighted_degree(node),
        }
        for node in graph.nodes
    ]
    edge_items = [
        {
            "source": edge.a,
            "target": edge.b,
            "weight": edge.weight,
            "paper_ids": list(edge.paper_ids),
        }
        for edge in edges
    ]
    sizes = [len(group) for group in partition.communities()]
    colors = assign_colors(partition.community_count)
    clusters = [
        {"id": i, "size": sizes[i], "color": colors[i]} for i in range(partition.community_count)
    ]
    papers = [
        {
            "paper_id": pub.paper_id,
            "year": pub.year,
            "title": pub.title,
            "author_ids": list(pub.author_ids),
        }
        for pub in sorted(corpus.publications.in_range(years), key=lambda p: p.paper_id)
    ]
    return {
        "version": SCHEMA_VERSION,
        "year_range": {"from": years.start, "to": years.end},
        "nodes": nodes,
        "edges": edge_items,
        "clusters": clusters,
        "papers": papers,
        "stats": {
            "nodes": stats.nodes,
            "components": stats.components,
            "clusters": stats.clusters,
            "mean_distance": stats.mean_distance,
            "modularity": stats.modularity,
        },
    }


def document_filename(years: YearRange) -> str:
    return f"graph-{years.start}-{years.end}.json"


def _dump(payload: dict, path: Path) -> None:
    text = json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    path.write_text(text, encoding="utf-8", newline="\n")


def write_outputs(documents: list[dict], out_dir: str | Path) -> dict:
    """Write one dataset file per document plus the manifest; returns the
    manifest. Ranges are listed chronologically regardless of input order."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ordered = sorted(documents, key=lambda d: (d["year_range"]["from"], d["year_range"]["to"]))
    entries = []
    for document in ordered:
        years = YearRange(document["year_range"]["from"], document["year_range"]["to"])
        name = document_filename(years)
        _dump(document, out / name)
        entries.append({"from": years.start, "to": years.end, "path": name})
    manifest = {"version": SCHEMA_VERSION, "datasets": entries}
    _dump(manifest, out / "manifest.json")
    return manifest
