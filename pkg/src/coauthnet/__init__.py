"""Co-authorship network analysis toolkit.

Turns a publication database (two CSV files: members and papers) into
weighted collaboration graphs, detects research sub-communities by greedy
modularity maximization, computes deterministic force-directed layouts,
and emits versioned JSON datasets plus a cumulative-year statistics report
for an interactive web explorer.
"""

from coauthnet.corpus import (
    Corpus,
    CorpusError,
    EdgeRecord,
    Member,
    MemberRegistry,
    Publication,
    PublicationSet,
    YearRange,
    derive_edges,
    load_corpus,
    parse_members,
    parse_publications,
)
from coauthnet.graph import (
    Graph,
    GraphError,
    NodeMetrics,
    build_graph,
    connected_components,
    mean_distance,
    node_metrics,
    shortest_path_lengths,
)
from coauthnet.community import (
    LouvainResult,
    Partition,
    PartitionError,
    aggregate,
    local_moving,
    louvain,
    modularity,
    modularity_gain,
)
from coauthnet.layout import (
    LayoutError,
    LayoutParams,
    LayoutState,
    attraction_force,
    init_positions,
    net_forces,
    repulsion_force,
    run_layout,
    step,
)
from coauthnet.report import (
    Report,
    StatsRow,
    build_report,
    compute_stats,
    cumulative_ranges,
    render_table,
    stats_row,
)
from coauthnet.export import (
    SCHEMA_VERSION,
    assign_colors,
    to_document,
    write_outputs,
)

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "CorpusError",
    "EdgeRecord",
    "Member",
    "MemberRegistry",
    "Publication",
    "PublicationSet",
    "YearRange",
    "derive_edges",
    "load_corpus",
    "parse_members",
    "parse_publications",
    "Graph",
    "GraphError",
    "NodeMetrics",
    "build_graph",
    "connected_components",
    "mean_distance",
    "node_metrics",
    "shortest_path_lengths",
    "LouvainResult",
    "Partition",
    "PartitionError",
    "aggregate",
    "local_moving",
    "louvain",
    "modularity",
    "modularity_gain",
    "LayoutError",
    "LayoutParams",
    "LayoutState",
    "attraction_force",
    "init_positions",
    "net_forces",
    "repulsion_force",
    "run_layout",
    "step",
    "Report",
    "StatsRow",
    "build_report",
    "compute_stats",
    "cumulative_ranges",
    "render_table",
    "stats_row",
    "SCHEMA_VERSION",
    "assign_colors",
    "to_document",
    "write_outputs",
]
