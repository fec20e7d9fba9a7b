"""The whole pipeline on the shipped fixture corpus, library-style.

Parses the CSV inputs, then for each cumulative year range: derives the
weighted co-authorship edges, detects communities, computes the layout, and
assembles the export document. Writes everything under demos/out/.

The CLI equivalent is:
    coauthnet analyze --members fixtures/members.csv --papers fixtures/papers.csv --out demos/out
    coauthnet serve --out demos/out
"""

from pathlib import Path

from coauthnet import (
    LayoutParams,
    build_graph,
    build_report,
    cumulative_ranges,
    compute_stats,
    derive_edges,
    load_corpus,
    louvain,
    run_layout,
    to_document,
    write_outputs,
)

root = Path(__file__).resolve().parent.parent
corpus = load_corpus(root / "fixtures" / "members.csv", root / "fixtures" / "papers.csv")
first, last = corpus.publications.year_bounds()

documents = []
for years in cumulative_ranges(first, last):
    graph = build_graph(derive_edges(corpus.publications, years))
    detected = louvain(graph)
    layout = run_layout(graph, LayoutParams(seed=42))
    stats = compute_stats(graph, detected.partition, detected.q, years)
    documents.append(to_document(graph, detected.partition, layout, corpus, years, stats))
    print(f"{years.label}: {stats.nodes} nodes, {stats.clusters} clusters, Q = {stats.modularity:.3f}")

out_dir = Path(__file__).resolve().parent / "out"
manifest = write_outputs(documents, out_dir)
print(f"wrote {len(manifest['datasets'])} datasets + manifest to {out_dir}")

print()
print(build_report(corpus, first, last).table)
