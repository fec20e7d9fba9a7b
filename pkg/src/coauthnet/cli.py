"""Command-line pipeline: validate inputs, analyze into datasets, serve the explorer.

Exit codes are stable for scripting: 0 success, 1 input error (bad flags,
unreadable or malformed files), 2 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from functools import partial
from http.server import SimpleHTTPRequestHandler, ThreadingHTTPServer
from importlib import resources
from pathlib import Path

from coauthnet.community import Partition, louvain
from coauthnet.corpus import Corpus, CorpusError, derive_edges, load_corpus
from coauthnet.export import to_document, write_outputs
from coauthnet.graph import build_graph
from coauthnet.layout import LayoutParams, LayoutState, run_layout
from coauthnet.report import compute_stats, cumulative_ranges, render_table

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2

OUT_DIR_ENV = "COAUTHNET_OUT"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # keep exit codes under our control
        raise _UsageError(f"{self.prog}: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="coauthnet",
        description="Co-authorship network analysis: communities, layout, statistics, explorer datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    default_out = os.environ.get(OUT_DIR_ENV, "out")

    validate = sub.add_parser("validate", help="parse the input files and report counts and warnings")
    validate.add_argument("--members", required=True, help="members.csv path")
    validate.add_argument("--papers", required=True, help="papers.csv path")

    analyze = sub.add_parser(
        "analyze", help="run the full pipeline and write datasets, manifest, and report"
    )
    analyze.add_argument("--members", required=True)
    analyze.add_argument("--papers", required=True)
    analyze.add_argument("--from", dest="year_from", type=int, default=None,
                         help="first year (default: earliest publication year)")
    analyze.add_argument("--to", dest="year_to", type=int, default=None,
                         help="last year (default: latest publication year)")
    analyze.add_argument("--out", default=default_out,
                         help=f"output directory (default: ${OUT_DIR_ENV} or ./out)")
    analyze.add_argument("--seed", type=int, default=42, help="seed for all randomness (default 42)")
    analyze.add_argument("--iterations", type=int, default=1000, help="layout iterations")
    analyze.add_argument("--ka", type=float, default=1.0, help="attraction coefficient")
    analyze.add_argument("--kr", type=float, default=1.0, help="repulsion coefficient")

    serve = sub.add_parser("serve", help="serve the exported datasets and the explorer page")
    serve.add_argument("--out", default=default_out,
                       help=f"directory with manifest.json (default: ${OUT_DIR_ENV} or ./out)")
    serve.add_argument("--assets", default=None,
                       help="directory with built explorer assets (default: bundled placeholder page)")
    serve.add_argument("--port", type=int, default=8000, help="TCP port; 0 picks a free one")
    serve.add_argument("--host", default="127.0.0.1", help="bind address (default 127.0.0.1)")
    return parser


def cmd_validate(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.members, args.papers)
    print(f"members: {len(corpus.registry)}")
    print(f"papers: {len(corpus.publications)}")
    no_edge = sum(1 for pub in corpus.publications if len(pub.author_ids) < 2)
    if no_edge:
        print(f"papers with fewer than two member authors (no edges): {no_edge}")
    for warning in corpus.publications.warnings:
        print(f"warning: {warning}")
    return EXIT_OK


def _resolve_years(corpus: Corpus, args: argparse.Namespace) -> tuple[int, int]:
    bounds = corpus.publications.year_bounds()
    first = args.year_from if args.year_from is not None else (bounds[0] if bounds else None)
    last = args.year_to if args.year_to is not None else (bounds[1] if bounds else None)
    if first is None or last is None:
        raise _UsageError("no publications found; specify --from and --to explicitly")
    if first > last:
        raise _UsageError(f"--from {first} is after --to {last}")
    return first, last


def cmd_analyze(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.members, args.papers)
    first, last = _resolve_years(corpus, args)
    params = LayoutParams(
        attraction=args.ka, repulsion=args.kr, iterations=args.iterations, seed=args.seed
    )
    rows = []
    documents = []
    for years in cumulative_ranges(first, last):
        graph = build_graph(derive_edges(corpus.publications, years))
        if graph.node_count:
            result = louvain(graph)
            partition, q = result.partition, result.q
            layout = run_layout(graph, params)
        else:
            partition, q = Partition({}), None
            layout = LayoutState((), [])
        stats = compute_stats(graph, partition, q, years)
        rows.append(stats)
        documents.append(to_document(graph, partition, layout, corpus, years, stats))
    out = Path(args.out)
    write_outputs(documents, out)
    report_path = out / "report.json"
    report_path.write_text(
        json.dumps([row.to_json() for row in rows], ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
        newline="\n",
    )
    sys.stdout.write(render_table(rows))
    return EXIT_OK


class _ExplorerHandler(SimpleHTTPRequestHandler):
    """Static handler that resolves each request against a list of roots.

    The dataset directory comes first so exported files always win; explorer
    assets (built frontend or the bundled placeholder) fill in the rest.
    """

    def __init__(self, *args, roots: list[str], **kwargs):
        self._roots = roots
        super().__init__(*args, directory=roots[0], **kwargs)

    def translate_path(self, path: str) -> str:
        probe = path.split("?", 1)[0].split("#", 1)[0]
        if probe.endswith("/"):
            probe += "index.html"
        for root in self._roots:
            self.directory = root
            candidate = super().translate_path(probe)
            if os.path.isfile(candidate):
                return candidate
        self.directory = self._roots[0]
        return super().translate_path(path)

    def log_message(self, format: str, *args) -> None:  # keep test output clean
        pass


_ExplorerHandler.extensions_map.update(
    {
        ".json": "application/json",
        ".js": "text/javascript",
        ".mjs": "text/javascript",
    }
)


class _ExplorerServer(ThreadingHTTPServer):
    daemon_threads = True
    request_queue_size = 32  # bursty explorers open many short connections


def bundled_assets_dir() -> Path:
    return Path(str(resources.files("coauthnet").joinpath("webassets")))


def build_server(
    out_dir: str | Path,
    assets_dir: str | Path | None = None,
    host: str = "127.0.0.1",
    port: int = 8000,
) -> ThreadingHTTPServer:
    """HTTP server for the exported datasets plus explorer assets.

    Raises FileNotFoundError when the output directory has no manifest.json.
    """
    out = Path(out_dir)
    if not (out / "manifest.json").is_file():
        raise FileNotFoundError(f"missing manifest.json in {out} (run `coauthnet analyze` first)")
    roots = [str(out)]
    if assets_dir is not None:
        roots.append(str(Path(assets_dir)))
    roots.append(str(bundled_assets_dir()))
    handler = partial(_ExplorerHandler, roots=roots)
    return _ExplorerServer((host, port), handler)


def cmd_serve(args: argparse.Namespace) -> int:
    server = build_server(args.out, args.assets, args.host, args.port)
    host, port = server.server_address[:2]
    print(f"serving http://{host}:{port}/ (Ctrl-C to stop)", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "validate":
            return cmd_validate(args)
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "serve":
            return cmd_serve(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except (_UsageError, CorpusError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # internal failure: keep the type visible for bug reports
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
