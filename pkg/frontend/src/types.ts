/** Shapes of the exported dataset files, mirroring the engine's JSON schemas. */

export const SUPPORTED_VERSION = 1;

export interface ManifestEntry {
  from: number;
  to: number;
  path: string;
}

export interface Manifest {
  version: number;
  datasets: ManifestEntry[];
}

export interface NodeDatum {
  id: string;
  label: string;
  x: number;
  y: number;
  cluster: number;
  degree: number;
  weighted_degree: number;
}

export interface EdgeDatum {
  source: string;
  target: string;
  weight: number;
  paper_ids: string[];
}

export interface ClusterDatum {
  id: number;
  size: number;
  color: string;
}

export interface PaperDatum {
  paper_id: string;
  year: number;
  title: string;
  author_ids: string[];
}

export interface StatsBlock {
  nodes: number;
  components: number;
  clusters: number;
  mean_distance: number | null;
  modularity: number | null;
}

export interface Dataset {
  version: number;
  year_range: { from: number; to: number };
  nodes: NodeDatum[];
  edges: EdgeDatum[];
  clusters: ClusterDatum[];
  papers: PaperDatum[];
  stats: StatsBlock;
}

export function rangeLabel(entry: { from: number; to: number }): string {
  return `${entry.from}-${entry.to}`;
}
