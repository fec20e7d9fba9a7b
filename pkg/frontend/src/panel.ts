import type { Dataset, EdgeDatum, NodeDatum, PaperDatum } from "./types.js";

function labelMap(dataset: Dataset): Map<string, string> {
  return new Map(dataset.nodes.map((node) => [node.id, node.label]));
}

function paperMap(dataset: Dataset): Map<string, PaperDatum> {
  return new Map(dataset.papers.map((paper) => [paper.paper_id, paper]));
}

function byYearThenTitle(a: PaperDatum, b: PaperDatum): number {
  return a.year - b.year || a.title.localeCompare(b.title);
}

function paperList(container: HTMLElement, papers: PaperDatum[]): void {
  const list = document.createElement("ul");
  list.className = "detail__papers";
  for (const paper of papers.sort(byYearThenTitle)) {
    const item = document.createElement("li");
    item.className = "detail__paper";
    item.textContent = `${paper.title} (${paper.year})`;
    list.append(item);
  }
  container.append(list);
}

function heading(container: HTMLElement, text: string, sub = false): void {
  const element = document.createElement(sub ? "h4" : "h3");
  element.className = sub ? "detail__subtitle" : "detail__title";
  element.textContent = text;
  container.append(element);
}

export function clearDetail(container: HTMLElement): void {
  container.textContent = "";
}

/** Member card: collaborators with per-edge weights, then all joint papers. */
export function renderNodeDetail(
  container: HTMLElement,
  dataset: Dataset,
  node: NodeDatum,
  incident: EdgeDatum[],
): void {
  clearDetail(container);
  const labels = labelMap(dataset);
  heading(container, node.label);

  heading(container, "Collaborators", true);
  const list = document.createElement("ul");
  list.className = "detail__collaborators";
  const entries = incident
    .map((edge) => {
      const otherId = edge.source === node.id ? edge.target : edge.source;
      return { label: labels.get(otherId) ?? otherId, weight: edge.weight };
    })
    .sort((a, b) => a.label.localeCompare(b.label));
  for (const entry of entries) {
    const item = document.createElement("li");
    item.className = "detail__collaborator";
    const plural = entry.weight === 1 ? "joint paper" : "joint papers";
    item.textContent = `${entry.label} — ${entry.weight} ${plural}`;
    list.append(item);
  }
  container.append(list);

  heading(container, "Joint papers", true);
  const papers = paperMap(dataset);
  const paperIds = new Set(incident.flatMap((edge) => edge.paper_ids));
  paperList(
    container,
    [...paperIds].flatMap((id) => papers.get(id) ?? []),
  );
}

/** Edge card: both member names and the papers behind the link. */
export function renderEdgeDetail(container: HTMLElement, dataset: Dataset, edge: EdgeDatum): void {
  clearDetail(container);
  const labels = labelMap(dataset);
  heading(container, `${labels.get(edge.source) ?? edge.source} & ${labels.get(edge.target) ?? edge.target}`);
  heading(container, `Joint papers (${edge.weight})`, true);
  const papers = paperMap(dataset);
  paperList(
    container,
    edge.paper_ids.flatMap((id) => papers.get(id) ?? []),
  );
}
