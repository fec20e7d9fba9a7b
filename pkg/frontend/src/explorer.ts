import { DataClient, type FetchLike } from "./data.js";
import { matchMembers, renderLocatorResults } from "./locator.js";
import { clearDetail, renderEdgeDetail, renderNodeDetail } from "./panel.js";
import { Scene, edgeKey } from "./scene.js";
import { SUPPORTED_VERSION, rangeLabel, type Dataset, type EdgeDatum, type ManifestEntry, type NodeDatum } from "./types.js";

export interface ExplorerOptions {
  baseUrl?: string;
  fetchFn?: FetchLike;
}

type Selection =
  | { kind: "node"; id: string }
  | { kind: "edge"; key: string }
  | null;

const SKELETON = `
  <div class="explorer">
    <header class="explorer__header">
      <h1 class="explorer__title">Collaboration Graph</h1>
      <label class="explorer__range-label">Years
        <select class="explorer__range"></select>
      </label>
      <span class="explorer__counts"></span>
    </header>
    <div class="explorer__banner" hidden></div>
    <div class="explorer__body">
      <svg class="explorer__canvas" viewBox="0 0 800 600" preserveAspectRatio="xMidYMid meet"></svg>
      <aside class="explorer__sidebar">
        <section class="locator">
          <h2 class="locator__title">Find a member</h2>
          <input class="locator__input" type="search" placeholder="Type a name…" />
          <ul class="locator__results"></ul>
        </section>
        <section class="detail"></section>
      </aside>
    </div>
  </div>
`;

/** The explorer page: a range selector, the rendered scene, a node-locator
 * sidebar, and a detail panel for whichever node or edge is selected.
 *
 * All geometry and clustering comes precomputed in the datasets; the client
 * only draws, joins adjacent records for the panels, and pans/zooms.
 */
export class Explorer {
  readonly data: DataClient;

  private entries: ManifestEntry[] = [];
  private scene: Scene | null = null;
  private activeLabel: string | null = null;
  private selection: Selection = null;
  private fetchToken = 0;

  private readonly select: HTMLSelectElement;
  private readonly banner: HTMLElement;
  private readonly counts: HTMLElement;
  private readonly svg: SVGSVGElement;
  private readonly locatorInput: HTMLInputElement;
  private readonly locatorResults: HTMLElement;
  private readonly detail: HTMLElement;

  private readonly onHashChange = (): void => {
    const fromHash = this.rangeFromFragment();
    if (fromHash && fromHash !== this.activeLabel) {
      void this.selectRange(fromHash);
    }
  };

  constructor(root: HTMLElement, options: ExplorerOptions = {}) {
    this.data = new DataClient(options.baseUrl ?? "", options.fetchFn);
    root.innerHTML = SKELETON;
    this.select = root.querySelector(".explorer__range") as HTMLSelectElement;
    this.banner = root.querySelector(".explorer__banner") as HTMLElement;
    this.counts = root.querySelector(".explorer__counts") as HTMLElement;
    this.svg = root.querySelector(".explorer__canvas") as unknown as SVGSVGElement;
    this.locatorInput = root.querySelector(".locator__input") as HTMLInputElement;
    this.locatorResults = root.querySelector(".locator__results") as HTMLElement;
    this.detail = root.querySelector(".detail") as HTMLElement;

    this.select.addEventListener("change", () => {
      void this.selectRange(this.select.value);
    });
    this.locatorInput.addEventListener("input", () => {
      this.renderLocator();
    });
    window.addEventListener("hashchange", this.onHashChange);
  }

  /** Detach window- and svg-level listeners (tests create many explorers
   * per page; long sessions swap many scenes). */
  dispose(): void {
    window.removeEventListener("hashchange", this.onHashChange);
    this.scene?.dispose();
  }

  get currentScene(): Scene | null {
    return this.scene;
  }

  get currentDataset(): Dataset | null {
    return this.scene?.dataset ?? null;
  }

  get activeRange(): string | null {
    return this.activeLabel;
  }

  get currentSelection(): Selection {
    return this.selection;
  }

  /** Load the manifest, fill the selector chronologically, and open either
   * the range named in the URL fragment or the most complete one. */
  async init(): Promise<void> {
    let entries: ManifestEntry[];
    try {
      const manifest = await this.data.manifest();
      entries = [...manifest.datasets].sort((a, b) => a.from - b.from || a.to - b.to);
    } catch (error) {
      this.showBanner((error as Error).message);
      return;
    }
    this.entries = entries;
    this.select.textContent = "";
    for (const entry of entries) {
      const option = document.createElement("option");
      option.value = rangeLabel(entry);
      option.textContent = rangeLabel(entry);
      this.select.append(option);
    }
    const fromFragment = this.rangeFromFragment();
    const initial =
      fromFragment && entries.some((entry) => rangeLabel(entry) === fromFragment)
        ? fromFragment
        : rangeLabel(entries[entries.length - 1]);
    await this.selectRange(initial);
  }

  /** Swap the scene to another year range. Stale responses (superseded by a
   * later selection) are dropped; on any failure the previous scene stays. */
  async selectRange(label: string): Promise<void> {
    if (label === this.activeLabel) {
      return;
    }
    const entry = this.entries.find((candidate) => rangeLabel(candidate) === label);
    if (!entry) {
      this.showBanner(`Unknown year range "${label}".`);
      return;
    }
    const token = ++this.fetchToken;
    let dataset: Dataset;
    try {
      dataset = await this.data.dataset(entry.path);
    } catch (error) {
      if (token === this.fetchToken) {
        this.showBanner((error as Error).message);
      }
      return;
    }
    if (token !== this.fetchToken) {
      return; // a later selection superseded this response
    }
    if (dataset.version !== SUPPORTED_VERSION) {
      this.showBanner(
        `Dataset version ${dataset.version} is not supported (this viewer understands version ${SUPPORTED_VERSION}).`,
      );
      return;
    }
    this.hideBanner();
    this.activeLabel = label;
    if (this.select.value !== label) {
      this.select.value = label;
    }
    this.clearSelection();
    this.scene?.dispose();
    this.scene = new Scene(this.svg, dataset, {
      onNodeClick: (node) => this.onNodeClick(node),
      onEdgeClick: (edge) => this.onEdgeClick(edge),
    });
    this.counts.textContent = `${dataset.nodes.length} co-authors · ${dataset.edges.length} collaborations`;
    this.renderLocator();
    this.writeFragment(label);
  }

  /** Toggle node selection; selected nodes list collaborators and papers. */
  onNodeClick(node: NodeDatum): void {
    if (!this.scene) {
      return;
    }
    if (this.selection?.kind === "node" && this.selection.id === node.id) {
      this.clearSelection();
      return;
    }
    this.selection = { kind: "node", id: node.id };
    const incident = this.scene.incidentEdges.get(node.id) ?? [];
    renderNodeDetail(this.detail, this.scene.dataset, node, incident);
    this.scene.highlightNode(node.id);
  }

  /** Toggle edge selection; selected edges list the joint papers. */
  onEdgeClick(edge: EdgeDatum): void {
    if (!this.scene) {
      return;
    }
    const key = edgeKey(edge);
    if (this.selection?.kind === "edge" && this.selection.key === key) {
      this.clearSelection();
      return;
    }
    this.selection = { kind: "edge", key };
    renderEdgeDetail(this.detail, this.scene.dataset, edge);
    this.scene.highlightEdge(key);
  }

  /** Center the viewport on a located member and pulse its circle. */
  locate(nodeId: string): void {
    this.scene?.centerOn(nodeId);
  }

  clearSelection(): void {
    this.selection = null;
    clearDetail(this.detail);
    this.scene?.clearHighlights();
  }

  private renderLocator(): void {
    if (!this.scene) {
      return;
    }
    const matches = matchMembers(this.scene.dataset.nodes, this.locatorInput.value);
    renderLocatorResults(this.locatorResults, matches, (node) => this.locate(node.id));
  }

  private rangeFromFragment(): string | null {
    const match = /(?:^|[#&])range=([0-9]{1,4}-[0-9]{1,4})/.exec(window.location.hash);
    return match ? match[1] : null;
  }

  private writeFragment(label: string): void {
    const fragment = `#range=${label}`;
    if (window.location.hash !== fragment) {
      window.location.hash = fragment;
    }
  }

  private showBanner(message: string): void {
    this.banner.textContent = message;
    this.banner.hidden = false;
  }

  private hideBanner(): void {
    this.banner.textContent = "";
    this.banner.hidden = true;
  }
}
