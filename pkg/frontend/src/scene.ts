import {
  apply,
  boundsOf,
  centerTransform,
  fitTransform,
  panBy,
  zoomAt,
  type Transform,
} from "./geometry.js";
import type { Dataset, EdgeDatum, NodeDatum } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

/** Radius keeps the circle area proportional to the degree. */
export function nodeRadius(degree: number): number {
  return 4 * Math.sqrt(Math.max(degree, 1));
}

/** Thickness grows with the joint-paper count but never past 6px. */
export function edgeThickness(weight: number): number {
  return Math.min(1 + Math.log2(Math.max(weight, 1)), 6);
}

export function edgeKey(edge: Pick<EdgeDatum, "source" | "target">): string {
  return `${edge.source}|${edge.target}`;
}

export interface SceneCallbacks {
  onNodeClick(node: NodeDatum): void;
  onEdgeClick(edge: EdgeDatum): void;
}

/** One rendered dataset: circles and lines at precomputed positions.
 *
 * The scene never computes layout or clustering; it draws exactly the
 * coordinates and cluster colors found in the dataset, mapped through the
 * viewport transform.
 */
export class Scene {
  readonly nodeElements = new Map<string, SVGCircleElement>();
  readonly edgeElements = new Map<string, SVGGElement>();
  readonly incidentEdges = new Map<string, EdgeDatum[]>();
  transform: Transform;

  private readonly width: number;
  private readonly height: number;
  private dragFrom: { x: number; y: number } | null = null;
  private detachPanZoom: (() => void) | null = null;

  constructor(
    private readonly svg: SVGSVGElement,
    readonly dataset: Dataset,
    private readonly callbacks: SceneCallbacks,
  ) {
    const viewBox = (svg.getAttribute("viewBox") ?? "0 0 800 600").split(/\s+/).map(Number);
    this.width = viewBox[2] || 800;
    this.height = viewBox[3] || 600;

    svg.textContent = "";
    const colorOf = new Map(dataset.clusters.map((cluster) => [cluster.id, cluster.color]));
    for (const node of dataset.nodes) {
      this.incidentEdges.set(node.id, []);
    }

    const edgeLayer = document.createElementNS(SVG_NS, "g");
    edgeLayer.setAttribute("class", "scene__edges");
    for (const edge of dataset.edges) {
      const group = document.createElementNS(SVG_NS, "g");
      group.setAttribute("class", "edge");
      group.setAttribute("data-edge", edgeKey(edge));
      const visible = document.createElementNS(SVG_NS, "line");
      visible.setAttribute("class", "edge__visible");
      visible.setAttribute("stroke-width", String(edgeThickness(edge.weight)));
      const hit = document.createElementNS(SVG_NS, "line");
      hit.setAttribute("class", "edge__hit");
      hit.setAttribute("stroke-width", String(Math.max(edgeThickness(edge.weight), 10)));
      group.append(visible, hit);
      group.addEventListener("click", (event) => {
        event.stopPropagation();
        this.callbacks.onEdgeClick(edge);
      });
      edgeLayer.append(group);
      this.edgeElements.set(edgeKey(edge), group);
      this.incidentEdges.get(edge.source)?.push(edge);
      this.incidentEdges.get(edge.target)?.push(edge);
    }
    svg.append(edgeLayer);

    const nodeLayer = document.createElementNS(SVG_NS, "g");
    nodeLayer.setAttribute("class", "scene__nodes");
    for (const node of dataset.nodes) {
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("class", "node");
      circle.setAttribute("data-node", node.id);
      circle.setAttribute("r", String(nodeRadius(node.degree)));
      circle.setAttribute("fill", colorOf.get(node.cluster) ?? "#888888");
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = node.label;
      circle.append(title);
      circle.addEventListener("click", (event) => {
        event.stopPropagation();
        this.callbacks.onNodeClick(node);
      });
      nodeLayer.append(circle);
      this.nodeElements.set(node.id, circle);
    }
    svg.append(nodeLayer);

    this.transform = fitTransform(boundsOf(dataset.nodes), this.width, this.height);
    this.applyTransform();
    this.attachPanZoom();
  }

  node(id: string): NodeDatum | undefined {
    return this.dataset.nodes.find((node) => node.id === id);
  }

  setTransform(transform: Transform): void {
    this.transform = transform;
    this.applyTransform();
  }

  /** Project every element through the current transform. Data coordinates
   * are read fresh from the dataset each time; nothing is mutated. */
  applyTransform(): void {
    const positions = new Map(this.dataset.nodes.map((n) => [n.id, apply(this.transform, n.x, n.y)]));
    for (const node of this.dataset.nodes) {
      const [cx, cy] = positions.get(node.id)!;
      const circle = this.nodeElements.get(node.id)!;
      circle.setAttribute("cx", String(cx));
      circle.setAttribute("cy", String(cy));
    }
    for (const edge of this.dataset.edges) {
      const [x1, y1] = positions.get(edge.source)!;
      const [x2, y2] = positions.get(edge.target)!;
      const group = this.edgeElements.get(edgeKey(edge))!;
      for (const line of group.children) {
        line.setAttribute("x1", String(x1));
        line.setAttribute("y1", String(y1));
        line.setAttribute("x2", String(x2));
        line.setAttribute("y2", String(y2));
      }
    }
  }

  /** Pan/zoom the viewport so the node sits at the center, and pulse it. */
  centerOn(nodeId: string): void {
    const node = this.node(nodeId);
    if (!node) {
      return;
    }
    const k = Math.max(this.transform.k, fitTransform(boundsOf(this.dataset.nodes), this.width, this.height).k * 2);
    this.setTransform(centerTransform(this.transform, node.x, node.y, this.width, this.height, k));
    for (const circle of this.nodeElements.values()) {
      circle.classList.remove("is-pulsing");
    }
    const circle = this.nodeElements.get(nodeId);
    circle?.classList.add("is-pulsing");
  }

  highlightNode(nodeId: string | null): void {
    this.clearHighlights();
    if (nodeId === null) {
      return;
    }
    this.nodeElements.get(nodeId)?.classList.add("is-selected");
    for (const edge of this.incidentEdges.get(nodeId) ?? []) {
      this.edgeElements.get(edgeKey(edge))?.classList.add("is-incident");
    }
  }

  highlightEdge(key: string | null): void {
    this.clearHighlights();
    if (key === null) {
      return;
    }
    const group = this.edgeElements.get(key);
    if (!group) {
      return;
    }
    group.classList.add("is-incident");
    const [source, target] = key.split("|");
    this.nodeElements.get(source)?.classList.add("is-selected");
    this.nodeElements.get(target)?.classList.add("is-selected");
  }

  clearHighlights(): void {
    for (const circle of this.nodeElements.values()) {
      circle.classList.remove("is-selected", "is-pulsing");
    }
    for (const group of this.edgeElements.values()) {
      group.classList.remove("is-incident");
    }
  }

  /** Remove the svg-level listeners; call before rendering a replacement
   * scene into the same element. */
  dispose(): void {
    this.detachPanZoom?.();
    this.detachPanZoom = null;
  }

  private attachPanZoom(): void {
    const onDown = (event: MouseEvent) => {
      this.dragFrom = { x: event.clientX, y: event.clientY };
    };
    const onMove = (event: MouseEvent) => {
      if (!this.dragFrom) {
        return;
      }
      const dx = event.clientX - this.dragFrom.x;
      const dy = event.clientY - this.dragFrom.y;
      this.dragFrom = { x: event.clientX, y: event.clientY };
      this.setTransform(panBy(this.transform, dx, dy));
    };
    const stopDrag = () => {
      this.dragFrom = null;
    };
    const onWheel = (event: WheelEvent) => {
      event.preventDefault();
      const factor = event.deltaY < 0 ? 1.2 : 1 / 1.2;
      this.setTransform(zoomAt(this.transform, factor, event.offsetX, event.offsetY));
    };
    this.svg.addEventListener("mousedown", onDown);
    this.svg.addEventListener("mousemove", onMove);
    this.svg.addEventListener("mouseup", stopDrag);
    this.svg.addEventListener("mouseleave", stopDrag);
    this.svg.addEventListener("wheel", onWheel);
    this.detachPanZoom = () => {
      this.svg.removeEventListener("mousedown", onDown);
      this.svg.removeEventListener("mousemove", onMove);
      this.svg.removeEventListener("mouseup", stopDrag);
      this.svg.removeEventListener("mouseleave", stopDrag);
      this.svg.removeEventListener("wheel", onWheel);
    };
  }
}
