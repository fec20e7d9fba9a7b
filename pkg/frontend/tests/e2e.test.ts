// End-to-end: the real engine serves the analyzed fixture corpus (spawned in
// globalSetup); the explorer runs against it over actual HTTP.
import { afterEach, beforeEach, describe, expect, inject, it } from "vitest";
import { Explorer } from "../src/explorer.js";
import type { Dataset, Manifest } from "../src/types.js";
import { nodeFetch } from "./helpers.js";

const base = inject("e2eBase");

async function fetchJson<T>(path: string): Promise<T> {
  const response = await nodeFetch(base + path);
  expect(response.ok).toBe(true);
  return (await response.json()) as T;
}

const live: Explorer[] = [];

async function makeExplorer() {
  const root = document.createElement("div");
  document.body.append(root);
  const explorer = new Explorer(root, { baseUrl: base, fetchFn: nodeFetch });
  live.push(explorer);
  await explorer.init();
  return { explorer, root };
}

beforeEach(() => {
  document.body.innerHTML = "";
  window.location.hash = "";
});

afterEach(() => {
  for (const explorer of live.splice(0)) {
    explorer.dispose();
  }
});

describe("explorer against the real server", () => {
  it("renders exactly the dataset's node and edge counts", async () => {
    const manifest = await fetchJson<Manifest>("/manifest.json");
    expect(manifest.datasets).toHaveLength(3);
    const last = manifest.datasets[manifest.datasets.length - 1];
    const dataset = await fetchJson<Dataset>("/" + last.path);

    const { explorer, root } = await makeExplorer();
    expect(explorer.activeRange).toBe("2011-2013");
    expect(root.querySelectorAll("circle.node")).toHaveLength(dataset.nodes.length);
    expect(root.querySelectorAll("g.edge")).toHaveLength(dataset.edges.length);
    const banner = root.querySelector(".explorer__banner") as HTMLElement;
    expect(banner.hidden).toBe(true);
  });

  it("clicking the weight-2 edge lists exactly its two papers", async () => {
    const { explorer, root } = await makeExplorer();
    const dataset = explorer.currentDataset!;
    const heavy = dataset.edges.find((edge) => edge.weight === 2)!;
    expect(heavy).toBeDefined();

    const group = explorer.currentScene!.edgeElements.get(`${heavy.source}|${heavy.target}`)!;
    group.dispatchEvent(new MouseEvent("click", { bubbles: true }));

    const papers = [...root.querySelectorAll(".detail__paper")].map((item) => item.textContent);
    expect(papers).toHaveLength(2);
    expect(papers[0]).toContain("(2011)");
    expect(papers[1]).toContain("(2012)");
  });

  it("locator finds a single member and centers the viewport on it", async () => {
    const { explorer, root } = await makeExplorer();
    const input = root.querySelector(".locator__input") as HTMLInputElement;
    input.value = "ali";
    input.dispatchEvent(new Event("input", { bubbles: true }));

    const choices = [...root.querySelectorAll(".locator__choose")];
    expect(choices.map((button) => button.textContent)).toEqual(["Alice Ray"]);
    (choices[0] as HTMLButtonElement).click();

    const circle = explorer.currentScene!.nodeElements.get("m1")!;
    expect(circle.classList.contains("is-pulsing")).toBe(true);
    expect(Number(circle.getAttribute("cx"))).toBeCloseTo(400, 6);
    expect(Number(circle.getAttribute("cy"))).toBeCloseTo(300, 6);
  });

  it("switches among all three ranges without error", async () => {
    const { explorer, root } = await makeExplorer();
    const banner = root.querySelector(".explorer__banner") as HTMLElement;
    for (const label of ["2011-2011", "2011-2012", "2011-2013", "2011-2011"]) {
      await explorer.selectRange(label);
      expect(explorer.activeRange).toBe(label);
      expect(banner.hidden).toBe(true);
      const dataset = await fetchJson<Dataset>(`/graph-${label}.json`);
      expect(root.querySelectorAll("circle.node")).toHaveLength(dataset.nodes.length);
      expect(root.querySelectorAll("g.edge")).toHaveLength(dataset.edges.length);
      expect(window.location.hash).toBe(`#range=${label}`);
    }
  });

  it("every rendered circle sits at its dataset coordinates under the transform", async () => {
    const { explorer } = await makeExplorer();
    const scene = explorer.currentScene!;
    for (const node of scene.dataset.nodes) {
      const circle = scene.nodeElements.get(node.id)!;
      const expectedX = node.x * scene.transform.k + scene.transform.tx;
      const expectedY = node.y * scene.transform.k + scene.transform.ty;
      expect(Number(circle.getAttribute("cx"))).toBeCloseTo(expectedX, 9);
      expect(Number(circle.getAttribute("cy"))).toBeCloseTo(expectedY, 9);
    }
  });
});
