import { get } from "node:http";
import type { FetchLike } from "../src/data.js";
import type { Dataset, Manifest } from "../src/types.js";

/** node:http-backed FetchLike, independent of whatever `fetch` the test
 * environment exposes. */
export const nodeFetch: FetchLike = (url) =>
  new Promise((resolve, reject) => {
    get(url, (response) => {
      const chunks: Buffer[] = [];
      response.on("data", (chunk) => chunks.push(chunk));
      response.on("end", () => {
        const body = Buffer.concat(chunks).toString("utf-8");
        resolve({
          ok: (response.statusCode ?? 0) >= 200 && (response.statusCode ?? 0) < 300,
          status: response.statusCode ?? 0,
          json: () => Promise.resolve(JSON.parse(body)),
        });
      });
    }).on("error", reject);
  });

/** FetchLike serving canned payloads keyed by path, recording each request. */
export function stubFetch(routes: Record<string, unknown>): FetchLike & { requests: string[] } {
  const requests: string[] = [];
  const fn: FetchLike = (url) => {
    requests.push(url);
    if (url in routes) {
      return Promise.resolve({
        ok: true,
        status: 200,
        json: () => Promise.resolve(structuredClone(routes[url])),
      });
    }
    return Promise.resolve({
      ok: false,
      status: 404,
      json: () => Promise.reject(new Error("not json")),
    });
  };
  return Object.assign(fn, { requests });
}

export function makeDataset(overrides: Partial<Dataset> = {}): Dataset {
  return {
    version: 1,
    year_range: { from: 2011, to: 2011 },
    nodes: [
      { id: "m1", label: "Alice Ray", x: 0.0, y: 0.0, cluster: 0, degree: 2, weighted_degree: 3 },
      { id: "m2", label: "Bob Chen", x: 1.0, y: 0.0, cluster: 0, degree: 2, weighted_degree: 3 },
      { id: "m3", label: "Carol Diaz", x: 0.5, y: 1.0, cluster: 1, degree: 2, weighted_degree: 2 },
    ],
    edges: [
      { source: "m1", target: "m2", weight: 2, paper_ids: ["p1", "p3"] },
      { source: "m1", target: "m3", weight: 1, paper_ids: ["p1"] },
      { source: "m2", target: "m3", weight: 1, paper_ids: ["p1"] },
    ],
    clusters: [
      { id: 0, size: 2, color: "#d22d2d" },
      { id: 1, size: 1, color: "#2dd2d2" },
    ],
    papers: [
      { paper_id: "p1", year: 2011, title: "Flat structures", author_ids: ["m1", "m2", "m3"] },
      { paper_id: "p3", year: 2012, title: "Surface maps", author_ids: ["m1", "m2"] },
    ],
    stats: { nodes: 3, components: 1, clusters: 2, mean_distance: 1.0, modularity: 0.1 },
    ...overrides,
  };
}

export function makeManifest(): Manifest {
  return {
    version: 1,
    datasets: [
      { from: 2011, to: 2011, path: "graph-2011-2011.json" },
      { from: 2011, to: 2012, path: "graph-2011-2012.json" },
      { from: 2011, to: 2013, path: "graph-2011-2013.json" },
    ],
  };
}

export function flushMicrotasks(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
