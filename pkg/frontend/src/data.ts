import type { Dataset, Manifest } from "./types.js";

/** Minimal fetch surface so tests (and non-browser runtimes) can inject one. */
export type FetchLike = (url: string) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

const defaultFetch: FetchLike = (url) => fetch(url);

export class DataClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = defaultFetch,
  ) {}

  private async get(path: string): Promise<unknown> {
    let response: Awaited<ReturnType<FetchLike>>;
    try {
      response = await this.fetchFn(this.baseUrl + path);
    } catch (error) {
      throw new Error(`could not fetch ${path}: ${(error as Error).message}`);
    }
    if (!response.ok) {
      throw new Error(`could not fetch ${path}: HTTP ${response.status}`);
    }
    return response.json();
  }

  manifest(): Promise<Manifest> {
    return this.get("/manifest.json") as Promise<Manifest>;
  }

  dataset(path: string): Promise<Dataset> {
    return this.get("/" + path) as Promise<Dataset>;
  }
}
