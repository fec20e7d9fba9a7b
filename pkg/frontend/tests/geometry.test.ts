import { describe, expect, it } from "vitest";
import {
  apply,
  boundsOf,
  centerTransform,
  fitTransform,
  panBy,
  zoomAt,
  type Transform,
} from "../src/geometry.js";
import { makeDataset } from "./helpers.js";

const t: Transform = { k: 2, tx: 10, ty: -5 };

describe("transforms", () => {
  it("apply maps world to screen linearly", () => {
    expect(apply(t, 3, 4)).toEqual([16, 3]);
  });

  it("fitTransform centers the bounds in the viewport", () => {
    const bounds = boundsOf(makeDataset().nodes);
    const fit = fitTransform(bounds, 800, 600);
    const [cx, cy] = apply(fit, (bounds.minX + bounds.maxX) / 2, (bounds.minY + bounds.maxY) / 2);
    expect(cx).toBeCloseTo(400);
    expect(cy).toBeCloseTo(300);
  });

  it("fitTransform survives an empty or single-point dataset", () => {
    expect(fitTransform(boundsOf([]), 800, 600).k).toBeGreaterThan(0);
    const single = boundsOf([makeDataset().nodes[0]]);
    const fit = fitTransform(single, 800, 600);
    expect(Number.isFinite(fit.k) && fit.k > 0).toBe(true);
  });

  it("centerTransform puts the requested point at the viewport center", () => {
    const centered = centerTransform(t, 7, -2, 800, 600);
    expect(apply(centered, 7, -2)).toEqual([400, 300]);
    expect(centered.k).toBe(t.k);
  });

  it("zoomAt keeps the anchor point fixed on screen", () => {
    const zoomed = zoomAt(t, 1.5, 123, 77);
    const world: [number, number] = [(123 - t.tx) / t.k, (77 - t.ty) / t.k];
    const [before0, before1] = apply(t, ...world);
    const [after0, after1] = apply(zoomed, ...world);
    expect(after0).toBeCloseTo(before0, 9);
    expect(after1).toBeCloseTo(before1, 9);
    expect(zoomed.k).toBeCloseTo(3);
  });

  it("panBy shifts only the translation", () => {
    expect(panBy(t, 5, -1)).toEqual({ k: 2, tx: 15, ty: -6 });
  });
});
