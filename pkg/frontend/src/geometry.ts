import type { NodeDatum } from "./types.js";

/** Viewport transform: screen = world * k + (tx, ty). Positions themselves
 * are immutable; pan and zoom only ever change this mapping. */
export interface Transform {
  k: number;
  tx: number;
  ty: number;
}

export interface Bounds {
  minX: number;
  maxX: number;
  minY: number;
  maxY: number;
}

export function apply(t: Transform, x: number, y: number): [number, number] {
  return [x * t.k + t.tx, y * t.k + t.ty];
}

export function boundsOf(nodes: readonly NodeDatum[]): Bounds {
  if (nodes.length === 0) {
    return { minX: -1, maxX: 1, minY: -1, maxY: 1 };
  }
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const node of nodes) {
    minX = Math.min(minX, node.x);
    maxX = Math.max(maxX, node.x);
    minY = Math.min(minY, node.y);
    maxY = Math.max(maxY, node.y);
  }
  return { minX, maxX, minY, maxY };
}

/** Scale-and-center so the bounds fill `margin` of the viewport. */
export function fitTransform(
  bounds: Bounds,
  width: number,
  height: number,
  margin = 0.85,
): Transform {
  const spanX = Math.max(bounds.maxX - bounds.minX, 1e-9);
  const spanY = Math.max(bounds.maxY - bounds.minY, 1e-9);
  const k = Math.min((margin * width) / spanX, (margin * height) / spanY, width);
  const cx = (bounds.minX + bounds.maxX) / 2;
  const cy = (bounds.minY + bounds.maxY) / 2;
  return { k, tx: width / 2 - cx * k, ty: height / 2 - cy * k };
}

/** Keep the scale, translate so the world point lands at the viewport center. */
export function centerTransform(
  t: Transform,
  x: number,
  y: number,
  width: number,
  height: number,
  k: number = t.k,
): Transform {
  return { k, tx: width / 2 - x * k, ty: height / 2 - y * k };
}

/** Rescale about a fixed screen point, so that point stays put. */
export function zoomAt(t: Transform, factor: number, px: number, py: number): Transform {
  const k = Math.min(Math.max(t.k * factor, 1e-6), 1e9);
  const ratio = k / t.k;
  return { k, tx: px - (px - t.tx) * ratio, ty: py - (py - t.ty) * ratio };
}

export function panBy(t: Transform, dx: number, dy: number): Transform {
  return { k: t.k, tx: t.tx + dx, ty: t.ty + dy };
}
