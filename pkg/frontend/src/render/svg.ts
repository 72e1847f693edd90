/** Tiny SVG/scale helpers shared by the views. */

export interface Extent {
  lo: number;
  hi: number;
}

export function extentOf(values: number[]): Extent {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!isFinite(lo)) return { lo: 0, hi: 1 };
  if (lo === hi) return { lo: lo - 0.5, hi: hi + 0.5 };
  return { lo, hi };
}

/** Linear map from a data extent onto [out0, out1]. */
export function scale(ext: Extent, out0: number, out1: number): (v: number) => number {
  const span = ext.hi - ext.lo;
  return (v) => out0 + ((v - ext.lo) / span) * (out1 - out0);
}

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function fmt(v: number | null, digits = 2): string {
  return v === null ? "–" : v.toFixed(digits);
}

/** Stable color per region label (palette cycles past eight). */
export function regionColor(label: number): string {
  const palette = [
    "#4c78a8",
    "#f58518",
    "#54a24b",
    "#e45756",
    "#72b7b2",
    "#b279a2",
    "#9d755d",
    "#eeca3b",
  ];
  return palette[(label - 1 + palette.length * 4) % palette.length];
}

export function polylinePoints(vertices: [number, number][], tx: (v: number) => number, ty: (v: number) => number): string {
  return vertices.map(([x, y]) => `${tx(x).toFixed(2)},${ty(y).toFixed(2)}`).join(" ");
}
