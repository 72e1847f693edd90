/** Error scatterplot (or 1-D strip when a single axis is chosen).
 *
 * The layout is a pure function of (cells, axes, size); the brush reducer
 * hit-tests against the same layout, so what the user sees is exactly what
 * a rectangle selects.
 */

import type { ErrorCell, ErrorVar, StationInfo } from "../types.js";
import { ERROR_VAR_LABELS } from "../types.js";
import type { BrushRect } from "../state.js";
import { esc, extentOf, regionColor, scale } from "./svg.js";

export interface Size {
  width: number;
  height: number;
  pad: number;
}

export const SCATTER_SIZE: Size = { width: 460, height: 360, pad: 44 };

export interface ScatterPoint {
  station: string;
  x: number;
  y: number;
  vx: number;
  vy: number | null;
}

export interface ScatterLayout {
  points: ScatterPoint[];
  xLabel: string;
  yLabel: string;
}

export function scatterLayout(
  cells: ErrorCell[],
  axes: [ErrorVar] | [ErrorVar, ErrorVar],
  size: Size,
): ScatterLayout {
  const [xVar, yVar] = [axes[0], axes.length > 1 ? axes[1]! : null];
  const overall = cells.filter((c) => c.month === "all");
  const usable = overall.filter(
    (c) => c[xVar] !== null && (yVar === null || c[yVar] !== null),
  );
  const xs = usable.map((c) => c[xVar] as number);
  const xScale = scale(extentOf(xs), size.pad, size.width - size.pad);
  let points: ScatterPoint[];
  if (yVar === null) {
    const mid = size.height / 2;
    points = usable.map((c) => ({
      station: c.station_id,
      x: xScale(c[xVar] as number),
      y: mid,
      vx: c[xVar] as number,
      vy: null,
    }));
  } else {
    const ys = usable.map((c) => c[yVar] as number);
    const yScale = scale(extentOf(ys), size.height - size.pad, size.pad);
    points = usable.map((c) => ({
      station: c.station_id,
      x: xScale(c[xVar] as number),
      y: yScale(c[yVar] as number),
      vx: c[xVar] as number,
      vy: c[yVar] as number,
    }));
  }
  return {
    points,
    xLabel: ERROR_VAR_LABELS[xVar],
    yLabel: yVar === null ? "(strip)" : ERROR_VAR_LABELS[yVar],
  };
}

export function renderScatter(
  cells: ErrorCell[],
  axes: [ErrorVar] | [ErrorVar, ErrorVar],
  stations: Map<string, StationInfo>,
  brushed: Set<string>,
  brushRect: BrushRect | null,
  size: Size = SCATTER_SIZE,
): string {
  const layout = scatterLayout(cells, axes, size);
  const dots = layout.points
    .map((p) => {
      const info = stations.get(p.station);
      const color = info ? regionColor(info.region_label) : "#999";
      const hit = brushed.has(p.station);
      return (
        `<circle class="dot${hit ? " brushed" : ""}" data-station="${esc(p.station)}" ` +
        `cx="${p.x.toFixed(2)}" cy="${p.y.toFixed(2)}" r="${hit ? 6 : 4}" ` +
        `fill="${color}" fill-opacity="${hit ? 1 : 0.65}" ` +
        `stroke="${hit ? "#111" : "none"}" stroke-width="1.5">` +
        `<title>${esc(info?.name ?? p.station)}</title></circle>`
      );
    })
    .join("");
  const rect = brushRect
    ? `<rect class="brush" x="${brushRect.x0.toFixed(1)}" y="${brushRect.y0.toFixed(1)}" ` +
      `width="${(brushRect.x1 - brushRect.x0).toFixed(1)}" height="${(brushRect.y1 - brushRect.y0).toFixed(1)}" ` +
      `fill="#5b8ff9" fill-opacity="0.12" stroke="#5b8ff9" stroke-dasharray="4 3"/>`
    : "";
  return (
    `<svg id="scatter" viewBox="0 0 ${size.width} ${size.height}" width="${size.width}" height="${size.height}">` +
    `<rect class="frame" x="0" y="0" width="${size.width}" height="${size.height}" fill="#fdfdfd" stroke="#ccc"/>` +
    `<text class="axis-label" x="${size.width / 2}" y="${size.height - 8}" text-anchor="middle">${esc(layout.xLabel)}</text>` +
    `<text class="axis-label" transform="rotate(-90)" x="${-size.height / 2}" y="14" text-anchor="middle">${esc(layout.yLabel)}</text>` +
    dots +
    rect +
    `</svg>`
  );
}
