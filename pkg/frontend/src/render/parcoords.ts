/** Parallel-coordinate view of the z-scored station profiles.
 *
 * Selecting a region emphasizes its member polylines and fades the rest;
 * with no region selected, every line draws at equal weight.
 */

import type { RegionInfo, StationInfo, ZScoreTable } from "../types.js";
import { esc, extentOf, regionColor, scale } from "./svg.js";

const WIDTH = 960;
const HEIGHT = 300;
const PAD_X = 30;
const PAD_Y = 24;

export function renderParcoords(
  zscores: ZScoreTable,
  stations: Map<string, StationInfo>,
  regions: RegionInfo[],
  activeRegion: string | null,
): string {
  const nf = zscores.features.length;
  const xs = Array.from({ length: nf }, (_, j) =>
    nf === 1 ? WIDTH / 2 : PAD_X + (j * (WIDTH - 2 * PAD_X)) / (nf - 1),
  );
  const flat = zscores.values.flat();
  const yScale = scale(extentOf(flat), HEIGHT - PAD_Y, PAD_Y);

  const axes = xs
    .map(
      (x, j) =>
        `<line class="pc-axis" x1="${x.toFixed(1)}" y1="${PAD_Y}" x2="${x.toFixed(1)}" y2="${HEIGHT - PAD_Y}" stroke="#ddd"/>` +
        `<title>${esc(zscores.features[j])}</title>`,
    )
    .join("");

  const lines = zscores.stations
    .map((sid, i) => {
      const info = stations.get(sid);
      const name = info?.region_name ?? "";
      const active = activeRegion !== null && name === activeRegion;
      const faded = activeRegion !== null && !active;
      const pts = zscores.values[i]
        .map((v, j) => `${xs[j].toFixed(1)},${yScale(v).toFixed(1)}`)
        .join(" ");
      const color = info ? regionColor(info.region_label) : "#888";
      return (
        `<polyline class="pc-line${active ? " active" : ""}${faded ? " faded" : ""}" ` +
        `data-station="${esc(sid)}" data-region="${esc(name)}" points="${pts}" ` +
        `fill="none" stroke="${color}" ` +
        `stroke-width="${active ? 2.4 : 1}" stroke-opacity="${faded ? 0.12 : active ? 0.95 : 0.55}"/>`
      );
    })
    .join("");

  const legend = regions
    .map((r, i) => {
      const x = PAD_X + i * 150;
      const active = r.name === activeRegion;
      return (
        `<g class="legend-item" data-region="${esc(r.name)}">` +
        `<rect x="${x}" y="2" width="12" height="12" fill="${regionColor(r.label)}" ` +
        `stroke="${active ? "#111" : "none"}" stroke-width="2"/>` +
        `<text x="${x + 16}" y="12" font-size="11">${esc(r.name)} (${r.size})</text></g>`
      );
    })
    .join("");

  return (
    `<svg id="parcoords" viewBox="0 0 ${WIDTH} ${HEIGHT}" width="${WIDTH}" height="${HEIGHT}">` +
    axes +
    lines +
    legend +
    `</svg>`
  );
}
