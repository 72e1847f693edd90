/** Station map with glyph overlay, drawn in the bundle's projected plane.
 *
 * Anchors, glyph polygons, and correlation ellipses all arrive in the same
 * projected coordinates (the payload carries the projection config), so
 * overlays align with markers by construction; this view only fits that
 * plane into the viewport (y flipped: projected north is up).
 */

import type { GlyphPayload, StationInfo } from "../types.js";
import { esc, extentOf, polylinePoints, regionColor, scale } from "./svg.js";

const WIDTH = 960;
const HEIGHT = 560;
const PAD = 30;

export function renderMap(
  payload: GlyphPayload | null,
  stations: Map<string, StationInfo>,
  brushed: Set<string>,
  showGlyphs: boolean,
): string {
  if (!payload) {
    return `<svg id="map" viewBox="0 0 ${WIDTH} ${HEIGHT}" width="${WIDTH}" height="${HEIGHT}"><text x="20" y="30">loading…</text></svg>`;
  }
  const xsAll = payload.stations.map((s) => s.anchor[0]);
  const ysAll = payload.stations.map((s) => s.anchor[1]);
  const tx = scale(extentOf(xsAll), PAD, WIDTH - PAD);
  const tyRaw = scale(extentOf(ysAll), HEIGHT - PAD, PAD);
  const ty = (v: number) => tyRaw(v);

  const glyphs = showGlyphs
    ? payload.glyphs
        .map((g) => {
          const info = stations.get(g.station_id);
          const color = info ? regionColor(info.region_label) : "#777";
          return (
            `<polygon class="glyph" data-station="${esc(g.station_id)}" ` +
            `points="${polylinePoints(g.vertices, tx, ty)}" ` +
            `fill="${color}" fill-opacity="0.25" stroke="${color}" stroke-width="1"/>`
          );
        })
        .join("")
    : "";

  const ellipses = payload.ellipses
    .map(
      (e) =>
        `<polyline class="ellipse${e.significant ? " significant" : ""}" ` +
        `data-region="${esc(e.region)}" data-pair="${esc(e.var_x)}~${esc(e.var_y)}" ` +
        `points="${polylinePoints(e.vertices, tx, ty)}" fill="none" ` +
        `stroke="${e.rho >= 0 ? "#31708f" : "#b35806"}" ` +
        `stroke-width="${e.significant ? 1.8 : 0.9}" stroke-opacity="0.85"/>`,
    )
    .join("");

  const markers = payload.stations
    .map((s) => {
      const info = stations.get(s.station_id);
      const hit = brushed.has(s.station_id);
      const color = info ? regionColor(info.region_label) : "#777";
      return (
        `<circle class="marker${hit ? " brushed" : ""}" data-station="${esc(s.station_id)}" ` +
        `cx="${tx(s.anchor[0]).toFixed(1)}" cy="${ty(s.anchor[1]).toFixed(1)}" ` +
        `r="${hit ? 7 : 3}" fill="${hit ? "#111" : color}" ` +
        `stroke="${hit ? "#ffdd57" : "#fff"}" stroke-width="${hit ? 2.5 : 0.8}">` +
        `<title>${esc(info?.name ?? s.station_id)}</title></circle>`
      );
    })
    .join("");

  return (
    `<svg id="map" viewBox="0 0 ${WIDTH} ${HEIGHT}" width="${WIDTH}" height="${HEIGHT}">` +
    `<rect x="0" y="0" width="${WIDTH}" height="${HEIGHT}" fill="#f7fbff" stroke="#ccc"/>` +
    glyphs +
    ellipses +
    markers +
    `</svg>`
  );
}
