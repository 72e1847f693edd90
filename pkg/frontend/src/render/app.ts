/** Full document = pure function of the application state. */

import type { AppState } from "../state.js";
import { currentCells } from "../state.js";
import type { ErrorVar, GlyphMetric, Lag } from "../types.js";
import { ERROR_VARS, LAGS } from "../types.js";
import { renderMap } from "./map.js";
import { renderParcoords } from "./parcoords.js";
import { renderScatter } from "./scatter.js";
import { esc } from "./svg.js";
import { renderTable } from "./table.js";

const METRICS: GlyphMetric[] = ["min_temp", "max_temp", "precip"];

function options(values: readonly string[], selected: string): string {
  return values
    .map((v) => `<option value="${esc(v)}"${v === selected ? " selected" : ""}>${esc(v)}</option>`)
    .join("");
}

export function renderControls(state: AppState): string {
  const sel = state.selection;
  const regionNames = state.statics.regions.map((r) => r.name);
  const yValue = sel.axes.length > 1 ? sel.axes[1]! : "(none)";
  return (
    `<div id="controls">` +
    `<label>region <select id="region-select">${options(["(none)", ...regionNames], sel.region ?? "(none)")}</select></label>` +
    `<label>lag <select id="lag-select">${options(LAGS.map(String), String(sel.lag))}</select></label>` +
    `<label>x <select id="x-select">${options(ERROR_VARS, sel.axes[0])}</select></label>` +
    `<label>y <select id="y-select">${options(["(none)", ...ERROR_VARS], yValue)}</select></label>` +
    `<label>glyph metric <select id="metric-select">${options(METRICS, sel.metric)}</select></label>` +
    `<button id="clear-brush">clear selection</button>` +
    `</div>`
  );
}

export function renderApp(state: AppState): string {
  const sel = state.selection;
  const stations = new Map(state.statics.stations.map((s) => [s.station_id, s]));
  const cells = currentCells(state);
  const brushedSet = new Set(sel.brushed);
  const glyphPayload = state.glyphsByMetric[sel.metric] ?? null;
  return (
    renderControls(state) +
    `<section id="parcoords-panel"><h2>weather regions (z-scored profiles)</h2>` +
    renderParcoords(state.statics.zscores, stations, state.statics.regions, sel.region) +
    `</section>` +
    `<section id="scatter-panel"><h2>forecast errors at lag ${esc(String(sel.lag))}</h2>` +
    renderScatter(cells, sel.axes, stations, brushedSet, sel.brushRect) +
    renderTable(sel.brushed, cells, stations) +
    `</section>` +
    `<section id="map-panel"><h2>station map — ${esc(sel.metric)} glyphs + correlation ellipses</h2>` +
    renderMap(glyphPayload, stations, brushedSet, true) +
    `</section>`
  );
}

export function parseLag(token: string): Lag | null {
  if (token === "all") return "all";
  const n = Number(token);
  return n >= 0 && n <= 5 && Number.isInteger(n) ? (n as Lag) : null;
}

export function parseAxis(token: string): ErrorVar | null {
  return (ERROR_VARS as string[]).includes(token) ? (token as ErrorVar) : null;
}
