/** Detail table listing the brushed stations with their current errors. */

import type { ErrorCell, StationInfo } from "../types.js";
import { esc, fmt } from "./svg.js";

export function renderTable(
  brushed: string[],
  cells: ErrorCell[],
  stations: Map<string, StationInfo>,
): string {
  if (brushed.length === 0) {
    return `<table id="detail"><tbody><tr><td class="empty">no stations selected — brush or click points in the scatterplot</td></tr></tbody></table>`;
  }
  const byStation = new Map(cells.filter((c) => c.month === "all").map((c) => [c.station_id, c]));
  const rows = brushed
    .map((sid) => {
      const info = stations.get(sid);
      const cell = byStation.get(sid);
      return (
        `<tr data-station="${esc(sid)}">` +
        `<td>${esc(info?.name ?? sid)}</td>` +
        `<td>${esc(info?.region_name ?? "?")}</td>` +
        `<td>${fmt(cell?.mean_abs_err_min_temp ?? null)}</td>` +
        `<td>${fmt(cell?.mean_abs_err_max_temp ?? null)}</td>` +
        `<td>${fmt(cell?.precip_error ?? null, 3)}</td>` +
        `<td>${cell?.n_days ?? "–"}</td></tr>`
      );
    })
    .join("");
  return (
    `<table id="detail"><thead><tr>` +
    `<th>station</th><th>region</th><th>min temp err</th><th>max temp err</th>` +
    `<th>precip err</th><th>days</th></tr></thead><tbody>${rows}</tbody></table>`
  );
}
