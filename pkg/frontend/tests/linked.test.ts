/** Linked-brushing acceptance: the three surfaces always agree, the extreme
 * min-temp point surfaces the known worst forecaster, lag 1 clears the
 * lakes stations from the precipitation extreme, and replaying a selection
 * log reproduces the identical rendered document. */

import { describe, expect, it } from "vitest";

import { renderApp } from "../src/render/app.js";
import { scatterLayout, SCATTER_SIZE } from "../src/render/scatter.js";
import type { Action } from "../src/state.js";
import { currentCells, initialState, reduce } from "../src/state.js";
import { errorsFor, glyphsFor, loadedState, run, staticPayloads, truth } from "./helpers.js";

function countMatches(html: string, pattern: RegExp): number {
  return (html.match(pattern) ?? []).length;
}

describe("linked views", () => {
  it("brushing the extreme min-temp-error point surfaces the worst station", () => {
    let state = run(loadedState(), [
      { type: "setAxes", x: "mean_abs_err_min_temp", y: "mean_abs_err_max_temp" },
    ]);
    const layout = scatterLayout(currentCells(state), state.selection.axes, SCATTER_SIZE);
    const extreme = layout.points.reduce((a, b) => (b.vx > a.vx ? b : a));
    state = reduce(state, {
      type: "brushRect",
      rect: { x0: extreme.x - 6, y0: extreme.y - 6, x1: extreme.x + 6, y1: extreme.y + 6 },
    });
    expect(state.selection.brushed).toContain(truth.worst_station);
    const html = renderApp(state);
    const name = `${truth.worst_station} Station`;
    expect(html).toContain(`<td>${name}</td>`);
  });

  it("map, table, and scatter agree on the brushed set", () => {
    const state = reduce(loadedState(), {
      type: "brushRect",
      rect: { x0: 60, y0: 60, x1: 380, y1: 300 },
    });
    const n = state.selection.brushed.length;
    expect(n).toBeGreaterThan(1);
    const html = renderApp(state);
    expect(countMatches(html, /class="dot brushed"/g)).toBe(n);
    expect(countMatches(html, /class="marker brushed"/g)).toBe(n);
    expect(countMatches(html, /<tr data-station=/g)).toBe(n);
    for (const sid of state.selection.brushed) {
      expect(html).toContain(`<tr data-station="${sid}">`);
    }
  });

  it("lakes stations leave the precipitation extreme at lag 1", () => {
    const axes: Action = { type: "setAxes", x: "precip_error", y: "mean_abs_err_max_temp" };

    const atAll = run(loadedState(), [axes]);
    const allLayout = scatterLayout(currentCells(atAll), atAll.selection.axes, SCATTER_SIZE);
    const topAll = [...allLayout.points]
      .sort((a, b) => b.vx - a.vx)
      .slice(0, 4)
      .map((p) => p.station);
    for (const lake of truth.lakes_stations) {
      expect(topAll).toContain(lake);
    }

    const atOne = run(atAll, [{ type: "setLag", lag: 1 }]);
    const oneLayout = scatterLayout(currentCells(atOne), atOne.selection.axes, SCATTER_SIZE);
    const topOne = [...oneLayout.points]
      .sort((a, b) => b.vx - a.vx)
      .slice(0, 4)
      .map((p) => p.station);
    for (const lake of truth.lakes_stations) {
      expect(topOne).not.toContain(lake);
    }
  });

  it("replaying a selection log reproduces the identical document", () => {
    const statics = staticPayloads();
    const log: Action[] = [
      { type: "errorsLoaded", lag: "all", cells: errorsFor("all") },
      { type: "errorsLoaded", lag: 1, cells: errorsFor(1) },
      { type: "glyphsLoaded", metric: "min_temp", payload: glyphsFor("min_temp") },
      { type: "glyphsLoaded", metric: "precip", payload: glyphsFor("precip") },
      { type: "highlightRegion", region: "Southwest" },
      { type: "setAxes", x: "mean_abs_err_min_temp", y: "precip_error" },
      { type: "brushRect", rect: { x0: 50, y0: 50, x1: 400, y1: 330 } },
      { type: "setMetric", metric: "precip" },
      { type: "setLag", lag: 1 },
      { type: "brushRect", rect: { x0: 120, y0: 80, x1: 360, y1: 280 } },
    ];
    const first = renderApp(log.reduce(reduce, initialState(statics)));
    const second = renderApp(log.reduce(reduce, initialState(statics)));
    expect(second).toBe(first);
    // and a fresh run over freshly parsed fixtures is still identical
    const third = renderApp(
      [
        { type: "errorsLoaded", lag: "all", cells: errorsFor("all") } as Action,
        { type: "errorsLoaded", lag: 1, cells: errorsFor(1) },
        { type: "glyphsLoaded", metric: "min_temp", payload: glyphsFor("min_temp") },
        { type: "glyphsLoaded", metric: "precip", payload: glyphsFor("precip") },
        { type: "highlightRegion", region: "Southwest" },
        { type: "setAxes", x: "mean_abs_err_min_temp", y: "precip_error" },
        { type: "brushRect", rect: { x0: 50, y0: 50, x1: 400, y1: 330 } },
        { type: "setMetric", metric: "precip" },
        { type: "setLag", lag: 1 },
        { type: "brushRect", rect: { x0: 120, y0: 80, x1: 360, y1: 280 } },
      ].reduce(reduce, initialState(staticPayloads())),
    );
    expect(third).toBe(first);
  });

  it("region highlight emphasizes exactly the member polylines", () => {
    const state = run(loadedState(), [{ type: "highlightRegion", region: "Southwest" }]);
    const html = renderApp(state);
    const region = state.statics.regions.find((r) => r.name === "Southwest")!;
    expect(countMatches(html, /class="pc-line active"/g)).toBe(region.size);
    const total = state.statics.zscores.stations.length;
    expect(countMatches(html, /class="pc-line faded"/g)).toBe(total - region.size);
  });

  it("no region selected renders all lines at equal weight", () => {
    const html = renderApp(loadedState());
    expect(countMatches(html, /class="pc-line"/g)).toBe(
      staticPayloads().zscores.stations.length,
    );
    expect(html).not.toContain("pc-line faded");
  });
});
