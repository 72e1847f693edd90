/** Bootstrap: fetch payloads, wire DOM events to actions, re-render. */

import { ApiClient } from "./api.js";
import { parseAxis, parseLag, renderApp } from "./render/app.js";
import type { Action, AppState } from "./state.js";
import { initialState, reduce } from "./state.js";
import type { GlyphMetric, Lag } from "./types.js";

const api = new ApiClient();

let state: AppState;
let root: HTMLElement;
let dragStart: { x: number; y: number } | null = null;

function dispatch(action: Action): void {
  state = reduce(state, action);
  render();
}

function render(): void {
  root.innerHTML = renderApp(state);
}

async function ensureErrors(lag: Lag): Promise<void> {
  if (state.errorsByLag[String(lag)]) return;
  try {
    const cells = await api.errors(lag);
    dispatch({ type: "errorsLoaded", lag, cells });
  } catch (err) {
    if ((err as Error).name !== "AbortError") console.error(err);
  }
}

async function ensureGlyphs(metric: GlyphMetric): Promise<void> {
  if (state.glyphsByMetric[metric]) return;
  try {
    const payload = await api.glyphs(metric);
    dispatch({ type: "glyphsLoaded", metric, payload });
  } catch (err) {
    if ((err as Error).name !== "AbortError") console.error(err);
  }
}

function svgPoint(svg: SVGSVGElement, event: MouseEvent): { x: number; y: number } {
  const rect = svg.getBoundingClientRect();
  // parse the viewBox attribute directly; works in browsers and jsdom alike
  const vb = (svg.getAttribute("viewBox") ?? "0 0 1 1").split(/\s+/).map(Number);
  return {
    x: ((event.clientX - rect.left) / rect.width) * vb[2],
    y: ((event.clientY - rect.top) / rect.height) * vb[3],
  };
}

function wireEvents(): void {
  root.addEventListener("change", (event) => {
    const target = event.target as HTMLSelectElement;
    switch (target.id) {
      case "region-select":
        dispatch({
          type: "highlightRegion",
          region: target.value === "(none)" ? null : target.value,
        });
        break;
      case "lag-select": {
        const lag = parseLag(target.value);
        if (lag === null) break; // control rejects invalid input
        dispatch({ type: "setLag", lag });
        void ensureErrors(lag);
        break;
      }
      case "x-select":
      case "y-select": {
        const x = parseAxis((root.querySelector("#x-select") as HTMLSelectElement).value);
        const yRaw = (root.querySelector("#y-select") as HTMLSelectElement).value;
        const y = yRaw === "(none)" ? null : parseAxis(yRaw);
        if (x) dispatch({ type: "setAxes", x, y });
        break;
      }
      case "metric-select": {
        const metric = target.value as GlyphMetric;
        dispatch({ type: "setMetric", metric });
        void ensureGlyphs(metric);
        break;
      }
    }
  });

  root.addEventListener("click", (event) => {
    const el = event.target as HTMLElement;
    if (el.id === "clear-brush") {
      dispatch({ type: "clearBrush" });
      return;
    }
    const station = el.closest<Element>(".dot, .marker")?.getAttribute("data-station");
    if (station && !dragStart) {
      dispatch({ type: "clickStation", station });
      return;
    }
    const legendRegion = el.closest<Element>(".legend-item")?.getAttribute("data-region");
    if (legendRegion) {
      dispatch({
        type: "highlightRegion",
        region: state.selection.region === legendRegion ? null : legendRegion,
      });
    }
  });

  root.addEventListener("mousedown", (event) => {
    const svg = (event.target as HTMLElement).closest<SVGSVGElement>("#scatter");
    if (!svg) return;
    dragStart = svgPoint(svg, event as MouseEvent);
  });

  root.addEventListener("mouseup", (event) => {
    if (!dragStart) return;
    const svg = (event.target as HTMLElement).closest<SVGSVGElement>("#scatter");
    const start = dragStart;
    dragStart = null;
    if (!svg) return;
    const end = svgPoint(svg, event as MouseEvent);
    const tiny = Math.abs(end.x - start.x) < 3 && Math.abs(end.y - start.y) < 3;
    if (tiny) return; // treated as a click on whatever was under the cursor
    dispatch({ type: "brushRect", rect: { x0: start.x, y0: start.y, x1: end.x, y1: end.y } });
  });
}

export async function start(mount: HTMLElement): Promise<void> {
  root = mount;
  root.innerHTML = "<p>loading bundle…</p>";
  const statics = await api.statics();
  state = initialState(statics);
  render();
  wireEvents();
  await ensureErrors(state.selection.lag);
  await ensureGlyphs(state.selection.metric);
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void start(document.getElementById("app") as HTMLElement);
}
