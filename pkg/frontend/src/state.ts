/** Selection state and its pure reducers.
 *
 * Every view is a pure function of (AppState); replaying an action log over
 * the same payload cache reproduces the identical rendered document, which
 * the test suite asserts literally.
 */

import type {
  ErrorCell,
  ErrorVar,
  GlyphMetric,
  GlyphPayload,
  Lag,
  StaticPayloads,
} from "./types.js";
import { ERROR_VARS, LAGS } from "./types.js";
import { scatterLayout, SCATTER_SIZE } from "./render/scatter.js";

export interface BrushRect {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export interface Selection {
  region: string | null;
  axes: [ErrorVar] | [ErrorVar, ErrorVar];
  lag: Lag;
  metric: GlyphMetric;
  brushed: string[];
  brushRect: BrushRect | null;
}

export interface AppState {
  statics: StaticPayloads;
  errorsByLag: Partial<Record<string, ErrorCell[]>>;
  glyphsByMetric: Partial<Record<GlyphMetric, GlyphPayload>>;
  selection: Selection;
}

export type Action =
  | { type: "highlightRegion"; region: string | null }
  | { type: "setLag"; lag: Lag }
  | { type: "setAxes"; x: ErrorVar; y: ErrorVar | null }
  | { type: "setMetric"; metric: GlyphMetric }
  | { type: "brushRect"; rect: BrushRect }
  | { type: "clickStation"; station: string }
  | { type: "clearBrush" }
  | { type: "errorsLoaded"; lag: Lag; cells: ErrorCell[] }
  | { type: "glyphsLoaded"; metric: GlyphMetric; payload: GlyphPayload };

export function initialState(statics: StaticPayloads): AppState {
  return {
    statics,
    errorsByLag: {},
    glyphsByMetric: {},
    selection: {
      region: null,
      axes: ["mean_abs_err_min_temp", "precip_error"],
      lag: "all",
      metric: "min_temp",
      brushed: [],
      brushRect: null,
    },
  };
}

export function currentCells(state: AppState): ErrorCell[] {
  return state.errorsByLag[String(state.selection.lag)] ?? [];
}

/** Stations plotted under the current lag/axes filters. */
export function visibleStations(state: AppState): string[] {
  const layout = scatterLayout(currentCells(state), state.selection.axes, SCATTER_SIZE);
  return layout.points.map((p) => p.station);
}

function normalizeBrush(rect: BrushRect): BrushRect {
  return {
    x0: Math.min(rect.x0, rect.x1),
    x1: Math.max(rect.x0, rect.x1),
    y0: Math.min(rect.y0, rect.y1),
    y1: Math.max(rect.y0, rect.y1),
  };
}

export function reduce(state: AppState, action: Action): AppState {
  const sel = state.selection;
  switch (action.type) {
    case "highlightRegion": {
      if (action.region !== null && !state.statics.regions.some((r) => r.name === action.region)) {
        console.warn(`unknown region ${action.region}; ignoring`);
        return state;
      }
      if (sel.region === action.region) {
        return state; // idempotent reselect
      }
      return withSelection(state, { ...sel, region: action.region });
    }
    case "setLag": {
      if (!LAGS.includes(action.lag)) {
        console.warn(`invalid lag ${String(action.lag)}; control rejected`);
        return state;
      }
      // switching lag reloads the scatter; brushes never survive it
      return withSelection(state, { ...sel, lag: action.lag, brushed: [], brushRect: null });
    }
    case "setAxes": {
      if (!ERROR_VARS.includes(action.x) || (action.y !== null && !ERROR_VARS.includes(action.y))) {
        console.warn("unknown error variable; ignoring");
        return state;
      }
      if (action.y === action.x) {
        console.warn("axes must be distinct; ignoring");
        return state;
      }
      const axes: Selection["axes"] = action.y === null ? [action.x] : [action.x, action.y];
      return withSelection(state, { ...sel, axes, brushed: [], brushRect: null });
    }
    case "setMetric":
      return withSelection(state, { ...sel, metric: action.metric });
    case "brushRect": {
      const rect = normalizeBrush(action.rect);
      const layout = scatterLayout(currentCells(state), sel.axes, SCATTER_SIZE);
      const hit = layout.points
        .filter((p) => p.x >= rect.x0 && p.x <= rect.x1 && p.y >= rect.y0 && p.y <= rect.y1)
        .map((p) => p.station)
        .sort();
      if (hit.length === 0) {
        return withSelection(state, { ...sel, brushed: [], brushRect: null });
      }
      return withSelection(state, { ...sel, brushed: hit, brushRect: rect });
    }
    case "clickStation": {
      const visible = new Set(visibleStations(state));
      if (!visible.has(action.station)) {
        return state;
      }
      const brushed = sel.brushed.includes(action.station)
        ? sel.brushed.filter((s) => s !== action.station)
        : [...sel.brushed, action.station].sort();
      return withSelection(state, { ...sel, brushed, brushRect: null });
    }
    case "clearBrush":
      return withSelection(state, { ...sel, brushed: [], brushRect: null });
    case "errorsLoaded":
      return {
        ...state,
        errorsByLag: { ...state.errorsByLag, [String(action.lag)]: action.cells },
      };
    case "glyphsLoaded":
      return {
        ...state,
        glyphsByMetric: { ...state.glyphsByMetric, [action.metric]: action.payload },
      };
  }
}

function withSelection(state: AppState, selection: Selection): AppState {
  return { ...state, selection };
}

/** Fold an action log; with an identical payload cache this is the replay. */
export function replay(statics: StaticPayloads, actions: Action[]): AppState {
  return actions.reduce(reduce, initialState(statics));
}
