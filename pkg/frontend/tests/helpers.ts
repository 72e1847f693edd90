/** Fixture payloads captured from a real bundle served by the backend. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { Action, AppState } from "../src/state.js";
import { initialState, reduce } from "../src/state.js";
import type {
  CorrelationRow,
  ErrorCell,
  GlyphPayload,
  RegionInfo,
  StationInfo,
  StaticPayloads,
  ZScoreTable,
} from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf8")) as T;
}

export interface Truth {
  cluster_of: Record<string, string>;
  expected_k6_sizes: Record<string, number>;
  best_station: string;
  worst_station: string;
  lakes_stations: string[];
  stray_stations: string[];
  pacific_members: string[];
  atlantic_members: string[];
}

export const truth = fixture<Truth>("truth.json");

export function staticPayloads(): StaticPayloads {
  const stations = fixture<{ stations: StationInfo[] }>("stations.json").stations;
  const regions = fixture<{ regions: RegionInfo[]; zscore_table: ZScoreTable }>("regions.json");
  const correlations = fixture<{ correlations: CorrelationRow[] }>("correlations.json");
  return {
    stations,
    regions: regions.regions,
    zscores: regions.zscore_table,
    correlations: correlations.correlations,
  };
}

export function errorsFor(lag: "all" | 1): ErrorCell[] {
  const name = lag === "all" ? "errors_all.json" : "errors_1.json";
  return fixture<{ cells: ErrorCell[] }>(name).cells;
}

export function glyphsFor(metric: "min_temp" | "precip"): GlyphPayload {
  return fixture<GlyphPayload>(`glyphs_${metric}.json`);
}

/** State with the payload caches preloaded, as right after boot. */
export function loadedState(): AppState {
  let state = initialState(staticPayloads());
  state = reduce(state, { type: "errorsLoaded", lag: "all", cells: errorsFor("all") });
  state = reduce(state, { type: "errorsLoaded", lag: 1, cells: errorsFor(1) });
  state = reduce(state, { type: "glyphsLoaded", metric: "min_temp", payload: glyphsFor("min_temp") });
  state = reduce(state, { type: "glyphsLoaded", metric: "precip", payload: glyphsFor("precip") });
  return state;
}

export function run(state: AppState, actions: Action[]): AppState {
  return actions.reduce(reduce, state);
}
