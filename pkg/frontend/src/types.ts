/** Payload shapes served by the weatherlens HTTP API. */

export type Lag = "all" | 0 | 1 | 2 | 3 | 4 | 5;

export type ErrorVar =
  | "mean_abs_err_min_temp"
  | "mean_abs_err_max_temp"
  | "precip_error";

export type GlyphMetric = "min_temp" | "max_temp" | "precip";

export const ERROR_VARS: ErrorVar[] = [
  "mean_abs_err_min_temp",
  "mean_abs_err_max_temp",
  "precip_error",
];

export const ERROR_VAR_LABELS: Record<ErrorVar, string> = {
  mean_abs_err_min_temp: "min temp error (°F)",
  mean_abs_err_max_temp: "max temp error (°F)",
  precip_error: "precip error (1 − BSS)",
};

export const LAGS: Lag[] = ["all", 0, 1, 2, 3, 4, 5];

export interface StationInfo {
  station_id: string;
  name: string;
  longitude: number;
  latitude: number;
  elevation: number;
  distance_to_coast: number | null;
  region_label: number;
  region_name: string;
}

export interface ErrorCell {
  station_id: string;
  lag: Lag;
  month: number | "all";
  mean_abs_err_min_temp: number | null;
  mean_abs_err_max_temp: number | null;
  precip_error: number | null;
  n_days: number;
}

export interface RegionInfo {
  label: number;
  name: string;
  size: number;
  stations: string[];
}

export interface ZScoreTable {
  features: string[];
  stations: string[];
  values: number[][];
}

export interface CorrelationRow {
  region: string;
  var_x: string;
  var_y: string;
  n: number;
  rho: number;
  p_value: number;
  significant: boolean;
}

export interface GlyphShape {
  station_id: string;
  metric: GlyphMetric;
  anchor: [number, number];
  radii: number[];
  gap_months: number[];
  vertices: [number, number][];
}

export interface EllipseShape {
  region: string;
  var_x: string;
  var_y: string;
  rho: number;
  significant: boolean;
  anchor: [number, number];
  offset: [number, number];
  vertices: [number, number][];
}

export interface GlyphPayload {
  metric: GlyphMetric;
  alpha: number;
  projection: Record<string, unknown>;
  global_max: number | null;
  stations: { station_id: string; anchor: [number, number] }[];
  glyphs: GlyphShape[];
  ellipses: EllipseShape[];
}

export interface StaticPayloads {
  stations: StationInfo[];
  regions: RegionInfo[];
  zscores: ZScoreTable;
  correlations: CorrelationRow[];
}
