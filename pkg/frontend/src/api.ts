/** Typed API client; superseded in-flight fetches are aborted so a stale
 * lag or metric can never render over a newer one. */

import type {
  CorrelationRow,
  ErrorCell,
  GlyphMetric,
  GlyphPayload,
  Lag,
  RegionInfo,
  StationInfo,
  StaticPayloads,
  ZScoreTable,
} from "./types.js";

export class ApiClient {
  private controllers = new Map<string, AbortController>();

  constructor(private base: string = "") {}

  private async get<T>(path: string, channel?: string): Promise<T> {
    let signal: AbortSignal | undefined;
    if (channel) {
      this.controllers.get(channel)?.abort();
      const controller = new AbortController();
      this.controllers.set(channel, controller);
      signal = controller.signal;
    }
    const resp = await fetch(this.base + path, { signal });
    if (!resp.ok) {
      const body = (await resp.json().catch(() => ({}))) as { error?: string };
      throw new Error(body.error ?? `${resp.status} for ${path}`);
    }
    return (await resp.json()) as T;
  }

  async statics(): Promise<StaticPayloads> {
    const [stations, regions, correlations] = await Promise.all([
      this.get<{ stations: StationInfo[] }>("/api/stations"),
      this.get<{ regions: RegionInfo[]; zscore_table: ZScoreTable }>("/api/regions"),
      this.get<{ correlations: CorrelationRow[] }>("/api/correlations"),
    ]);
    return {
      stations: stations.stations,
      regions: regions.regions,
      zscores: regions.zscore_table,
      correlations: correlations.correlations,
    };
  }

  async errors(lag: Lag): Promise<ErrorCell[]> {
    const body = await this.get<{ cells: ErrorCell[] }>(
      `/api/errors?lag=${lag}&month=all`,
      "errors",
    );
    return body.cells;
  }

  async glyphs(metric: GlyphMetric): Promise<GlyphPayload> {
    return this.get<GlyphPayload>(`/api/glyphs?metric=${metric}`, "glyphs");
  }
}
