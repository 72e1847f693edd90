// @vitest-environment jsdom
/** Scripted UI test: boot the app against a mocked API, drive the controls
 * and the scatter brush through real DOM events, and check the linked
 * views — the secondary acceptance path. */

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { start } from "../src/main.js";
import { scatterLayout, SCATTER_SIZE } from "../src/render/scatter.js";
import { errorsFor, fixture, truth } from "./helpers.js";

function jsonResponse(payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status: 200,
    headers: { "Content-Type": "application/json" },
  });
}

function mockApi(): void {
  vi.stubGlobal(
    "fetch",
    vi.fn(async (input: RequestInfo | URL) => {
      const url = String(input);
      if (url.includes("/api/stations")) return jsonResponse(fixture("stations.json"));
      if (url.includes("/api/regions")) return jsonResponse(fixture("regions.json"));
      if (url.includes("/api/correlations")) return jsonResponse(fixture("correlations.json"));
      if (url.includes("/api/errors?lag=all")) return jsonResponse(fixture("errors_all.json"));
      if (url.includes("/api/errors?lag=1")) return jsonResponse(fixture("errors_1.json"));
      if (url.includes("/api/glyphs?metric=min_temp"))
        return jsonResponse(fixture("glyphs_min_temp.json"));
      if (url.includes("/api/glyphs?metric=precip"))
        return jsonResponse(fixture("glyphs_precip.json"));
      return new Response(JSON.stringify({ error: `unmocked ${url}` }), { status: 404 });
    }),
  );
}

async function flush(): Promise<void> {
  for (let i = 0; i < 4; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

function select(root: HTMLElement, id: string, value: string): void {
  const el = root.querySelector<HTMLSelectElement>(`#${id}`)!;
  el.value = value;
  el.dispatchEvent(new Event("change", { bubbles: true }));
}

function mouse(root: HTMLElement, type: string, x: number, y: number): void {
  const svg = root.querySelector("#scatter")!;
  svg.dispatchEvent(
    new MouseEvent(type, { clientX: x, clientY: y, bubbles: true }),
  );
}

describe("explorer UI", () => {
  let mount: HTMLElement;

  beforeEach(async () => {
    mockApi();
    // jsdom has no layout: report the scatter's viewBox size as its CSS box
    vi.spyOn(Element.prototype, "getBoundingClientRect").mockReturnValue({
      x: 0,
      y: 0,
      left: 0,
      top: 0,
      right: SCATTER_SIZE.width,
      bottom: SCATTER_SIZE.height,
      width: SCATTER_SIZE.width,
      height: SCATTER_SIZE.height,
      toJSON: () => ({}),
    } as DOMRect);
    mount = document.createElement("div");
    document.body.appendChild(mount);
    await start(mount);
    await flush();
  });

  afterEach(() => {
    mount.remove();
    vi.unstubAllGlobals();
    vi.restoreAllMocks();
  });

  it("boots with controls, scatter, parcoords and map populated", () => {
    expect(mount.querySelectorAll("#scatter .dot").length).toBeGreaterThan(0);
    expect(mount.querySelectorAll("#parcoords .pc-line").length).toBe(
      fixture<{ stations: unknown[] }>("stations.json").stations.length,
    );
    expect(mount.querySelectorAll("#map .marker").length).toBeGreaterThan(0);
  });

  it("brushing the extreme min-temp point surfaces the worst forecaster", async () => {
    select(mount, "x-select", "mean_abs_err_min_temp");
    select(mount, "y-select", "mean_abs_err_max_temp");
    await flush();
    const layout = scatterLayout(errorsFor("all"), ["mean_abs_err_min_temp", "mean_abs_err_max_temp"], SCATTER_SIZE);
    const extreme = layout.points.reduce((a, b) => (b.vx > a.vx ? b : a));
    expect(extreme.station).toBe(truth.worst_station);

    mouse(mount, "mousedown", extreme.x - 5, extreme.y - 5);
    mouse(mount, "mouseup", extreme.x + 5, extreme.y + 5);
    await flush();

    const table = mount.querySelector("#detail")!;
    expect(table.textContent).toContain(`${truth.worst_station} Station`);
    const brushedDots = mount.querySelectorAll("#scatter .dot.brushed");
    const brushedMarkers = mount.querySelectorAll("#map .marker.brushed");
    const rows = mount.querySelectorAll("#detail tbody tr[data-station]");
    expect(brushedMarkers.length).toBe(brushedDots.length);
    expect(rows.length).toBe(brushedDots.length);
  });

  it("switching lag refreshes the scatter and resets the brush", async () => {
    mouse(mount, "mousedown", 10, 10);
    mouse(mount, "mouseup", 450, 350);
    await flush();
    expect(mount.querySelectorAll("#detail tr[data-station]").length).toBeGreaterThan(0);

    select(mount, "lag-select", "1");
    await flush();
    expect(mount.textContent).toContain("forecast errors at lag 1");
    expect(mount.querySelectorAll("#detail tr[data-station]").length).toBe(0);
    expect(mount.querySelectorAll("#scatter .dot").length).toBeGreaterThan(0);
  });

  it("region selection highlights exactly the member lines", async () => {
    select(mount, "region-select", "Southwest");
    await flush();
    const regions = fixture<{ regions: { name: string; size: number }[] }>("regions.json");
    const southwest = regions.regions.find((r) => r.name === "Southwest")!;
    expect(mount.querySelectorAll("#parcoords .pc-line.active").length).toBe(southwest.size);
    // idempotent reselect keeps the document identical
    const before = mount.innerHTML;
    select(mount, "region-select", "Southwest");
    await flush();
    expect(mount.innerHTML).toBe(before);
  });

  it("glyph metric switch loads the other geometry payload", async () => {
    select(mount, "metric-select", "precip");
    await flush();
    expect(mount.textContent).toContain("precip glyphs");
    expect(mount.querySelectorAll("#map .glyph").length).toBeGreaterThan(0);
  });

  it("clear selection empties the table", async () => {
    mouse(mount, "mousedown", 10, 10);
    mouse(mount, "mouseup", 450, 350);
    await flush();
    (mount.querySelector("#clear-brush") as HTMLButtonElement).click();
    await flush();
    expect(mount.querySelectorAll("#detail tr[data-station]").length).toBe(0);
    expect(mount.textContent).toContain("no stations selected");
  });
});
