// Request-URL construction and fetching for one coherent frame. The
// client state maps onto URLs and nothing else, so a copied URL replays
// the exact same requests.

import { FilterSelection, encodeFilter } from "./filter";
import { ViewPayloads } from "./types";

export interface AxisSelection {
  dimension: string;
  positive: string[];
  negative: string[];
}

export interface ViewState {
  filter: FilterSelection;
  axis: AxisSelection | null; // null = server default axis
  drill: string | null; // province code while drilled into CITY level
}

export type FetchJson = (url: string) => Promise<unknown>;

export const VIEW_ENDPOINTS = [
  "sankey",
  "regions",
  "positions",
  "scatter",
  "bands",
  "grid",
  "flowers",
  "treemap",
] as const;

export type ViewName = (typeof VIEW_ENDPOINTS)[number];

function withQuery(path: string, ...parts: string[]): string {
  const query = parts.filter((p) => p.length > 0).join("&");
  return query ? `${path}?${query}` : path;
}

function axisQuery(axis: AxisSelection | null): string {
  if (axis === null) return "";
  const params = new URLSearchParams();
  params.append("dimension", axis.dimension);
  for (const v of [...axis.positive].sort()) params.append("positive", v);
  for (const v of [...axis.negative].sort()) params.append("negative", v);
  return params.toString();
}

/** Endpoint URL for one view under the given state. */
export function viewUrl(view: ViewName, state: ViewState): string {
  const filter = encodeFilter(state.filter);
  switch (view) {
    case "scatter":
      return withQuery("/api/scatter", filter, axisQuery(state.axis));
    case "treemap":
      return withQuery(
        "/api/treemap",
        filter,
        state.drill === null ? "level=PROVINCE" : `level=CITY&parent=${state.drill}`,
      );
    default:
      return withQuery(`/api/${view}`, filter);
  }
}

export function summaryUrl(state: ViewState): string {
  return withQuery("/api/summary", encodeFilter(state.filter));
}

export function allUrls(state: ViewState): string[] {
  return [summaryUrl(state), ...VIEW_ENDPOINTS.map((v) => viewUrl(v, state))];
}

/** Fetch every view with one shared state; the result is a coherent frame. */
export async function fetchFrame(fetchJson: FetchJson, state: ViewState): Promise<ViewPayloads> {
  const [summary, sankey, regions, positions, scatter, bands, grid, flowers, treemap] =
    await Promise.all(allUrls(state).map((url) => fetchJson(url)));
  return {
    summary,
    sankey,
    regions,
    positions,
    scatter,
    bands,
    grid,
    flowers,
    treemap,
  } as ViewPayloads;
}

export async function defaultFetchJson(url: string): Promise<unknown> {
  const response = await fetch(url);
  if (!response.ok) {
    throw new Error(`${url} -> HTTP ${response.status}`);
  }
  return response.json();
}
