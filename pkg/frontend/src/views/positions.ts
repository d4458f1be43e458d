// Job comparison list: one row per position with record count, stacked
// requirement proportions and per-province salary tier chips. Clicking a
// row toggles the position filter.

import * as d3 from "d3";
import { EDUCATION_ORDER, EXPERIENCE_ORDER, PositionRowSet } from "../types";

export interface PositionHandlers {
  onPosition(id: string): void;
}

const MAX_ROWS = 40;

const TIER_CLASS: Record<string, string> = {
  HIGH: "tier-high",
  MID: "tier-mid",
  LOW: "tier-low",
};

function proportionBar(
  parent: d3.Selection<HTMLDivElement, unknown, null, undefined>,
  proportions: Record<string, number>,
  order: readonly string[],
  prefix: string,
): void {
  const bar = parent.append("div").attr("class", "prop-bar");
  for (const code of order) {
    const fraction = proportions[code];
    if (!fraction) continue;
    bar
      .append("span")
      .attr("class", `prop-seg ${prefix}-${code}`)
      .attr("title", `${code}: ${(fraction * 100).toFixed(1)}%`)
      .style("width", `${fraction * 100}%`);
  }
}

export function renderPositions(
  el: HTMLElement,
  payload: PositionRowSet,
  handlers: PositionHandlers,
): void {
  const root = d3.select(el);
  root.selectAll("*").remove();
  const list = root.append("div").attr("class", "position-list");

  for (const row of payload.positions.slice(0, MAX_ROWS)) {
    const item = list
      .append("div")
      .attr("class", "position-row")
      .attr("data-position", row.position)
      .attr("data-count", row.record_count)
      .on("click", () => handlers.onPosition(row.position));
    const head = item.append("div").attr("class", "position-head");
    head.append("span").attr("class", "position-id").text(row.position);
    head.append("span").attr("class", "position-count").text(String(row.record_count));
    proportionBar(item as never, row.education_proportions, EDUCATION_ORDER, "edu");
    proportionBar(item as never, row.experience_proportions, EXPERIENCE_ORDER, "exp");
    const chips = item.append("div").attr("class", "region-chips");
    for (const [province, rs] of Object.entries(row.region_salary)) {
      chips
        .append("span")
        .attr("class", `region-chip ${TIER_CLASS[rs.tier]}`)
        .attr("title", `${province}: ${Math.round(rs.avg_salary)} CNY/yr`)
        .text(province);
    }
  }
  if (payload.positions.length > MAX_ROWS) {
    list
      .append("div")
      .attr("class", "position-more")
      .text(`… ${payload.positions.length - MAX_ROWS} more positions`);
  }
}
