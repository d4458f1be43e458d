// Industry x province grid, both axes ranked by average salary
// descending; cell opacity encodes record count. Clicking a cell toggles
// its industry.

import * as d3 from "d3";
import { RankedGrid } from "../types";

export interface GridHandlers {
  onIndustry(id: string): void;
}

const WIDTH = 380;
const HEIGHT = 320;
const LEFT = 34;
const TOP = 16;

export function renderGrid(el: HTMLElement, payload: RankedGrid, handlers: GridHandlers): void {
  const root = d3.select(el);
  root.selectAll("*").remove();
  const svg = root
    .append("svg")
    .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
    .attr("class", "grid");

  const industries = payload.industry_order;
  const provinces = payload.province_order;
  if (!industries.length || !provinces.length) return;

  const cw = (WIDTH - LEFT - 6) / industries.length;
  const ch = (HEIGHT - TOP - 6) / provinces.length;
  const xOf = new Map(industries.map((id, i) => [id, LEFT + i * cw]));
  const yOf = new Map(provinces.map((p, i) => [p, TOP + i * ch]));

  provinces.forEach((p) => {
    svg
      .append("text")
      .attr("x", LEFT - 4)
      .attr("y", (yOf.get(p) ?? 0) + ch / 2)
      .attr("text-anchor", "end")
      .attr("dominant-baseline", "middle")
      .attr("class", "grid-label")
      .text(p);
  });

  for (const cell of payload.cells) {
    svg
      .append("rect")
      .attr("x", xOf.get(cell.industry) ?? 0)
      .attr("y", yOf.get(cell.province) ?? 0)
      .attr("width", Math.max(cw - 0.6, 0.6))
      .attr("height", Math.max(ch - 0.6, 0.6))
      .attr("class", "grid-cell")
      .attr("fill-opacity", 0.08 + 0.92 * cell.opacity)
      .attr("data-industry", cell.industry)
      .attr("data-province", cell.province)
      .attr("data-count", cell.record_count)
      .on("click", () => handlers.onIndustry(cell.industry))
      .append("title")
      .text(`${cell.industry} x ${cell.province}: ${cell.record_count} records`);
  }
}
