// Bidirectional province bars: record counts upward (opacity = average
// salary level), municipal-division counts downward. Clicking a bar
// toggles the province filter.

import * as d3 from "d3";
import { RegionBarSet } from "../types";

export interface RegionHandlers {
  onProvince(code: string): void;
}

const WIDTH = 360;
const HEIGHT = 300;
const MID = 190;

export function renderRegions(el: HTMLElement, payload: RegionBarSet, handlers: RegionHandlers): void {
  const root = d3.select(el);
  root.selectAll("*").remove();
  const svg = root
    .append("svg")
    .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
    .attr("class", "regions");

  const bars = payload.provinces;
  if (bars.length === 0) return;

  const x = d3
    .scaleBand<string>()
    .domain(bars.map((b) => b.province))
    .range([30, WIDTH - 10])
    .padding(0.25);
  const up = d3
    .scaleLinear()
    .domain([0, d3.max(bars, (b) => b.record_count) ?? 1])
    .range([0, MID - 20]);
  const down = d3
    .scaleLinear()
    .domain([0, d3.max(bars, (b) => b.city_count) ?? 1])
    .range([0, HEIGHT - MID - 30]);

  svg
    .append("line")
    .attr("x1", 25)
    .attr("x2", WIDTH - 5)
    .attr("y1", MID)
    .attr("y2", MID)
    .attr("class", "axis-line");

  for (const bar of bars) {
    const group = svg
      .append("g")
      .attr("class", "region-bar")
      .attr("data-province", bar.province)
      .attr("data-count", bar.record_count)
      .on("click", () => handlers.onProvince(bar.province));
    group
      .append("rect")
      .attr("x", x(bar.province) ?? 0)
      .attr("y", MID - up(bar.record_count))
      .attr("width", x.bandwidth())
      .attr("height", up(bar.record_count))
      .attr("class", "region-count")
      .attr("fill-opacity", 0.15 + 0.85 * bar.salary_opacity);
    group
      .append("rect")
      .attr("x", x(bar.province) ?? 0)
      .attr("y", MID + 14)
      .attr("width", x.bandwidth())
      .attr("height", down(bar.city_count))
      .attr("class", "region-cities");
    group
      .append("text")
      .attr("x", (x(bar.province) ?? 0) + x.bandwidth() / 2)
      .attr("y", MID + 10)
      .attr("text-anchor", "middle")
      .attr("class", "region-label")
      .text(bar.province);
  }
}
