// Industry flower glyphs: x = share of records requiring high education,
// y = share requiring high experience; the three petals encode the
// industry's mean education rank (red), experience rank (green) and
// salary (blue), gray when the dimension has no data. Clicking a flower
// toggles its industry.

import * as d3 from "d3";
import { FlowerSet, PETAL_COLORS } from "../types";

export interface FlowerHandlers {
  onIndustry(id: string): void;
}

const WIDTH = 380;
const HEIGHT = 320;
const PAD = 30;
const MAX_PETAL = 11;

function petalPath(size: number): string {
  // teardrop pointing up from the glyph center
  const r = 2.5 + size;
  return `M0,0 C${-r * 0.55},${-r * 0.6} ${-r * 0.35},${-r} 0,${-r}` +
    ` C${r * 0.35},${-r} ${r * 0.55},${-r * 0.6} 0,0 Z`;
}

function petal(
  group: d3.Selection<SVGGElement, unknown, null, undefined>,
  value: number | null,
  angle: number,
  color: string,
): void {
  const missing = value === null;
  const size = missing ? 0.35 * MAX_PETAL : value * MAX_PETAL;
  group
    .append("path")
    .attr("d", petalPath(size))
    .attr("transform", `rotate(${angle})`)
    .attr("fill", missing ? PETAL_COLORS.missing : color)
    .attr("fill-opacity", 0.85);
}

export function renderFlowers(el: HTMLElement, payload: FlowerSet, handlers: FlowerHandlers): void {
  const root = d3.select(el);
  root.selectAll("*").remove();
  const svg = root
    .append("svg")
    .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
    .attr("class", "flowers");

  const x = d3.scaleLinear().domain([0, 1]).range([PAD, WIDTH - PAD]);
  const y = d3.scaleLinear().domain([0, 1]).range([HEIGHT - PAD, PAD]);

  svg
    .append("text")
    .attr("x", WIDTH - 6)
    .attr("y", HEIGHT - 8)
    .attr("text-anchor", "end")
    .attr("class", "axis-caption")
    .text("high education share →");
  svg
    .append("text")
    .attr("x", 10)
    .attr("y", 12)
    .attr("class", "axis-caption")
    .text("high experience share ↑");

  for (const flower of payload.industries) {
    const group = svg
      .append("g")
      .attr("class", "flower")
      .attr("data-industry", flower.industry)
      .attr("data-count", flower.record_count)
      .attr("transform", `translate(${x(flower.x)},${y(flower.y)})`)
      .on("click", () => handlers.onIndustry(flower.industry));
    petal(group, flower.education_petal, 0, PETAL_COLORS.education);
    petal(group, flower.experience_petal, 120, PETAL_COLORS.experience);
    petal(group, flower.salary_petal, 240, PETAL_COLORS.salary);
    group.append("circle").attr("r", 1.6).attr("class", "flower-core");
    group.append("title").text(
      `${flower.industry}: ${flower.record_count} records` +
        ` (x=${flower.x.toFixed(2)}, y=${flower.y.toFixed(2)})`,
    );
  }
}
