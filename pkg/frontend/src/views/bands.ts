// Requirement/salary band view: each translucent block spans a position's
// education-rank and experience-rank ranges horizontally and its annual
// salary range vertically; denser overlap reads as higher opacity. The
// strips underneath show the per-level position fractions.

import * as d3 from "d3";
import { BandDistribution, EDUCATION_ORDER, EXPERIENCE_ORDER } from "../types";

const WIDTH = 380;
const HEIGHT = 320;
const PLOT_H = 240;
const PANEL_W = (WIDTH - 60) / 2;

export function renderBands(el: HTMLElement, payload: BandDistribution): void {
  const root = d3.select(el);
  root.selectAll("*").remove();
  const svg = root
    .append("svg")
    .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
    .attr("class", "bands");

  const blocks = payload.blocks.filter((b) => b.salary_min !== null);
  const salaryMax = Math.max(1, ...blocks.map((b) => b.salary_max ?? 0));
  const y = d3.scaleLinear().domain([0, salaryMax]).range([PLOT_H, 16]);
  const rankW = PANEL_W / 8;

  const panels: ["education" | "experience", number][] = [
    ["education", 40],
    ["experience", 50 + PANEL_W],
  ];
  for (const [dimension, x0] of panels) {
    svg
      .append("text")
      .attr("x", x0)
      .attr("y", 12)
      .attr("class", "band-caption")
      .text(dimension);
    for (const block of blocks) {
      const lo = dimension === "education" ? block.education_rank_min : block.experience_rank_min;
      const hi = dimension === "education" ? block.education_rank_max : block.experience_rank_max;
      svg
        .append("rect")
        .attr("x", x0 + lo * rankW)
        .attr("width", Math.max((hi - lo + 1) * rankW - 1, 2))
        .attr("y", y(block.salary_max ?? 0))
        .attr("height", Math.max(y(block.salary_min ?? 0) - y(block.salary_max ?? 0), 1.5))
        .attr("class", "band-block")
        .attr("data-position", block.position)
        .append("title")
        .text(
          `${block.position}: ${block.salary_min}-${block.salary_max} CNY/yr` +
            ` (${block.record_count} records)`,
        );
    }
  }

  // per-level strips: length encodes the fraction of positions listing
  // that level
  const stripY = PLOT_H + 18;
  const strips: [Record<string, number>, readonly string[], number, string][] = [
    [payload.education_bands, EDUCATION_ORDER, 40, "edu"],
    [payload.experience_bands, EXPERIENCE_ORDER, 50 + PANEL_W, "exp"],
  ];
  for (const [bands, order, x0, prefix] of strips) {
    order.forEach((code, i) => {
      const fraction = bands[code] ?? 0;
      svg
        .append("rect")
        .attr("x", x0 + i * rankW)
        .attr("y", stripY + (1 - fraction) * 28)
        .attr("width", rankW - 1)
        .attr("height", Math.max(fraction * 28, fraction > 0 ? 1 : 0))
        .attr("class", `band-strip ${prefix}-${code}`)
        .append("title")
        .text(`${code}: ${(fraction * 100).toFixed(1)}% of positions`);
      svg
        .append("text")
        .attr("x", x0 + i * rankW + rankW / 2)
        .attr("y", HEIGHT - 4)
        .attr("text-anchor", "middle")
        .attr("class", "strip-label")
        .text(code);
    });
  }
}
