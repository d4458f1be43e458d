// Salary pattern glyphs. The axis dropdown splits one dimension into a
// positive and a negative side; permanent postings plot against monthly
// salary with bonus-month dots on the outer ring, flexible postings plot
// their within-kind percentile with a partial arc, colored by wage kind.

import * as d3 from "d3";
import { AxisSelection } from "../api";
import { GlyphSet } from "../types";

export interface ScatterHandlers {
  onAxisChange(axis: AxisSelection | null): void;
}

const WIDTH = 380;
const HEIGHT = 320;
const PERM_BAND: [number, number] = [150, 18];
const FLEX_BAND: [number, number] = [300, 180];

const WAGE_COLOR: Record<string, string> = {
  WEEKLY: "#8c6bb1",
  DAILY: "#e08214",
  HOURLY: "#35978f",
};

// Dropdown presets: tier splits for the two requirement dimensions, plus
// the server default (null).
export const AXIS_PRESETS: { label: string; axis: AxisSelection | null }[] = [
  { label: "education: high vs low", axis: null },
  {
    label: "experience: high vs low",
    axis: {
      dimension: "experience",
      positive: ["ESu", "Eby", "EzN", "EaZ"],
      negative: ["EdD", "Eqh", "Eas", "EKk"],
    },
  },
  {
    label: "education: degree vs school",
    axis: {
      dimension: "education",
      positive: ["Gh", "Go", "GP", "GI"],
      negative: ["Gy", "Gx", "GZ", "Gz"],
    },
  },
];

function sideX(side: string, jitter: number): number {
  const half = WIDTH / 2 - 30;
  const offset = 22 + jitter * (half - 34);
  return side === "+" ? WIDTH / 2 + offset : WIDTH / 2 - offset;
}

export function renderScatter(
  el: HTMLElement,
  payload: GlyphSet,
  handlers: ScatterHandlers,
  activePreset: number,
): void {
  const root = d3.select(el);
  root.selectAll("*").remove();

  const select = root.append("select").attr("class", "axis-select");
  AXIS_PRESETS.forEach((preset, i) => {
    select
      .append("option")
      .attr("value", String(i))
      .property("selected", i === activePreset)
      .text(preset.label);
  });
  select.on("change", function () {
    const i = Number((this as HTMLSelectElement).value);
    handlers.onAxisChange(AXIS_PRESETS[i].axis);
  });

  const svg = root
    .append("svg")
    .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
    .attr("class", "scatter");

  svg
    .append("line")
    .attr("x1", WIDTH / 2)
    .attr("x2", WIDTH / 2)
    .attr("y1", 10)
    .attr("y2", HEIGHT - 10)
    .attr("class", "axis-line");
  svg
    .append("text")
    .attr("x", WIDTH - 8)
    .attr("y", 12)
    .attr("text-anchor", "end")
    .attr("class", "axis-caption")
    .text(`+ ${payload.axis.positive.join(" ")}`);
  svg
    .append("text")
    .attr("x", 8)
    .attr("y", 12)
    .attr("class", "axis-caption")
    .text(`- ${payload.axis.negative.join(" ")}`);

  const perm = payload.permanent;
  const monthlyMax = Math.max(1, ...perm.monthly_salary);
  const yPerm = d3.scaleLinear().domain([0, monthlyMax]).range(PERM_BAND);
  const radius = d3.scaleSqrt().domain([0, monthlyMax]).range([1.2, 6]);

  const permGroup = svg.append("g").attr("class", "perm-points");
  for (let i = 0; i < perm.side.length; i++) {
    const cx = sideX(perm.side[i], perm.jitter[i]);
    const cy = yPerm(perm.monthly_salary[i]);
    const r = radius(perm.monthly_salary[i]);
    const g = permGroup
      .append("g")
      .attr("class", "glyph-perm")
      .attr("data-bonus", perm.bonus_months[i]);
    g.append("circle").attr("cx", cx).attr("cy", cy).attr("r", r).attr("class", "perm-dot");
    // one outer dot per bonus month
    for (let b = 0; b < perm.bonus_months[i]; b++) {
      const angle = -Math.PI / 2 + b * (Math.PI / 4);
      g.append("circle")
        .attr("cx", cx + Math.cos(angle) * (r + 2.2))
        .attr("cy", cy + Math.sin(angle) * (r + 2.2))
        .attr("r", 1.1)
        .attr("class", "bonus-dot");
    }
  }

  const flex = payload.flexible;
  const yFlex = d3.scaleLinear().domain([0, 1]).range(FLEX_BAND);
  const flexGroup = svg.append("g").attr("class", "flex-points");
  const arc = d3.arc<number>();
  for (let i = 0; i < flex.side.length; i++) {
    const cx = sideX(flex.side[i], flex.jitter[i]);
    const cy = yFlex(flex.percentile_arc[i]);
    const g = flexGroup
      .append("g")
      .attr("class", "glyph-flex")
      .attr("transform", `translate(${cx},${cy})`);
    g.append("circle")
      .attr("r", 2.2)
      .attr("fill", WAGE_COLOR[flex.wage_kind[i]] ?? "#666");
    g.append("path")
      .attr(
        "d",
        arc({
          innerRadius: 3.2,
          outerRadius: 4.2,
          startAngle: 0,
          endAngle: flex.percentile_arc[i] * 2 * Math.PI,
        } as never) as string,
      )
      .attr("fill", WAGE_COLOR[flex.wage_kind[i]] ?? "#666");
  }

  svg
    .append("text")
    .attr("x", 8)
    .attr("y", PERM_BAND[1] - 4)
    .attr("class", "band-caption")
    .text("permanent (monthly salary)");
  svg
    .append("text")
    .attr("x", 8)
    .attr("y", FLEX_BAND[1] - 8)
    .attr("class", "band-caption")
    .text("flexible (within-kind percentile)");
}
