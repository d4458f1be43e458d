// Regional profile treemap. Province level nests city rectangles inside
// province rectangles; clicking a province drills into its municipal
// view (same scheme, one province). Cell area is posting count, fill
// opacity is the relative average salary, and each large-enough cell
// embeds the three-ring donut: outer = top positions, middle = top
// industries, inner disc opacity = salary level.

import * as d3 from "d3";
import { DonutShare, TreemapNode } from "../types";

export interface TreemapHandlers {
  onDrill(province: string): void;
  onDrillUp(): void;
  onCity(city: string): void;
}

const WIDTH = 380;
const HEIGHT = 320;

function donutRing(
  group: d3.Selection<SVGGElement, unknown, null, undefined>,
  shares: DonutShare[],
  other: number,
  r0: number,
  r1: number,
  palette: readonly string[],
): void {
  const slices = [...shares.map((s) => s.fraction), other];
  const arcs = d3.pie().sort(null)(slices);
  const gen = d3.arc<d3.PieArcDatum<number>>().innerRadius(r0).outerRadius(r1);
  arcs.forEach((a, i) => {
    group
      .append("path")
      .attr("d", gen(a as d3.PieArcDatum<number>) as string)
      .attr("fill", i < shares.length ? palette[i % palette.length] : "#d8d8d8")
      .append("title")
      .text(i < shares.length ? `${shares[i].id}: ${(slices[i] * 100).toFixed(1)}%` : "other");
  });
}

const POSITION_PALETTE = ["#4c78a8", "#72a3cf", "#9ecae9", "#c6dbef", "#dbe9f6"] as const;
const INDUSTRY_PALETTE = ["#b27941", "#cc9a61", "#ddb98a", "#ecd5b0", "#f5e8d4"] as const;

export function renderTreemap(
  el: HTMLElement,
  payload: TreemapNode,
  handlers: TreemapHandlers,
  drilled: boolean,
): void {
  const root = d3.select(el);
  root.selectAll("*").remove();

  const head = root.append("div").attr("class", "treemap-head");
  head
    .append("span")
    .attr("class", "treemap-title")
    .text(drilled ? `province ${payload.region}` : "all provinces");
  if (drilled) {
    head
      .append("button")
      .attr("class", "treemap-up")
      .text("↑ provinces")
      .on("click", () => handlers.onDrillUp());
  }

  const svg = root
    .append("svg")
    .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
    .attr("class", "treemap");

  const hierarchy = d3
    .hierarchy<TreemapNode>(payload, (n) => (n.children.length ? n.children : undefined))
    .sum((n) => (n.children.length ? 0 : n.posting_count))
    .sort((a, b) => (b.value ?? 0) - (a.value ?? 0));
  const laid = d3
    .treemap<TreemapNode>()
    .size([WIDTH, HEIGHT])
    .paddingOuter(3)
    .paddingInner(2)
    .paddingTop((d) => (d.depth === 0 ? 3 : 14))(hierarchy);

  for (const cell of laid.descendants().slice(1)) {
    const rect = { x0: cell.x0, y0: cell.y0, x1: cell.x1, y1: cell.y1 };
    const node = cell.data;
    const isLeaf = !cell.children || cell.children.length === 0;
    const group = svg
      .append("g")
      .attr("class", isLeaf ? "treemap-leaf" : "treemap-branch")
      .attr("data-region", node.region)
      .attr("data-count", node.posting_count);
    group
      .append("rect")
      .attr("x", rect.x0)
      .attr("y", rect.y0)
      .attr("width", Math.max(rect.x1 - rect.x0, 1))
      .attr("height", Math.max(rect.y1 - rect.y0, 1))
      .attr("class", "treemap-rect")
      .attr("fill-opacity", 0.1 + 0.85 * node.salary_opacity)
      .on("click", () => {
        if (!drilled) {
          // province-level view: any cell drills into its province
          handlers.onDrill(isLeaf ? cell.parent?.data.region ?? node.region : node.region);
        } else if (isLeaf) {
          handlers.onCity(node.region);
        }
      })
      .append("title")
      .text(`${node.region}: ${node.posting_count} postings`);
    group
      .append("text")
      .attr("x", rect.x0 + 3)
      .attr("y", rect.y0 + 10)
      .attr("class", "treemap-label")
      .text(node.region);

    // the three-ring donut, when the cell is big enough to hold it
    const w = rect.x1 - rect.x0;
    const h = rect.y1 - rect.y0;
    const radius = Math.min(w, h) / 2 - 4;
    if (isLeaf && radius >= 9) {
      const donut = group
        .append("g")
        .attr("class", "treemap-donut")
        .attr("transform", `translate(${(rect.x0 + rect.x1) / 2},${(rect.y0 + rect.y1) / 2})`);
      donutRing(
        donut as never,
        node.top_positions,
        node.other_positions,
        radius * 0.72,
        radius,
        POSITION_PALETTE,
      );
      donutRing(
        donut as never,
        node.top_industries,
        node.other_industries,
        radius * 0.42,
        radius * 0.68,
        INDUSTRY_PALETTE,
      );
      donut
        .append("circle")
        .attr("r", radius * 0.34)
        .attr("class", "donut-core")
        .attr("fill-opacity", 0.15 + 0.85 * node.inner_opacity);
    }
  }
}
