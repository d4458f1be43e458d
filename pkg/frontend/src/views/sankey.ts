// Education-experience sankey (two columns, ribbon per pair). Clicking a
// flow toggles that education:experience pair; clicking a code rectangle
// toggles the single dimension value.

import * as d3 from "d3";
import { EDUCATION_ORDER, EXPERIENCE_ORDER, FlowMatrix } from "../types";

export interface SankeyHandlers {
  onFlow(education: string, experience: string): void;
  onEducation(code: string): void;
  onExperience(code: string): void;
}

const WIDTH = 360;
const HEIGHT = 300;
const NODE_W = 14;
const PAD = 6;

interface NodeBox {
  code: string;
  y0: number;
  y1: number;
  cursor: number;
}

function layoutColumn(
  order: readonly string[],
  totals: Record<string, number>,
  total: number,
): Map<string, NodeBox> {
  const codes = order.filter((c) => totals[c]);
  const usable = HEIGHT - PAD * Math.max(codes.length - 1, 0);
  const boxes = new Map<string, NodeBox>();
  let y = 0;
  for (const code of codes) {
    const h = total > 0 ? (totals[code] / total) * usable : 0;
    boxes.set(code, { code, y0: y, y1: y + h, cursor: y });
    y += h + PAD;
  }
  return boxes;
}

export function renderSankey(el: HTMLElement, payload: FlowMatrix, handlers: SankeyHandlers): void {
  const total = payload.flows.reduce((s, f) => s + f.count, 0);
  const left = layoutColumn(EDUCATION_ORDER, payload.education_totals, total);
  const right = layoutColumn(EXPERIENCE_ORDER, payload.experience_totals, total);

  const root = d3.select(el);
  root.selectAll("*").remove();
  const svg = root
    .append("svg")
    .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
    .attr("class", "sankey");

  const x0 = 60;
  const x1 = WIDTH - 60 - NODE_W;
  const ribbon = (sy0: number, sy1: number, ty0: number, ty1: number): string => {
    const xm = (x0 + NODE_W + x1) / 2;
    return [
      `M${x0 + NODE_W},${sy0}`,
      `C${xm},${sy0} ${xm},${ty0} ${x1},${ty0}`,
      `L${x1},${ty1}`,
      `C${xm},${ty1} ${xm},${sy1} ${x0 + NODE_W},${sy1}`,
      "Z",
    ].join(" ");
  };

  // flows first so nodes draw on top
  for (const flow of payload.flows) {
    const src = left.get(flow.education);
    const dst = right.get(flow.experience);
    if (!src || !dst || total === 0) continue;
    const sh = ((src.y1 - src.y0) * flow.count) / payload.education_totals[flow.education];
    const th = ((dst.y1 - dst.y0) * flow.count) / payload.experience_totals[flow.experience];
    const path = ribbon(src.cursor, src.cursor + sh, dst.cursor, dst.cursor + th);
    src.cursor += sh;
    dst.cursor += th;
    svg
      .append("path")
      .attr("d", path)
      .attr("class", "sankey-flow")
      .attr("data-flow", `${flow.education}:${flow.experience}`)
      .attr("data-count", flow.count)
      .on("click", () => handlers.onFlow(flow.education, flow.experience));
  }

  for (const [code, box] of left) {
    svg
      .append("rect")
      .attr("x", x0)
      .attr("y", box.y0)
      .attr("width", NODE_W)
      .attr("height", Math.max(box.y1 - box.y0, 1))
      .attr("class", "sankey-node")
      .attr("data-education", code)
      .on("click", () => handlers.onEducation(code));
    svg
      .append("text")
      .attr("x", x0 - 6)
      .attr("y", (box.y0 + box.y1) / 2)
      .attr("class", "sankey-label")
      .attr("text-anchor", "end")
      .attr("dominant-baseline", "middle")
      .text(`${code} ${payload.education_totals[code]}`);
  }
  for (const [code, box] of right) {
    svg
      .append("rect")
      .attr("x", x1)
      .attr("y", box.y0)
      .attr("width", NODE_W)
      .attr("height", Math.max(box.y1 - box.y0, 1))
      .attr("class", "sankey-node")
      .attr("data-experience", code)
      .on("click", () => handlers.onExperience(code));
    svg
      .append("text")
      .attr("x", x1 + NODE_W + 6)
      .attr("y", (box.y0 + box.y1) / 2)
      .attr("class", "sankey-label")
      .attr("dominant-baseline", "middle")
      .text(`${code} ${payload.experience_totals[code]}`);
  }
}
