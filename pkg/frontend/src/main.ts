// Application bootstrap: one Coordinator drives all eight views off a
// shared filter state; every interaction toggles state and refetches
// everything, and the URL always encodes the current state.

import { ViewState, defaultFetchJson } from "./api";
import { Coordinator } from "./state";
import { ViewPayloads } from "./types";
import { renderBands } from "./views/bands";
import { renderFlowers } from "./views/flowers";
import { renderGrid } from "./views/grid";
import { renderPositions } from "./views/positions";
import { renderRegions } from "./views/regions";
import { AXIS_PRESETS, renderScatter } from "./views/scatter";
import { renderSankey } from "./views/sankey";
import { renderTreemap } from "./views/treemap";

function container(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing container #${id}`);
  return el;
}

function activePreset(state: ViewState): number {
  if (state.axis === null) return 0;
  const key = JSON.stringify([state.axis.dimension, state.axis.positive, state.axis.negative]);
  const index = AXIS_PRESETS.findIndex(
    (p) =>
      p.axis !== null &&
      JSON.stringify([p.axis.dimension, [...p.axis.positive].sort(), [...p.axis.negative].sort()]) ===
        key,
  );
  return index >= 0 ? index : 0;
}

export function renderAll(
  payloads: ViewPayloads,
  state: ViewState,
  coordinator: Coordinator,
): void {
  const summary = container("summary");
  summary.textContent =
    `${payloads.summary.record_count} records | ` +
    `${payloads.summary.distinct_positions} positions | ` +
    `${payloads.summary.distinct_industries} industries | ` +
    `${payloads.summary.distinct_provinces} provinces`;
  summary.setAttribute("data-count", String(payloads.summary.record_count));

  renderSankey(container("view-sankey"), payloads.sankey, {
    onFlow: (edu, exp) => coordinator.toggle("pairs", `${edu}:${exp}`),
    onEducation: (code) => coordinator.toggle("education", code),
    onExperience: (code) => coordinator.toggle("experience", code),
  });
  renderRegions(container("view-regions"), payloads.regions, {
    onProvince: (code) => coordinator.toggle("province", code),
  });
  renderPositions(container("view-positions"), payloads.positions, {
    onPosition: (id) => coordinator.toggle("position", id),
  });
  renderScatter(
    container("view-scatter"),
    payloads.scatter,
    { onAxisChange: (axis) => coordinator.setAxis(axis) },
    activePreset(state),
  );
  renderBands(container("view-bands"), payloads.bands);
  renderGrid(container("view-grid"), payloads.grid, {
    onIndustry: (id) => coordinator.toggle("industry", id),
  });
  renderFlowers(container("view-flowers"), payloads.flowers, {
    onIndustry: (id) => coordinator.toggle("industry", id),
  });
  renderTreemap(
    container("view-treemap"),
    payloads.treemap,
    {
      onDrill: (province) => coordinator.drillInto(province),
      onDrillUp: () => coordinator.drillUp(),
      onCity: (city) => coordinator.toggle("city", city),
    },
    state.drill !== null,
  );
}

export function boot(): Coordinator {
  const banner = container("error-banner");
  const coordinator: Coordinator = new Coordinator({
    fetchJson: defaultFetchJson,
    render: (payloads, state) => {
      banner.hidden = true;
      renderAll(payloads, state, coordinator);
    },
    onError: (error) => {
      banner.hidden = false;
      banner.textContent = `request failed: ${String(error)} — previous view retained `;
      const retry = document.createElement("button");
      retry.textContent = "retry";
      retry.addEventListener("click", () => void coordinator.refresh());
      banner.appendChild(retry);
    },
    pushUrl: (query) => {
      const target = query ? `?${query}` : location.pathname;
      history.replaceState(null, "", target);
    },
  });
  coordinator.applyUrl(location.search.replace(/^\?/, ""));
  container("reset").addEventListener("click", () => coordinator.resetFilter());
  void coordinator.refresh();
  return coordinator;
}

if (typeof document !== "undefined" && document.getElementById("view-sankey")) {
  boot();
}
