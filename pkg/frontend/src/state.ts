// The coordinator that keeps all eight views on one FilterState.
//
// Every interaction mutates the state, schedules a debounced refetch of
// every view, and tags the wave with a generation counter; responses from
// a superseded generation are discarded, so the screen never mixes
// frames fetched under different filters. The state round-trips through
// the URL for sharing.

import {
  AxisSelection,
  FetchJson,
  ViewState,
  fetchFrame,
} from "./api";
import {
  FilterDimension,
  decodeFilter,
  emptyFilter,
  encodeFilter,
  isEmpty,
  toggleClass,
  toggleValue,
} from "./filter";
import { ViewPayloads } from "./types";

export const DEBOUNCE_MS = 150;

export interface CoordinatorOptions {
  fetchJson: FetchJson;
  render: (payloads: ViewPayloads, state: ViewState) => void;
  onError?: (error: unknown) => void;
  /** Receives the shareable URL query after each settled refresh. */
  pushUrl?: (query: string) => void;
  /** Debounce override for tests. */
  debounceMs?: number;
}

export class Coordinator {
  private state: ViewState = { filter: emptyFilter(), axis: null, drill: null };
  private generation = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private readonly opts: CoordinatorOptions;

  /** Payloads currently on screen; stays at the previous frame if a
   * refresh fails. */
  current: ViewPayloads | null = null;

  constructor(opts: CoordinatorOptions) {
    this.opts = opts;
  }

  getState(): ViewState {
    return this.state;
  }

  /** Encode the full view state (filter + axis + drill) as a URL query. */
  encodeUrl(): string {
    const params = new URLSearchParams(encodeFilter(this.state.filter));
    if (this.state.drill !== null) {
      params.append("drill", this.state.drill);
    }
    if (this.state.axis !== null) {
      params.append("dimension", this.state.axis.dimension);
      for (const v of [...this.state.axis.positive].sort()) params.append("positive", v);
      for (const v of [...this.state.axis.negative].sort()) params.append("negative", v);
    }
    return params.toString();
  }

  /** Restore a shared URL query; the next refresh replays its requests. */
  applyUrl(query: string): void {
    const params = new URLSearchParams(query);
    this.state = {
      filter: decodeFilter(query),
      drill: params.get("drill"),
      axis: params.has("dimension")
        ? {
            dimension: params.get("dimension") as string,
            positive: params.getAll("positive").sort(),
            negative: params.getAll("negative").sort(),
          }
        : null,
    };
  }

  toggle(dimension: FilterDimension, value: string): void {
    this.state = { ...this.state, filter: toggleValue(this.state.filter, dimension, value) };
    this.scheduleRefresh();
  }

  toggleEmploymentClass(value: string): void {
    this.state = { ...this.state, filter: toggleClass(this.state.filter, value) };
    this.scheduleRefresh();
  }

  setAxis(axis: AxisSelection | null): void {
    // canonical (sorted) sides keep encoded URLs and state comparisons stable
    const canonical =
      axis === null
        ? null
        : {
            dimension: axis.dimension,
            positive: [...axis.positive].sort(),
            negative: [...axis.negative].sort(),
          };
    this.state = { ...this.state, axis: canonical };
    this.scheduleRefresh();
  }

  drillInto(province: string): void {
    this.state = { ...this.state, drill: province };
    this.scheduleRefresh();
  }

  drillUp(): void {
    this.state = { ...this.state, drill: null };
    this.scheduleRefresh();
  }

  resetFilter(): void {
    if (isEmpty(this.state.filter)) return;
    this.state = { ...this.state, filter: emptyFilter() };
    this.scheduleRefresh();
  }

  /** Debounced trigger: rapid successive selections collapse into one
   * request wave. */
  scheduleRefresh(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.refresh();
    }, this.opts.debounceMs ?? DEBOUNCE_MS);
  }

  /** Fetch all views with the current state. Only the newest generation
   * is allowed to render. */
  async refresh(): Promise<void> {
    const generation = ++this.generation;
    const state = this.state;
    try {
      const payloads = await fetchFrame(this.opts.fetchJson, state);
      if (generation !== this.generation) {
        return; // superseded while in flight
      }
      this.current = payloads;
      this.opts.render(payloads, state);
      this.opts.pushUrl?.(this.encodeUrl());
    } catch (error) {
      if (generation === this.generation) {
        this.opts.onError?.(error);
      }
    }
  }
}
