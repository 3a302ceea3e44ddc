/** Explorer view state and the data loaded for it.
 *
 * Rendering is a pure function of this object: the same state always
 * produces the same DOM. A panel keeps its last good data while
 * loading or showing an error, so failures never blank the screen.
 */

import type {
  FeatureCollection, Legislator, Metric, TermEntry, TimePoint, VoteRow,
} from "./types.js";

export interface DateRange {
  from?: string;
  to?: string;
}

export interface PanelError {
  message: string;
  retriable: boolean;
}

export interface Panel<T> {
  data?: T;
  loading: boolean;
  error?: PanelError;
}

export function idlePanel<T>(): Panel<T> {
  return { loading: false };
}

export interface ViewState {
  dateRange: DateRange;
  selectedOutlet?: string;
  selectedMetric: Metric;
  selectedLegislator?: string;
  map: Panel<FeatureCollection>;
  timeseries: Panel<TimePoint[]>;
  terms: Panel<TermEntry[]>;
  votes: Panel<VoteRow[]>;
  votesNotFound?: string; // legislator id the API 404'd on
  legislators: Panel<Legislator[]>;
}

export function initialState(): ViewState {
  return {
    dateRange: {},
    selectedMetric: "compound",
    map: idlePanel(),
    timeseries: idlePanel(),
    terms: idlePanel(),
    votes: idlePanel(),
    legislators: idlePanel(),
  };
}

const DATE_PATTERN = /^\d{4}-\d{2}-\d{2}$/;

/** Inline validation message for the date pickers, or null when fine.
 * An invalid range must block requests, not produce a 422 round trip. */
export function dateRangeError(range: DateRange): string | null {
  for (const value of [range.from, range.to]) {
    if (value && !DATE_PATTERN.test(value)) {
      return `dates must be YYYY-MM-DD (got "${value}")`;
    }
  }
  if (range.from && range.to && range.from > range.to) {
    return `"from" (${range.from}) is after "to" (${range.to})`;
  }
  return null;
}

/** Latest-wins request guard: at most one in-flight request per panel. */
export class PanelRequests {
  private controllers = new Map<string, AbortController>();

  begin(panel: string): AbortSignal {
    this.controllers.get(panel)?.abort();
    const controller = new AbortController();
    this.controllers.set(panel, controller);
    return controller.signal;
  }

  /** True when the given signal still belongs to the latest request. */
  isCurrent(panel: string, signal: AbortSignal): boolean {
    return this.controllers.get(panel)?.signal === signal;
  }
}
