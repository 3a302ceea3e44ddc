/** Dashboard loading: issue exactly the API calls the current view
 * state implies, latest request wins per panel, and failures leave the
 * panel's previous data in place next to a retriable error.
 */

import { ApiClient, ApiError } from "./api.js";
import { dateRangeError, PanelRequests, ViewState } from "./state.js";

export type PanelName = "map" | "timeseries" | "terms" | "votes" | "legislators";

async function loadPanel<T>(
  state: ViewState,
  panel: "map" | "timeseries" | "terms" | "legislators" | "votes",
  requests: PanelRequests,
  fetcher: (signal: AbortSignal) => Promise<T>,
  assign: (value: T) => void,
  onChange: (state: ViewState) => void,
): Promise<void> {
  const slot = state[panel];
  slot.loading = true;
  slot.error = undefined;
  onChange(state);
  const signal = requests.begin(panel);
  try {
    const data = await fetcher(signal);
    if (!requests.isCurrent(panel, signal)) return; // superseded
    assign(data);
    slot.loading = false;
  } catch (err) {
    if ((err as Error).name === "AbortError") return; // superseded
    if (!requests.isCurrent(panel, signal)) return;
    slot.loading = false;
    if (err instanceof ApiError && err.status === 404 && panel === "votes") {
      state.votesNotFound = state.selectedLegislator;
      state.votes.data = undefined;
    } else if (err instanceof ApiError && err.status === 422) {
      slot.error = { message: `rejected: ${err.detail}`, retriable: false };
    } else {
      slot.error = { message: (err as Error).message, retriable: true };
    }
  }
  onChange(state);
}

/** Load every panel the state implies. Invalid date ranges short-circuit
 * into an inline validation error without issuing any request. */
export function loadDashboard(
  client: ApiClient,
  state: ViewState,
  requests: PanelRequests,
  onChange: (state: ViewState) => void,
  panels: PanelName[] = ["map", "timeseries", "terms", "legislators", "votes"],
): Promise<void> {
  const rangeError = dateRangeError(state.dateRange);
  if (rangeError) {
    for (const panel of ["map", "timeseries"] as const) {
      state[panel].error = { message: rangeError, retriable: false };
      state[panel].loading = false;
    }
    onChange(state);
    return Promise.resolve();
  }

  const { from, to } = state.dateRange;
  const jobs: Promise<void>[] = [];

  if (panels.includes("map")) {
    jobs.push(loadPanel(
      state, "map", requests,
      (signal) => client.map({ metric: state.selectedMetric, from, to }, signal),
      (data) => { state.map.data = data; },
      onChange));
  }
  if (panels.includes("timeseries")) {
    jobs.push(loadPanel(
      state, "timeseries", requests,
      (signal) => client.timeseries(
        { from, to, outlet: state.selectedOutlet }, signal),
      (data) => { state.timeseries.data = data; },
      onChange));
  }
  if (panels.includes("terms")) {
    jobs.push(loadPanel(
      state, "terms", requests,
      (signal) => client.terms({ limit: 100 }, signal),
      (data) => { state.terms.data = data; },
      onChange));
  }
  if (panels.includes("legislators")) {
    jobs.push(loadPanel(
      state, "legislators", requests,
      (signal) => client.legislators(signal),
      (data) => { state.legislators.data = data; },
      onChange));
  }
  if (panels.includes("votes") && state.selectedLegislator) {
    state.votesNotFound = undefined;
    jobs.push(loadPanel(
      state, "votes", requests,
      (signal) => client.legislatorVotes(state.selectedLegislator as string, signal),
      (data) => { state.votes.data = data; },
      onChange));
  }
  return Promise.all(jobs).then(() => undefined);
}
