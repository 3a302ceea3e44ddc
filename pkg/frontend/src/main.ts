/** Browser entry point: wires the controls to the loader and paints the
 * panels whenever the state changes. All data access goes through the
 * typed API client; the page is served by (or pointed at) the snapshot
 * service.
 */

import { ApiClient } from "./api.js";
import { renderLegislatorPicker, renderMapPanel, renderTermsPanel,
         renderTimeseriesPanel, renderVotesPanel } from "./dashboard.js";
import { dateRangeError, initialState, PanelRequests } from "./state.js";
import { loadDashboard, PanelName } from "./loader.js";
import type { Metric, OverlayCollection } from "./types.js";
import type { VoteSortKey } from "./render/votes.js";

const client = new ApiClient("");
const state = initialState();
const requests = new PanelRequests();

let voteSort: VoteSortKey | undefined;
let voteSortDescending = false;
let overlay: OverlayCollection | undefined;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function paint(): void {
  el("map").innerHTML = renderMapPanel(state, overlay);
  el("timeseries").innerHTML = renderTimeseriesPanel(state);
  el("terms").innerHTML = renderTermsPanel(state);
  el("votes").innerHTML = renderVotesPanel(state, voteSort, voteSortDescending);
  el<HTMLSelectElement>("legislator").innerHTML = renderLegislatorPicker(state);
  el("range-error").textContent = dateRangeError(state.dateRange) ?? "";
}

function reload(panels?: PanelName[]): void {
  void loadDashboard(client, state, requests, paint, panels);
}

function wireControls(): void {
  const fromInput = el<HTMLInputElement>("from");
  const toInput = el<HTMLInputElement>("to");
  const metricSelect = el<HTMLSelectElement>("metric");
  const outletInput = el<HTMLInputElement>("outlet");
  const legislatorSelect = el<HTMLSelectElement>("legislator");

  const onRangeChange = () => {
    state.dateRange = { from: fromInput.value || undefined, to: toInput.value || undefined };
    if (dateRangeError(state.dateRange)) {
      paint(); // inline validation, no request
      return;
    }
    reload(["map", "timeseries"]);
  };
  fromInput.addEventListener("change", onRangeChange);
  toInput.addEventListener("change", onRangeChange);

  metricSelect.addEventListener("change", () => {
    state.selectedMetric = metricSelect.value as Metric;
    reload(["map"]);
  });

  outletInput.addEventListener("change", () => {
    state.selectedOutlet = outletInput.value || undefined;
    reload(["timeseries"]);
  });

  legislatorSelect.addEventListener("change", () => {
    state.selectedLegislator = legislatorSelect.value || undefined;
    state.votesNotFound = undefined;
    state.votes.data = undefined;
    reload(["votes"]);
  });

  el<HTMLInputElement>("overlay-file").addEventListener("change", (event) => {
    const file = (event.target as HTMLInputElement).files?.[0];
    if (!file) return;
    file.text().then((text) => {
      overlay = JSON.parse(text) as OverlayCollection;
      paint();
    }).catch(() => { /* unreadable overlay file: ignore */ });
  });

  // Retry buttons and vote-table sorting are delegated since panels re-render.
  document.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.matches("button.retry")) {
      reload([target.dataset.panel as PanelName]);
    } else if (target.matches("th.sortable")) {
      const key = target.dataset.sort as VoteSortKey;
      voteSortDescending = voteSort === key ? !voteSortDescending : false;
      voteSort = key;
      paint();
    }
  });
}

wireControls();
paint();
reload();
