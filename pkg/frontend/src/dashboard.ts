/** Panel composition: pure functions from view state to markup.
 * A panel with an error keeps rendering its last good data under the
 * error banner; loading is an overlay marker, not a blank screen.
 */

import { errorPanel, loadingPanel } from "./render/common.js";
import { renderHotspotMap } from "./render/map.js";
import { renderTimeseries } from "./render/timeseries.js";
import { renderWordCloud } from "./render/wordcloud.js";
import { renderLegislatorOptions, renderVotes, renderVotesNotFound, VoteSortKey } from "./render/votes.js";
import type { OverlayCollection } from "./types.js";
import type { Panel, ViewState } from "./state.js";

function panelShell<T>(name: string, panel: Panel<T>,
                       body: (data: T) => string,
                       emptyHint: string): string {
  const parts: string[] = [];
  if (panel.error) {
    parts.push(errorPanel(name, panel.error.message, panel.error.retriable));
  }
  if (panel.loading) {
    parts.push(loadingPanel(name));
  }
  if (panel.data !== undefined) {
    parts.push(body(panel.data));
  } else if (!panel.loading && !panel.error) {
    parts.push(`<div class="empty-state">${emptyHint}</div>`);
  }
  return parts.join("");
}

export function renderMapPanel(state: ViewState, overlay?: OverlayCollection): string {
  return panelShell("map", state.map,
                    (data) => renderHotspotMap(data, overlay),
                    "map not loaded yet");
}

export function renderTimeseriesPanel(state: ViewState): string {
  return panelShell("timeseries", state.timeseries, renderTimeseries,
                    "time series not loaded yet");
}

export function renderTermsPanel(state: ViewState): string {
  return panelShell("terms", state.terms, renderWordCloud,
                    "terms not loaded yet");
}

export function renderVotesPanel(state: ViewState, sortKey?: VoteSortKey,
                                 descending = false): string {
  if (state.votesNotFound) {
    return renderVotesNotFound(state.votesNotFound);
  }
  if (!state.selectedLegislator) {
    return `<div class="empty-state">pick a legislator to see their record</div>`;
  }
  return panelShell("votes", state.votes,
                    (data) => renderVotes(data, sortKey, descending),
                    "votes not loaded yet");
}

export function renderLegislatorPicker(state: ViewState): string {
  return renderLegislatorOptions(state.legislators.data ?? [],
                                 state.selectedLegislator);
}
