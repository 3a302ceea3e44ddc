/** Politician tracking: a sortable votes table that preserves the API
 * order (session, then bill id) by default, with explicit empty and
 * not-found states.
 */

import type { Legislator, VoteRow } from "../types.js";
import { emptyState, escapeHtml } from "./common.js";

export type VoteSortKey = "session" | "bill_id" | "vote";

export function renderLegislatorOptions(legislators: Legislator[], selected?: string): string {
  const options = legislators.map((l) => {
    const sel = l.id === selected ? " selected" : "";
    const label = `${l.name} (${l.chamber}, ${l.n_votes} votes)`;
    return `<option value="${escapeHtml(l.id)}"${sel}>${escapeHtml(label)}</option>`;
  });
  return `<option value="">pick a legislator</option>` + options.join("");
}

export function sortVotes(records: VoteRow[], key?: VoteSortKey, descending = false): VoteRow[] {
  if (!key) return records; // API order by default
  const sorted = [...records].sort((a, b) => a[key].localeCompare(b[key]));
  return descending ? sorted.reverse() : sorted;
}

export function renderVotes(records: VoteRow[], sortKey?: VoteSortKey,
                            descending = false): string {
  if (records.length === 0) {
    return emptyState("no votes on matching bills for this legislator");
  }
  const rows = sortVotes(records, sortKey, descending).map((r) =>
    `<tr><td>${escapeHtml(r.session)}</td>` +
    `<td>${escapeHtml(r.bill_id)}</td>` +
    `<td>${escapeHtml(r.title)}</td>` +
    `<td class="vote-${r.vote}">${r.vote}</td></tr>`);
  const headers = (["session", "bill_id", "vote"] as VoteSortKey[])
    .map((key) => {
      const mark = key === sortKey ? (descending ? " ▼" : " ▲") : "";
      const label = key === "bill_id" ? "bill" : key;
      return `<th class="sortable" data-sort="${key}">${label}${mark}</th>`;
    });
  return (
    `<table class="votes-table"><thead><tr>` +
    headers[0] + headers[1] + `<th>title</th>` + headers[2] +
    `</tr></thead><tbody>${rows.join("")}</tbody></table>`
  );
}

export function renderVotesNotFound(legislatorId: string): string {
  // 404 from the API: message only, table hidden.
  return `<div class="not-found">legislator ${escapeHtml(legislatorId)} not found</div>`;
}
