/** Word cloud: terms sized by score rank (not raw score), capped at
 * 100 entries, laid out deterministically - identical input produces
 * identical markup, reruns included.
 */

import type { TermEntry } from "../types.js";
import { emptyState, escapeHtml } from "./common.js";

const MAX_TERMS = 100;
const MIN_SIZE = 11;
const MAX_SIZE = 34;

/** Deterministic tint per term so reloads keep colors stable. */
function termHue(term: string): number {
  let hash = 0;
  for (let i = 0; i < term.length; i++) {
    hash = (hash * 31 + term.charCodeAt(i)) | 0;
  }
  return ((hash % 360) + 360) % 360;
}

export function renderWordCloud(entries: TermEntry[]): string {
  if (entries.length === 0) {
    return emptyState("no terms for this selection");
  }
  const top = [...entries]
    .sort((a, b) => b.score - a.score || a.term.localeCompare(b.term))
    .slice(0, MAX_TERMS);
  const n = top.length;
  const spans = top.map((entry, rank) => {
    // Rank-based sizing: the spread stays readable even when scores
    // span orders of magnitude.
    const size = n === 1
      ? MAX_SIZE
      : MAX_SIZE - ((MAX_SIZE - MIN_SIZE) * rank) / (n - 1);
    const title = `${entry.term}: ${entry.score.toFixed(2)}` +
      (entry.day ? ` on ${entry.day}` : "") + ` (${entry.origin})`;
    return (
      `<span class="cloud-term" style="font-size:${size.toFixed(1)}px;` +
      `color:hsl(${termHue(entry.term)},45%,35%)" ` +
      `data-origin="${entry.origin}" title="${escapeHtml(title)}">` +
      `${escapeHtml(entry.term)}</span>`
    );
  });
  return `<div class="wordcloud">${spans.join(" ")}</div>`;
}
