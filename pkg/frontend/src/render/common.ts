export function escapeHtml(value: string): string {
  return value
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

/** Retriable error panel; prior panel contents stay in place elsewhere. */
export function errorPanel(panel: string, message: string, retriable = true): string {
  const retry = retriable
    ? `<button class="retry" data-panel="${escapeHtml(panel)}">retry</button>`
    : "";
  return (
    `<div class="error-panel" data-panel="${escapeHtml(panel)}">` +
    `<span class="error-message">${escapeHtml(message)}</span>${retry}</div>`
  );
}

/** Error panel for payloads that do not match the documented schema. */
export function schemaMismatchPanel(panel: string, payload: unknown): string {
  let excerpt: string;
  try {
    excerpt = JSON.stringify(payload) ?? String(payload);
  } catch {
    excerpt = String(payload);
  }
  if (excerpt.length > 160) excerpt = excerpt.slice(0, 160) + "…";
  return errorPanel(panel, `unexpected response shape: ${excerpt}`, false);
}

export function loadingPanel(label: string): string {
  return `<div class="loading">loading ${escapeHtml(label)}…</div>`;
}

export function emptyState(message: string): string {
  return `<div class="empty-state">${escapeHtml(message)}</div>`;
}

export function formatNumber(value: number | null, digits = 3): string {
  return value === null ? "–" : value.toFixed(digits);
}
