/** Dual-metric sentiment chart: both scorers share the time axis but
 * keep their own value scales (the compound score lives in (-1, 1),
 * word sums are unbounded).
 */

import type { TimePoint } from "../types.js";
import { emptyState, escapeHtml } from "./common.js";

const WIDTH = 760;
const HEIGHT = 240;
const PAD_X = 48;
const PAD_Y = 22;

const COMPOUND_COLOR = "#7b3294";
const WORD_SUM_COLOR = "#008837";

function scaleLinear(min: number, max: number, outMin: number, outMax: number) {
  const span = max - min || 1;
  return (v: number) => outMin + ((v - min) / span) * (outMax - outMin);
}

function polyline(points: TimePoint[], value: (p: TimePoint) => number,
                  x: (i: number) => number, y: (v: number) => number,
                  color: string, metric: string): string {
  const path = points
    .map((p, i) => `${x(i).toFixed(1)},${y(value(p)).toFixed(1)}`)
    .join(" ");
  const markers = points.map((p, i) =>
    `<circle cx="${x(i).toFixed(1)}" cy="${y(value(p)).toFixed(1)}" r="2.5" ` +
    `fill="${color}" data-metric="${metric}" data-day="${p.day}">` +
    `<title>${escapeHtml(`${p.day} ${metric}: ${value(p).toFixed(3)} (n=${p.n_docs})`)}</title>` +
    `</circle>`).join("");
  return `<polyline points="${path}" fill="none" stroke="${color}" stroke-width="1.5"/>` + markers;
}

export function renderTimeseries(points: TimePoint[]): string {
  if (points.length === 0) {
    return emptyState("no documents in the selected window");
  }
  const compounds = points.map((p) => p.avg_compound);
  const wordSums = points.map((p) => p.avg_word_sum);
  const x = scaleLinear(0, Math.max(points.length - 1, 1), PAD_X, WIDTH - PAD_X);
  const yCompound = scaleLinear(Math.min(...compounds, 0), Math.max(...compounds, 0),
                                HEIGHT - PAD_Y, PAD_Y);
  const yWordSum = scaleLinear(Math.min(...wordSums, 0), Math.max(...wordSums, 0),
                               HEIGHT - PAD_Y, PAD_Y);

  const labelEvery = Math.max(1, Math.ceil(points.length / 8));
  const ticks = points
    .map((p, i) => ({ day: p.day, i }))
    .filter(({ i }) => i % labelEvery === 0)
    .map(({ day, i }) =>
      `<text x="${x(i).toFixed(1)}" y="${HEIGHT - 4}" class="tick">${escapeHtml(day)}</text>`);

  const zeroCompound = yCompound(0).toFixed(1);
  return (
    `<div class="timeseries-panel">` +
    `<svg viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" aria-label="sentiment over time">` +
    `<line x1="${PAD_X}" y1="${zeroCompound}" x2="${WIDTH - PAD_X}" y2="${zeroCompound}" class="zero-line"/>` +
    polyline(points, (p) => p.avg_compound, x, yCompound, COMPOUND_COLOR, "compound") +
    polyline(points, (p) => p.avg_word_sum, x, yWordSum, WORD_SUM_COLOR, "word_sum") +
    ticks.join("") +
    `</svg>` +
    `<div class="series-key">` +
    `<span style="color:${COMPOUND_COLOR}">● compound</span> ` +
    `<span style="color:${WORD_SUM_COLOR}">● word sum</span>` +
    `</div></div>`
  );
}
