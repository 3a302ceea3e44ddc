/** Hot-spot map: the GeoJSON cells rendered directly as SVG polygons
 * (no client-side re-binning), colored by significance class, with a
 * legend over all seven classes. Hovering a cell shows its value,
 * document count and z-score via the SVG title element.
 */

import { classColor, CLASS_COLORS, CLASS_LABELS, LEGEND_ORDER } from "../colors.js";
import type { CellFeature, OverlayCollection } from "../types.js";
import { isFeatureCollection } from "../types.js";
import { escapeHtml, formatNumber, schemaMismatchPanel } from "./common.js";

const WIDTH = 760;
const HEIGHT = 420;
const PAD = 8;

interface Extent {
  minLon: number;
  maxLon: number;
  minLat: number;
  maxLat: number;
}

function collectionExtent(features: CellFeature[]): Extent {
  const extent: Extent = { minLon: Infinity, maxLon: -Infinity, minLat: Infinity, maxLat: -Infinity };
  for (const feature of features) {
    for (const ring of feature.geometry.coordinates) {
      for (const [lon, lat] of ring) {
        extent.minLon = Math.min(extent.minLon, lon);
        extent.maxLon = Math.max(extent.maxLon, lon);
        extent.minLat = Math.min(extent.minLat, lat);
        extent.maxLat = Math.max(extent.maxLat, lat);
      }
    }
  }
  return extent;
}

function project(extent: Extent): (lon: number, lat: number) => [number, number] {
  const lonSpan = Math.max(extent.maxLon - extent.minLon, 1e-9);
  const latSpan = Math.max(extent.maxLat - extent.minLat, 1e-9);
  const scale = Math.min((WIDTH - 2 * PAD) / lonSpan, (HEIGHT - 2 * PAD) / latSpan);
  return (lon, lat) => [
    PAD + (lon - extent.minLon) * scale,
    HEIGHT - PAD - (lat - extent.minLat) * scale, // north up
  ];
}

function cellTooltip(feature: CellFeature): string {
  const p = feature.properties;
  return (
    `cell (${p.q}, ${p.r}): value ${formatNumber(p.value)}, ` +
    `count ${p.count}, z ${formatNumber(p.z, 2)}`
  );
}

export function renderLegend(features: CellFeature[]): string {
  const counts = new Map<string, number>();
  for (const feature of features) {
    const p = feature.properties;
    if (p.count === 0) continue; // unfilled cells stay out of the legend counts
    counts.set(p.cls, (counts.get(p.cls) ?? 0) + 1);
  }
  const items = LEGEND_ORDER.map((cls) => {
    const n = counts.get(cls) ?? 0;
    return (
      `<li class="legend-item" data-cls="${cls}">` +
      `<span class="swatch" style="background:${CLASS_COLORS[cls]}"></span>` +
      `${CLASS_LABELS[cls]} (${n})</li>`
    );
  });
  return `<ul class="legend">${items.join("")}</ul>`;
}

export function renderHotspotMap(payload: unknown, overlay?: OverlayCollection): string {
  if (!isFeatureCollection(payload)) {
    return schemaMismatchPanel("map", payload);
  }
  const features = payload.features;
  if (features.length === 0) {
    return `<div class="map-panel">${renderLegend(features)}` +
      `<div class="empty-state">no cells to draw</div></div>`;
  }
  const extent = collectionExtent(features);
  const toXY = project(extent);

  const polygons = features.map((feature) => {
    const fill = classColor(feature.properties.cls);
    const ring = feature.geometry.coordinates[0] ?? [];
    const points = ring
      .map(([lon, lat]) => toXY(lon, lat).map((v) => v.toFixed(1)).join(","))
      .join(" ");
    const style = fill === null
      ? 'fill="none" stroke="#ddd" stroke-width="0.4"'
      : `fill="${fill}" stroke="#999" stroke-width="0.4"`;
    return (
      `<polygon points="${points}" ${style} data-q="${feature.properties.q}" ` +
      `data-r="${feature.properties.r}" data-cls="${feature.properties.cls}">` +
      `<title>${escapeHtml(cellTooltip(feature))}</title></polygon>`
    );
  });

  const overlayMarks = (overlay?.features ?? []).map((feature) => {
    const [lon, lat] = feature.geometry.coordinates;
    const [x, y] = toXY(lon, lat);
    return (
      `<circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="3" class="overlay-mark">` +
      `<title>${escapeHtml(feature.properties.label)}</title></circle>`
    );
  });

  return (
    `<div class="map-panel">${renderLegend(features)}` +
    `<svg viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" aria-label="hot spot map">` +
    polygons.join("") + overlayMarks.join("") +
    `</svg></div>`
  );
}
