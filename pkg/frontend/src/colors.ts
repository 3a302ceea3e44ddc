/** Fixed 7-class diverging scale for the hot/cold-spot classes.
 * Blue side = cold (negative clustering), red side = hot (positive);
 * "ns" sits at the neutral midpoint and "empty" cells stay unfilled.
 */

import type { HotspotClass } from "./types.js";

export const CLASS_COLORS: Record<Exclude<HotspotClass, "empty">, string> = {
  cold99: "#2166ac",
  cold95: "#67a9cf",
  cold90: "#d1e5f0",
  ns: "#f7f7f7",
  hot90: "#fddbc7",
  hot95: "#ef8a62",
  hot99: "#b2182b",
};

export const LEGEND_ORDER: readonly Exclude<HotspotClass, "empty">[] = [
  "cold99", "cold95", "cold90", "ns", "hot90", "hot95", "hot99",
];

export const CLASS_LABELS: Record<Exclude<HotspotClass, "empty">, string> = {
  cold99: "cold spot (99%)",
  cold95: "cold spot (95%)",
  cold90: "cold spot (90%)",
  ns: "not significant",
  hot90: "hot spot (90%)",
  hot95: "hot spot (95%)",
  hot99: "hot spot (99%)",
};

export function classColor(cls: HotspotClass): string | null {
  return cls === "empty" ? null : CLASS_COLORS[cls];
}
