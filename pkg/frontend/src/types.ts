/** Response shapes of the documented read-only API. */

export type Metric = "compound" | "word_sum";

export type HotspotClass =
  | "cold99" | "cold95" | "cold90" | "ns" | "hot90" | "hot95" | "hot99" | "empty";

export const HOTSPOT_CLASSES: readonly HotspotClass[] = [
  "cold99", "cold95", "cold90", "ns", "hot90", "hot95", "hot99", "empty",
];

export interface Meta {
  built_at: string;
  n_ingested?: number;
  n_docs: number;
  by_kind: Record<string, number>;
  by_outlet: Record<string, number>;
  date_from: string | null;
  date_to: string | null;
  skipped_points?: number;
}

export interface TimePoint {
  day: string; // YYYY-MM-DD
  avg_word_sum: number;
  avg_compound: number;
  n_docs: number;
}

export interface CellProperties {
  q: number;
  r: number;
  value: number | null;
  count: number;
  z: number | null;
  cls: HotspotClass;
}

export interface CellFeature {
  type: "Feature";
  geometry: { type: "Polygon"; coordinates: number[][][] };
  properties: CellProperties;
}

export interface FeatureCollection {
  type: "FeatureCollection";
  features: CellFeature[];
}

export interface TermEntry {
  term: string;
  score: number;
  day: string | null;
  origin: "tfidf" | "bigram" | "entity";
}

export interface Legislator {
  id: string;
  name: string;
  chamber: "house" | "senate";
  n_votes: number;
}

export interface VoteRow {
  bill_id: string;
  title: string;
  session: string;
  vote: "yea" | "nay" | "other";
}

/** GeoJSON point overlay loaded from a local file (no live client). */
export interface OverlayFeature {
  type: "Feature";
  geometry: { type: "Point"; coordinates: [number, number] };
  properties: { label: string; value?: number };
}

export interface OverlayCollection {
  type: "FeatureCollection";
  features: OverlayFeature[];
}

export function isFeatureCollection(payload: unknown): payload is FeatureCollection {
  if (typeof payload !== "object" || payload === null) return false;
  const fc = payload as Record<string, unknown>;
  if (fc.type !== "FeatureCollection" || !Array.isArray(fc.features)) return false;
  return fc.features.every((f: unknown) => {
    if (typeof f !== "object" || f === null) return false;
    const feature = f as Record<string, unknown>;
    const props = feature.properties as Record<string, unknown> | undefined;
    return (
      feature.type === "Feature" &&
      typeof props === "object" && props !== null &&
      typeof props.q === "number" &&
      typeof props.r === "number" &&
      typeof props.count === "number" &&
      (HOTSPOT_CLASSES as readonly string[]).includes(props.cls as string)
    );
  });
}
