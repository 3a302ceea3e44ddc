/** Typed client for the documented endpoints.
 *
 * Every request the explorer makes goes through this module, so the
 * contract tests can assert nothing undocumented is ever issued.
 */

import type {
  FeatureCollection, Legislator, Meta, Metric, TermEntry, TimePoint, VoteRow,
} from "./types.js";

export interface TimeseriesQuery {
  from?: string;
  to?: string;
  outlet?: string;
  kind?: "article" | "tweet";
}

export interface MapQuery {
  metric?: Metric;
  from?: string;
  to?: string;
}

export interface TermsQuery {
  day?: string;
  limit?: number;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly route: string,
    readonly detail: string,
  ) {
    super(`${route} -> ${status}: ${detail}`);
  }
}

function buildUrl(base: string, path: string, params: Record<string, string | number | undefined>): string {
  const query = Object.entries(params)
    .filter(([, v]) => v !== undefined && v !== "")
    .map(([k, v]) => `${encodeURIComponent(k)}=${encodeURIComponent(String(v))}`)
    .join("&");
  return query ? `${base}${path}?${query}` : `${base}${path}`;
}

async function getJson<T>(url: string, route: string, signal?: AbortSignal): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, { signal });
  } catch (err) {
    if ((err as Error).name === "AbortError") throw err;
    throw new ApiError(0, route, `network failure: ${(err as Error).message}`);
  }
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: unknown };
      if (body && body.detail !== undefined) detail = JSON.stringify(body.detail);
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, route, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(readonly base: string = "") {}

  meta(signal?: AbortSignal): Promise<Meta> {
    return getJson(buildUrl(this.base, "/api/meta", {}), "/api/meta", signal);
  }

  timeseries(query: TimeseriesQuery = {}, signal?: AbortSignal): Promise<TimePoint[]> {
    const url = buildUrl(this.base, "/api/timeseries", {
      from: query.from, to: query.to, outlet: query.outlet, kind: query.kind,
    });
    return getJson(url, "/api/timeseries", signal);
  }

  map(query: MapQuery = {}, signal?: AbortSignal): Promise<FeatureCollection> {
    const url = buildUrl(this.base, "/api/map", {
      metric: query.metric, from: query.from, to: query.to,
    });
    return getJson(url, "/api/map", signal);
  }

  terms(query: TermsQuery = {}, signal?: AbortSignal): Promise<TermEntry[]> {
    const url = buildUrl(this.base, "/api/terms", { day: query.day, limit: query.limit });
    return getJson(url, "/api/terms", signal);
  }

  legislators(signal?: AbortSignal): Promise<Legislator[]> {
    return getJson(buildUrl(this.base, "/api/legislators", {}), "/api/legislators", signal);
  }

  legislatorVotes(id: string, signal?: AbortSignal): Promise<VoteRow[]> {
    const route = `/api/legislators/${encodeURIComponent(id)}/votes`;
    return getJson(buildUrl(this.base, route, {}), route, signal);
  }
}
