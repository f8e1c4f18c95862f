/**
 * Thin client for the annotation service's /v1 endpoints. Every number
 * the UI shows comes straight out of these responses; nothing is
 * recomputed on this side.
 */

import type {
  AnnotationsResponse,
  FeaturesResponse,
  FeatureWire,
  SeriesWire,
} from "./types";

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

/** The service answered with a non-2xx status. */
export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ServiceError";
  }
}

async function postJson<T>(
  fetchFn: FetchLike,
  url: string,
  body: unknown,
  signal?: AbortSignal,
): Promise<T> {
  const response = await fetchFn(url, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
    signal,
  });
  if (!response.ok) {
    let detail = `${response.status}`;
    try {
      const payload = (await response.json()) as { detail?: unknown };
      if (payload && payload.detail !== undefined) {
        detail =
          typeof payload.detail === "string"
            ? payload.detail
            : JSON.stringify(payload.detail);
      }
    } catch {
      // keep the bare status when the body is not JSON
    }
    throw new ServiceError(response.status, detail);
  }
  return (await response.json()) as T;
}

export interface FeaturesRequest {
  series: SeriesWire;
  kind: "peak" | "valley";
  max_count?: number;
  min_prominence?: number;
}

export function fetchFeatures(
  fetchFn: FetchLike,
  baseUrl: string,
  request: FeaturesRequest,
  signal?: AbortSignal,
): Promise<FeaturesResponse> {
  return postJson(fetchFn, `${baseUrl}/v1/features`, request, signal);
}

export interface AnnotationsRequest {
  series: SeriesWire;
  target: FeatureWire;
  context: FeatureWire[];
}

export function fetchAnnotations(
  fetchFn: FetchLike,
  baseUrl: string,
  request: AnnotationsRequest,
  signal?: AbortSignal,
): Promise<AnnotationsResponse> {
  return postJson(fetchFn, `${baseUrl}/v1/annotations`, request, signal);
}

export function isAbort(error: unknown): boolean {
  return error instanceof DOMException && error.name === "AbortError";
}
