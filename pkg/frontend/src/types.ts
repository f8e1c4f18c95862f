/** Wire shapes exchanged with the annotation service's /v1 endpoints. */

export type Granularity = "year" | "month" | "week" | "day";

export type FeatureKind = "peak" | "valley" | "trend";

/**
 * One chart feature as the service emits it. Point features carry a
 * `timestamp`; trend features carry `start`/`end`. The global extremum
 * has `persistence: null` and `global: true`. The UI treats these
 * payloads as opaque: it never recomputes persistence or rank, it only
 * passes them back verbatim as target/context.
 */
export interface FeatureWire {
  kind: FeatureKind;
  timestamp?: string;
  start?: string;
  end?: string;
  persistence?: number | null;
  global?: boolean;
  rank?: number;
}

/** One ranked headline as /v1/annotations returns it. */
export interface ScoredHeadlineWire {
  rank: number;
  score: number;
  headline: string;
  publish_date: string;
  url: string;
}

export interface SeriesPoint {
  date: string; // ISO-8601 day
  value: number;
}

export interface SeriesWire {
  points: SeriesPoint[];
  granularity: Granularity;
  keywords: string[];
}

export interface FeaturesResponse {
  features: FeatureWire[];
}

export interface AnnotationsResponse {
  annotations: ScoredHeadlineWire[];
}

/** Anchor day of a feature: its timestamp, or interval start for trends. */
export function anchorDate(feature: FeatureWire): string {
  if (feature.timestamp) return feature.timestamp;
  if (feature.start) return feature.start;
  throw new Error("feature has neither a timestamp nor a start date");
}

/** Short human label for a feature row. */
export function featureLabel(feature: FeatureWire): string {
  const where = feature.timestamp ?? `${feature.start} → ${feature.end}`;
  const how = feature.global
    ? "global"
    : feature.persistence != null
      ? `persistence ${feature.persistence}`
      : "manual";
  return `${feature.kind} @ ${where} (${how})`;
}
