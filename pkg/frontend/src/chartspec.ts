/**
 * The declarative annotated-chart document: series data, a line mark,
 * one text layer per confirmed annotation. Same shape and same canonical
 * bytes as the CLI's render command, so exports from either source are
 * interchangeable.
 */

import { toCanonicalJson, type JsonValue } from "./jsonfmt";
import type { SeriesPoint } from "./types";

export const SPEC_VERSION = 1;

/** One annotation: a headline anchored to a (date, value) point. */
export interface TextLayer {
  date: string;
  value: number;
  text: string;
  url: string;
  publish_date: string;
}

/**
 * Assemble the chart document. Every layer must anchor to a date that
 * exists in `points`.
 */
export function buildChartSpec(
  points: SeriesPoint[],
  layers: TextLayer[],
): JsonValue {
  const dates = new Set(points.map((point) => point.date));
  for (const layer of layers) {
    if (!dates.has(layer.date)) {
      throw new Error(
        `annotation anchored at ${layer.date}, which is not in the series`,
      );
    }
  }
  return {
    spec_version: SPEC_VERSION,
    chart: { type: "line", x: "date", y: "value" },
    data: [...points]
      // ISO dates sort chronologically as strings; stable, like the CLI
      .sort((a, b) => (a.date < b.date ? -1 : a.date > b.date ? 1 : 0))
      .map((point) => ({ date: point.date, value: point.value })),
    layers: layers.map((layer) => ({
      type: "text",
      date: layer.date,
      value: layer.value,
      text: layer.text,
      url: layer.url,
      publish_date: layer.publish_date,
    })),
  };
}

/** Canonical serialized form; byte-stable for identical inputs. */
export function chartSpecJson(
  points: SeriesPoint[],
  layers: TextLayer[],
): string {
  return toCanonicalJson(buildChartSpec(points, layers));
}
