/**
 * Annotation-picker session state, free of any DOM concerns so the
 * workflow can be driven and asserted directly in tests.
 *
 * Flow: load a series (chart + detected features), pick a feature
 * (ranked headlines arrive, rank 1 preselected), confirm or change
 * picks, export the annotated chart spec. Scores, persistences and
 * ranks are shown exactly as the service sent them — this side never
 * computes any of those numbers.
 */

import {
  fetchAnnotations,
  fetchFeatures,
  isAbort,
  type FetchLike,
} from "./api";
import { chartSpecJson, type TextLayer } from "./chartspec";
import { parsePointsCsv } from "./csv";
import {
  anchorDate,
  type FeatureWire,
  type Granularity,
  type ScoredHeadlineWire,
  type SeriesPoint,
  type SeriesWire,
} from "./types";

export const UNLABELED_MESSAGE =
  "no suitable headline — feature left unlabeled";
export const KEYWORDS_HINT =
  "add topic keywords to enable headline suggestions";

export type PanelStatus = "idle" | "loading" | "ready" | "empty" | "error";

export interface Panel {
  featureIndex: number | null;
  status: PanelStatus;
  headlines: ScoredHeadlineWire[];
  message: string;
}

const IDLE_PANEL: Panel = {
  featureIndex: null,
  status: "idle",
  headlines: [],
  message: "",
};

export interface PickerOptions {
  baseUrl: string;
  fetchFn?: FetchLike;
  onChange?: () => void;
}

export class PickerApp {
  points: SeriesPoint[] = [];
  granularity: Granularity = "month";
  keywords: string[] = [];
  kind: "peak" | "valley" = "peak";
  features: FeatureWire[] = [];
  detectedCount = 0;
  selections = new Map<number, ScoredHeadlineWire>();
  panel: Panel = IDLE_PANEL;
  banner: string | null = null;
  hint: string | null = null;
  toast: string | null = null;

  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;
  private readonly onChange: () => void;
  private inflight: AbortController | null = null;
  private lastPick: number | null = null;

  constructor(options: PickerOptions) {
    this.baseUrl = options.baseUrl.replace(/\/$/, "");
    this.fetchFn =
      options.fetchFn ?? ((input, init) => globalThis.fetch(input, init));
    this.onChange = options.onChange ?? (() => {});
  }

  private notify(): void {
    this.onChange();
  }

  get seriesWire(): SeriesWire {
    return {
      points: this.points,
      granularity: this.granularity,
      keywords: this.keywords,
    };
  }

  get loaded(): boolean {
    return this.points.length > 0;
  }

  /** True when headline requests are possible (series loaded, keywords set). */
  get annotationsEnabled(): boolean {
    return this.loaded && this.keywords.length > 0;
  }

  /**
   * Parse the CSV, draw the chart, and ask the service for features.
   * Malformed input surfaces as an inline banner, never an exception.
   */
  async loadSeries(
    csvText: string,
    granularity: Granularity,
    keywordsText: string,
    kind: "peak" | "valley" = "peak",
  ): Promise<void> {
    this.banner = null;
    this.toast = null;
    let points: SeriesPoint[];
    try {
      points = parsePointsCsv(csvText);
    } catch (error) {
      this.banner = error instanceof Error ? error.message : String(error);
      this.notify();
      return;
    }
    this.points = points;
    this.granularity = granularity;
    this.kind = kind;
    this.keywords = keywordsText
      .split(",")
      .map((keyword) => keyword.trim())
      .filter((keyword) => keyword !== "");
    this.hint = this.keywords.length === 0 ? KEYWORDS_HINT : null;
    this.features = [];
    this.detectedCount = 0;
    this.selections = new Map();
    this.panel = IDLE_PANEL;
    this.lastPick = null;
    this.notify();

    try {
      const response = await fetchFeatures(this.fetchFn, this.baseUrl, {
        series: this.seriesWire,
        kind,
      });
      this.features = response.features;
      this.detectedCount = response.features.length;
    } catch (error) {
      this.banner = `feature detection failed: ${
        error instanceof Error ? error.message : String(error)
      }`;
    }
    this.notify();
  }

  /**
   * Request ranked headlines for one feature; every other feature (in
   * order) is sent as context. Cancels any request still in flight.
   */
  async pickFeature(index: number): Promise<void> {
    const target = this.features[index];
    if (!target) throw new Error(`no feature at index ${index}`);
    if (!this.annotationsEnabled) {
      this.hint = KEYWORDS_HINT;
      this.notify();
      return;
    }
    this.toast = null;
    this.lastPick = index;
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    this.panel = {
      featureIndex: index,
      status: "loading",
      headlines: [],
      message: "",
    };
    this.notify();

    let headlines: ScoredHeadlineWire[];
    try {
      const response = await fetchAnnotations(
        this.fetchFn,
        this.baseUrl,
        {
          series: this.seriesWire,
          target,
          context: this.features.filter((_, position) => position !== index),
        },
        controller.signal,
      );
      headlines = response.annotations;
    } catch (error) {
      if (isAbort(error) || controller !== this.inflight) return;
      const message = error instanceof Error ? error.message : String(error);
      this.panel = {
        featureIndex: index,
        status: "error",
        headlines: [],
        message,
      };
      this.toast = `annotation request failed: ${message}`;
      this.notify();
      return;
    }
    if (controller !== this.inflight) return; // superseded by a newer pick
    this.inflight = null;

    if (headlines.length === 0) {
      this.panel = {
        featureIndex: index,
        status: "empty",
        headlines: [],
        message: UNLABELED_MESSAGE,
      };
    } else {
      this.panel = {
        featureIndex: index,
        status: "ready",
        headlines,
        message: "",
      };
      if (!this.selections.has(index)) {
        // the highest-ranked headline is chosen by default
        this.selections.set(index, headlines[0]!);
      }
    }
    this.notify();
  }

  /** Re-issue the last annotation request (the toast's retry action). */
  async retry(): Promise<void> {
    if (this.lastPick !== null) await this.pickFeature(this.lastPick);
  }

  choose(featureIndex: number, headline: ScoredHeadlineWire): void {
    this.selections.set(featureIndex, headline);
    this.notify();
  }

  deselect(featureIndex: number): void {
    this.selections.delete(featureIndex);
    this.notify();
  }

  /** Click-to-mark: a manual point feature at a data point's date. */
  addPointFeature(date: string): number {
    this.features = [...this.features, { kind: this.kind, timestamp: date }];
    this.notify();
    return this.features.length - 1;
  }

  /** Drag-to-mark: a manual trend feature across an interval. */
  addTrendFeature(start: string, end: string): number {
    const [first, last] = start <= end ? [start, end] : [end, start];
    this.features = [...this.features, { kind: "trend", start: first, end: last }];
    this.notify();
    return this.features.length - 1;
  }

  /**
   * Canonical chart-spec text with one layer per confirmed selection,
   * in feature order.
   */
  exportChart(): string {
    const byDate = new Map(this.points.map((point) => [point.date, point.value]));
    const layers: TextLayer[] = [];
    this.features.forEach((feature, index) => {
      const chosen = this.selections.get(index);
      if (!chosen) return;
      const date = anchorDate(feature);
      const value = byDate.get(date);
      if (value === undefined) {
        throw new Error(
          `annotation anchored at ${date}, which is not in the series`,
        );
      }
      layers.push({
        date,
        value,
        text: chosen.headline,
        url: chosen.url,
        publish_date: chosen.publish_date,
      });
    });
    return chartSpecJson(this.points, layers);
  }
}
