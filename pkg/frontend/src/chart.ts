/**
 * SVG line chart with feature markers. Click near a point to mark a
 * manual point feature; drag across the chart to mark a trend interval.
 * Pure DOM construction — no chart library, no number crunching beyond
 * pixel placement.
 */

import type { FeatureWire, SeriesPoint } from "./types";
import { anchorDate } from "./types";

const WIDTH = 720;
const HEIGHT = 300;
const MARGIN = { top: 16, right: 16, bottom: 28, left: 48 };
const SVG_NS = "http://www.w3.org/2000/svg";
const DRAG_THRESHOLD_PX = 6;

export interface ChartCallbacks {
  onPickFeature: (index: number) => void;
  onAddPoint: (date: string) => void;
  onAddTrend: (start: string, end: string) => void;
}

interface Scale {
  x: (index: number) => number;
  y: (value: number) => number;
}

function makeScale(points: SeriesPoint[]): Scale {
  const innerWidth = WIDTH - MARGIN.left - MARGIN.right;
  const innerHeight = HEIGHT - MARGIN.top - MARGIN.bottom;
  const values = points.map((point) => point.value);
  const low = Math.min(...values);
  const high = Math.max(...values);
  const spread = high - low || 1;
  const step = points.length > 1 ? innerWidth / (points.length - 1) : 0;
  return {
    x: (index) => MARGIN.left + index * step,
    y: (value) => MARGIN.top + (high - value) * (innerHeight / spread),
  };
}

function element<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attributes: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [name, value] of Object.entries(attributes)) {
    node.setAttribute(name, value);
  }
  return node;
}

function nearestIndex(points: SeriesPoint[], scale: Scale, px: number): number {
  let best = 0;
  let bestDistance = Infinity;
  points.forEach((_, index) => {
    const distance = Math.abs(scale.x(index) - px);
    if (distance < bestDistance) {
      bestDistance = distance;
      best = index;
    }
  });
  return best;
}

export function renderChart(
  container: HTMLElement,
  points: SeriesPoint[],
  features: FeatureWire[],
  selectedFeature: number | null,
  callbacks: ChartCallbacks,
): void {
  container.textContent = "";
  if (points.length === 0) return;

  const ordered = [...points].sort((a, b) =>
    a.date < b.date ? -1 : a.date > b.date ? 1 : 0,
  );
  const scale = makeScale(ordered);
  const byDate = new Map(ordered.map((point, index) => [point.date, index]));

  const svg = element("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: "chart",
    role: "img",
  });

  const path = ordered
    .map(
      (point, index) =>
        `${index === 0 ? "M" : "L"}${scale.x(index).toFixed(1)},${scale
          .y(point.value)
          .toFixed(1)}`,
    )
    .join(" ");
  svg.append(element("path", { d: path, class: "chart-line", fill: "none" }));

  // axis baseline and first/last date labels keep the chart readable
  svg.append(
    element("line", {
      x1: String(MARGIN.left),
      y1: String(HEIGHT - MARGIN.bottom),
      x2: String(WIDTH - MARGIN.right),
      y2: String(HEIGHT - MARGIN.bottom),
      class: "chart-axis",
    }),
  );
  const firstLabel = element("text", {
    x: String(MARGIN.left),
    y: String(HEIGHT - 8),
    class: "chart-label",
  });
  firstLabel.textContent = ordered[0]?.date ?? "";
  const lastLabel = element("text", {
    x: String(WIDTH - MARGIN.right),
    y: String(HEIGHT - 8),
    class: "chart-label",
    "text-anchor": "end",
  });
  lastLabel.textContent = ordered[ordered.length - 1]?.date ?? "";
  svg.append(firstLabel, lastLabel);

  features.forEach((feature, featureIndex) => {
    let date: string;
    try {
      date = anchorDate(feature);
    } catch {
      return;
    }
    const pointIndex = byDate.get(date);
    if (pointIndex === undefined) return;
    const value = ordered[pointIndex]!.value;
    const marker = element("circle", {
      cx: String(scale.x(pointIndex)),
      cy: String(scale.y(value)),
      r: "7",
      class:
        featureIndex === selectedFeature
          ? "feature-marker selected"
          : "feature-marker",
      "data-feature": String(featureIndex),
    });
    marker.addEventListener("click", (event) => {
      event.stopPropagation();
      callbacks.onPickFeature(featureIndex);
    });
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${feature.kind} ${date}`;
    marker.append(title);
    svg.append(marker);
  });

  // click adds a point feature at the nearest data point; a horizontal
  // drag adds a trend interval between the nearest endpoints
  let dragStart: { px: number; index: number } | null = null;
  svg.addEventListener("mousedown", (event) => {
    const px = toChartX(svg, event);
    dragStart = { px, index: nearestIndex(ordered, scale, px) };
  });
  svg.addEventListener("mouseup", (event) => {
    if (!dragStart) return;
    const px = toChartX(svg, event);
    const endIndex = nearestIndex(ordered, scale, px);
    const moved = Math.abs(px - dragStart.px) > DRAG_THRESHOLD_PX;
    if (moved && endIndex !== dragStart.index) {
      callbacks.onAddTrend(
        ordered[dragStart.index]!.date,
        ordered[endIndex]!.date,
      );
    } else {
      callbacks.onAddPoint(ordered[dragStart.index]!.date);
    }
    dragStart = null;
  });

  container.append(svg);
}

function toChartX(svg: SVGSVGElement, event: MouseEvent): number {
  const box = svg.getBoundingClientRect();
  const width = box.width || WIDTH;
  return ((event.clientX - box.left) / width) * WIDTH;
}
