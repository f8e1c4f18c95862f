/** DOM wiring: forms in, picker state rendered out. */

import { renderChart } from "./chart";
import { PickerApp } from "./state";
import { featureLabel } from "./types";
import "./style.css";

const SERVICE_URL =
  new URLSearchParams(window.location.search).get("service") ??
  "http://127.0.0.1:8000";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const app = new PickerApp({ baseUrl: SERVICE_URL, onChange: render });

const csvInput = el<HTMLInputElement>("csv-file");
const granularityInput = el<HTMLSelectElement>("granularity");
const kindInput = el<HTMLSelectElement>("kind");
const keywordsInput = el<HTMLInputElement>("keywords");
const loadButton = el<HTMLButtonElement>("load");
const banner = el<HTMLDivElement>("banner");
const hint = el<HTMLDivElement>("hint");
const toast = el<HTMLDivElement>("toast");
const chartHost = el<HTMLDivElement>("chart");
const featureList = el<HTMLUListElement>("features");
const panelHost = el<HTMLDivElement>("panel");
const exportButton = el<HTMLButtonElement>("export");

loadButton.addEventListener("click", async () => {
  const file = csvInput.files?.[0];
  if (!file) {
    banner.textContent = "choose a CSV file first";
    banner.hidden = false;
    return;
  }
  await app.loadSeries(
    await file.text(),
    granularityInput.value as "year" | "month" | "week" | "day",
    keywordsInput.value,
    kindInput.value as "peak" | "valley",
  );
});

exportButton.addEventListener("click", () => {
  let text: string;
  try {
    text = app.exportChart();
  } catch (error) {
    banner.textContent = error instanceof Error ? error.message : String(error);
    banner.hidden = false;
    return;
  }
  const blob = new Blob([text], { type: "application/json" });
  const url = URL.createObjectURL(blob);
  const link = document.createElement("a");
  link.href = url;
  link.download = "chart.json";
  link.click();
  URL.revokeObjectURL(url);
});

function render(): void {
  banner.textContent = app.banner ?? "";
  banner.hidden = app.banner === null;
  hint.textContent = app.hint ?? "";
  hint.hidden = app.hint === null;

  toast.textContent = "";
  toast.hidden = app.toast === null;
  if (app.toast !== null) {
    const message = document.createElement("span");
    message.textContent = app.toast;
    const retry = document.createElement("button");
    retry.textContent = "retry";
    retry.addEventListener("click", () => void app.retry());
    toast.append(message, retry);
  }

  renderChart(chartHost, app.points, app.features, app.panel.featureIndex, {
    onPickFeature: (index) => void app.pickFeature(index),
    onAddPoint: (date) => {
      const index = app.addPointFeature(date);
      void app.pickFeature(index);
    },
    onAddTrend: (start, end) => {
      const index = app.addTrendFeature(start, end);
      void app.pickFeature(index);
    },
  });

  featureList.textContent = "";
  app.features.forEach((feature, index) => {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.textContent = featureLabel(feature);
    button.disabled = !app.annotationsEnabled;
    button.classList.toggle("active", app.panel.featureIndex === index);
    button.addEventListener("click", () => void app.pickFeature(index));
    item.append(button);
    const chosen = app.selections.get(index);
    if (chosen) {
      const label = document.createElement("span");
      label.className = "chosen";
      label.textContent = ` → ${chosen.headline}`;
      item.append(label);
    }
    featureList.append(item);
  });

  renderPanel();
  exportButton.disabled = !app.loaded;
}

function renderPanel(): void {
  panelHost.textContent = "";
  const { featureIndex, status, headlines, message } = app.panel;
  if (status === "idle") return;
  if (status === "loading") {
    panelHost.textContent = "loading headlines…";
    return;
  }
  if (status === "error") {
    panelHost.textContent = message;
    return;
  }
  if (status === "empty") {
    const empty = document.createElement("p");
    empty.className = "unlabeled";
    empty.textContent = message;
    panelHost.append(empty);
    return;
  }
  const list = document.createElement("ol");
  headlines.forEach((headline) => {
    const item = document.createElement("li");
    const pick = document.createElement("input");
    pick.type = "radio";
    pick.name = "headline";
    pick.checked =
      featureIndex !== null &&
      app.selections.get(featureIndex)?.rank === headline.rank;
    pick.addEventListener("change", () => {
      if (featureIndex !== null) app.choose(featureIndex, headline);
    });
    const text = document.createElement("label");
    const link = document.createElement("a");
    link.href = headline.url;
    link.target = "_blank";
    link.rel = "noreferrer";
    link.textContent = headline.headline;
    const meta = document.createElement("span");
    meta.className = "meta";
    meta.textContent = ` — ${headline.publish_date}, score ${headline.score}`;
    text.append(link, meta);
    item.append(pick, text);
    list.append(item);
  });
  panelHost.append(list);
  if (featureIndex !== null && app.selections.has(featureIndex)) {
    const clear = document.createElement("button");
    clear.textContent = "leave unlabeled";
    clear.addEventListener("click", () => app.deselect(featureIndex));
    panelHost.append(clear);
  }
}

render();
