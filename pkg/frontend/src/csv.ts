/**
 * Series CSV parsing: header `date,value`, ISO dates, one point per line.
 * Same acceptance rules as the service-side reader (blank lines skipped,
 * errors name the offending line) so a file that loads here also loads
 * there.
 */

import type { SeriesPoint } from "./types";

const ISO_DAY = /^\d{4}-\d{2}-\d{2}$/;

function parseIsoDay(text: string): string {
  if (!ISO_DAY.test(text)) throw new Error(`bad date ${JSON.stringify(text)}`);
  const [year, month, day] = text.split("-").map(Number) as [
    number,
    number,
    number,
  ];
  const probe = new Date(Date.UTC(year, month - 1, day));
  if (
    probe.getUTCFullYear() !== year ||
    probe.getUTCMonth() !== month - 1 ||
    probe.getUTCDate() !== day
  ) {
    throw new Error(`bad date ${JSON.stringify(text)}`);
  }
  return text;
}

export function parsePointsCsv(text: string): SeriesPoint[] {
  const lines = text.split(/\r\n|\r|\n/);
  if (lines.length === 0 || lines.every((line) => line.trim() === "")) {
    throw new Error("CSV is empty");
  }
  const header = (lines[0] ?? "")
    .split(",")
    .slice(0, 2)
    .map((column) => column.trim().toLowerCase());
  if (header[0] !== "date" || header[1] !== "value") {
    throw new Error(`expected header 'date,value', got ${JSON.stringify(lines[0])}`);
  }
  const points: SeriesPoint[] = [];
  for (let index = 1; index < lines.length; index += 1) {
    const lineNumber = index + 1;
    const line = lines[index] ?? "";
    if (line.trim() === "") continue;
    const cells = line.split(",");
    if (cells.length < 2) {
      throw new Error(`line ${lineNumber}: expected 2 columns, got ${cells.length}`);
    }
    let date: string;
    try {
      date = parseIsoDay((cells[0] ?? "").trim());
    } catch {
      throw new Error(`line ${lineNumber}: bad date ${JSON.stringify(cells[0])}`);
    }
    const raw = (cells[1] ?? "").trim();
    const value = Number(raw);
    if (raw === "" || !Number.isFinite(value)) {
      throw new Error(`line ${lineNumber}: bad value ${JSON.stringify(cells[1])}`);
    }
    points.push({ date, value });
  }
  if (points.length === 0) throw new Error("CSV holds no data rows");
  return points;
}
