import { describe, expect, it } from "vitest";

import { buildChartSpec, chartSpecJson } from "../src/chartspec";
import type { SeriesPoint } from "../src/types";

const POINTS: SeriesPoint[] = [
  { date: "2018-03-01", value: 2 },
  { date: "2018-01-01", value: 1 },
  { date: "2018-02-01", value: 3.5 },
];

describe("buildChartSpec", () => {
  it("sorts data points chronologically", () => {
    const spec = buildChartSpec(POINTS, []) as unknown as { data: SeriesPoint[] };
    expect(spec.data.map((point) => point.date)).toEqual([
      "2018-01-01",
      "2018-02-01",
      "2018-03-01",
    ]);
  });

  it("rejects a layer anchored off the series", () => {
    expect(() =>
      buildChartSpec(POINTS, [
        {
          date: "1999-01-01",
          value: 0,
          text: "X",
          url: "",
          publish_date: "",
        },
      ]),
    ).toThrow("1999-01-01");
  });

  it("serializes to the exact canonical text", () => {
    const text = chartSpecJson(
      [{ date: "2018-01-01", value: 1 }],
      [
        {
          date: "2018-01-01",
          value: 1,
          text: "Big News",
          url: "https://example.com/a",
          publish_date: "2018-01-02",
        },
      ],
    );
    expect(text).toBe(
      `{
  "chart": {
    "type": "line",
    "x": "date",
    "y": "value"
  },
  "data": [
    {
      "date": "2018-01-01",
      "value": 1
    }
  ],
  "layers": [
    {
      "date": "2018-01-01",
      "publish_date": "2018-01-02",
      "text": "Big News",
      "type": "text",
      "url": "https://example.com/a",
      "value": 1
    }
  ],
  "spec_version": 1
}
`,
    );
  });

  it("is byte-stable for identical inputs", () => {
    expect(chartSpecJson(POINTS, [])).toBe(chartSpecJson(POINTS, []));
  });
});
