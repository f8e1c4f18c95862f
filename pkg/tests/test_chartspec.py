"""Annotated-chart documents and their canonical serialization."""

import datetime as dt

import pytest

from chartnotes.chartspec import TextLayer, build_chart_spec, chart_spec_json

POINTS = [(dt.date(2018, 7, 1), 9.0), (dt.date(2018, 1, 1), 1.5)]


def test_bare_line_chart():
    spec = build_chart_spec(POINTS, [])
    assert spec["spec_version"] == 1
    assert spec["chart"] == {"type": "line", "x": "date", "y": "value"}
    assert spec["layers"] == []
    # data comes out date-sorted regardless of input order
    assert [row["date"] for row in spec["data"]] == ["2018-01-01", "2018-07-01"]


def test_one_text_layer_per_annotation():
    layers = [
        TextLayer(dt.date(2018, 1, 1), 1.5, "Quiet Winter"),
        TextLayer(dt.date(2018, 7, 1), 9.0, "Ember", url="u", publish_date="2018-07-03"),
    ]
    spec = build_chart_spec(POINTS, layers)
    assert len(spec["layers"]) == 2
    assert spec["layers"][1] == {
        "type": "text",
        "date": "2018-07-01",
        "value": 9.0,
        "text": "Ember",
        "url": "u",
        "publish_date": "2018-07-03",
    }


def test_layer_must_anchor_to_an_existing_date():
    stray = TextLayer(dt.date(2018, 3, 1), 4.0, "Nowhere")
    with pytest.raises(ValueError):
        build_chart_spec(POINTS, [stray])


def test_canonical_bytes():
    layer = TextLayer(dt.date(2018, 7, 1), 9.0, "Ember", publish_date="2018-07-03")
    assert chart_spec_json(POINTS, [layer]) == (
        "{\n"
        '  "chart": {\n'
        '    "type": "line",\n'
        '    "x": "date",\n'
        '    "y": "value"\n'
        "  },\n"
        '  "data": [\n'
        "    {\n"
        '      "date": "2018-01-01",\n'
        '      "value": 1.5\n'
        "    },\n"
        "    {\n"
        '      "date": "2018-07-01",\n'
        '      "value": 9\n'
        "    }\n"
        "  ],\n"
        '  "layers": [\n'
        "    {\n"
        '      "date": "2018-07-01",\n'
        '      "publish_date": "2018-07-03",\n'
        '      "text": "Ember",\n'
        '      "type": "text",\n'
        '      "url": "",\n'
        '      "value": 9\n'
        "    }\n"
        "  ],\n"
        '  "spec_version": 1\n'
        "}\n"
    )


def test_byte_stable():
    layer = TextLayer(dt.date(2018, 7, 1), 9.0, "Ember")
    assert chart_spec_json(POINTS, [layer]) == chart_spec_json(POINTS, [layer])
