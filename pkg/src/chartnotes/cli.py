"""Batch workflow driver: ingest a corpus, detect features, rank
annotations, and emit an annotated-chart spec.

Exit codes: 0 success (an empty annotation list is success — the feature
just stays unlabeled), 2 usage or precondition errors (bad flags, missing
store, missing key), 1 runtime failures (network, auth, bad files).
"""

from __future__ import annotations

import argparse
import datetime as dt
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .archive import ARCHIVE_KEY_ENV, fetch_archive_month
from .chartspec import TextLayer, chart_spec_json
from .errors import ArchiveError, ChartnotesError
from .jsonfmt import to_canonical_json
from .model import (
    FeatureKind,
    Granularity,
    IntervalLocus,
    PointLocus,
    normalize_series,
    read_points_csv,
)
from .detector import detect_features
from .recommender import get_annotations
from .store import DEFAULT_NEWS_TYPES, ingest, load_store, save_store
from .wire import annotations_to_wire, feature_from_wire, features_to_wire


def _load_series(path: str, granularity: str, keywords: Sequence[str] = ()):
    points = read_points_csv(path)
    return normalize_series(points, Granularity(granularity), keywords)


def _parse_year_range(text: str) -> list[int]:
    parts = text.split("-")
    try:
        if len(parts) == 1:
            first = last = int(parts[0])
        elif len(parts) == 2:
            first, last = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"expected YYYY or YYYY-YYYY, got {text!r}") from None
    if first > last:
        raise ValueError(f"year range {text!r} runs backwards")
    return list(range(first, last + 1))


def _cmd_ingest(args: argparse.Namespace) -> int:
    raws: list[dict] = []
    if args.from_ndjson:
        try:
            with open(args.from_ndjson, encoding="utf-8") as handle:
                for line_number, line in enumerate(handle, start=1):
                    if not line.strip():
                        continue
                    try:
                        raws.append(json.loads(line))
                    except json.JSONDecodeError:
                        print(
                            f"error: {args.from_ndjson}:{line_number} is not valid JSON",
                            file=sys.stderr,
                        )
                        return 1
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    else:
        key = os.environ.get(args.key_env, "")
        if not key:
            print(
                f"error: environment variable {args.key_env} is not set",
                file=sys.stderr,
            )
            return 2
        try:
            years = _parse_year_range(args.from_archive)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        try:
            for year in years:
                for month in range(1, 13):
                    raws.extend(fetch_archive_month(year, month, key))
        except (ArchiveError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    allowed = (
        {t.strip() for t in args.types.split(",") if t.strip()}
        if args.types
        else DEFAULT_NEWS_TYPES
    )
    store = ingest(raws, allowed)
    try:
        save_store(store, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"{len(store)} records written to {args.out} ({len(raws) - len(store)} skipped)")
    return 0


def _cmd_features(args: argparse.Namespace) -> int:
    series = _load_series(args.series, args.granularity)
    detected = detect_features(
        series,
        FeatureKind(args.kind),
        max_count=args.max_count,
        min_prominence=args.min_prominence,
    )
    Path(args.out).write_text(
        to_canonical_json(features_to_wire(detected)), encoding="utf-8"
    )
    print(f"{len(detected)} features written to {args.out}")
    return 0


def _cmd_annotate(args: argparse.Namespace) -> int:
    if not os.path.exists(args.store):
        print(f"error: store file {args.store} does not exist", file=sys.stderr)
        return 2
    keywords = [kw.strip() for kw in args.keywords.split(",") if kw.strip()]
    series = _load_series(args.series, args.granularity, keywords)
    payload = json.loads(Path(args.features).read_text(encoding="utf-8"))
    features = [feature_from_wire(entry) for entry in payload["features"]]
    target = next((f for f in features if f.rank == args.target), None)
    if target is None:
        ranks = sorted(f.rank for f in features)
        print(
            f"error: no feature with rank {args.target} in {args.features} "
            f"(available: {ranks})",
            file=sys.stderr,
        )
        return 2
    context = [f for f in features if f is not target]
    store = load_store(args.store)
    ranked = get_annotations(target, context, series, store)
    if args.top is not None:
        ranked = ranked[: args.top]
    Path(args.out).write_text(
        to_canonical_json(annotations_to_wire(ranked, target)), encoding="utf-8"
    )
    print(f"{len(ranked)} annotations written to {args.out}")
    return 0


def _anchor_date(feature_payload: dict) -> dt.date:
    if feature_payload.get("timestamp"):
        return dt.date.fromisoformat(feature_payload["timestamp"])
    return dt.date.fromisoformat(feature_payload["start"])


def _cmd_render(args: argparse.Namespace) -> int:
    points = read_points_csv(args.series)
    by_date = {day: value for day, value in points}
    layers: list[TextLayer] = []
    annotation_files = sorted(Path(args.annotations_dir).glob("*.json"))
    for annotation_file in annotation_files:
        payload = json.loads(annotation_file.read_text(encoding="utf-8"))
        chosen = payload.get("annotations") or []
        if not chosen:
            continue  # unlabeled feature: no layer
        top = chosen[0]
        anchor = _anchor_date(payload["target"])
        if anchor not in by_date:
            print(
                f"error: {annotation_file.name} anchors at {anchor}, "
                "which is not in the series",
                file=sys.stderr,
            )
            return 1
        layers.append(
            TextLayer(
                date=anchor,
                value=by_date[anchor],
                text=top["headline"],
                url=top.get("url", ""),
                publish_date=top.get("publish_date", ""),
            )
        )
    Path(args.out).write_text(chart_spec_json(points, layers), encoding="utf-8")
    print(f"chart spec with {len(layers)} annotation layer(s) written to {args.out}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import ServiceConfig, create_app

    config = ServiceConfig(
        store_path=args.store,
        host=args.host,
        port=args.port,
        max_body_bytes=args.max_body,
        cors_origins=tuple(o.strip() for o in args.cors.split(",") if o.strip())
        if args.cors
        else (),
    )
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chartnotes",
        description="Detect prominent chart features and rank news headlines for them.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    ingest_cmd = commands.add_parser(
        "ingest", help="build a headline store from an archive or raw NDJSON"
    )
    source = ingest_cmd.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--from-archive",
        metavar="YEARS",
        help="fetch from the archive API for a year or year range (YYYY or YYYY-YYYY)",
    )
    source.add_argument(
        "--from-ndjson", metavar="PATH", help="read raw records from an NDJSON file"
    )
    ingest_cmd.add_argument(
        "--key-env",
        default=ARCHIVE_KEY_ENV,
        metavar="VAR",
        help=f"environment variable holding the API key (default {ARCHIVE_KEY_ENV})",
    )
    ingest_cmd.add_argument(
        "--types",
        default=None,
        metavar="CSV",
        help="comma-separated article-type allowlist (default: news)",
    )
    ingest_cmd.add_argument("--out", required=True, metavar="PATH")
    ingest_cmd.set_defaults(func=_cmd_ingest)

    features_cmd = commands.add_parser(
        "features", help="detect prominent peaks or valleys in a series CSV"
    )
    features_cmd.add_argument("--series", required=True, metavar="CSV")
    features_cmd.add_argument(
        "--granularity",
        required=True,
        choices=[g.value for g in Granularity],
    )
    features_cmd.add_argument("--kind", required=True, choices=["peak", "valley"])
    features_cmd.add_argument("--max-count", type=int, default=None)
    features_cmd.add_argument("--min-prominence", type=float, default=0.0)
    features_cmd.add_argument("--out", required=True, metavar="PATH")
    features_cmd.set_defaults(func=_cmd_features)

    annotate_cmd = commands.add_parser(
        "annotate", help="rank headlines for one detected feature"
    )
    annotate_cmd.add_argument("--series", required=True, metavar="CSV")
    annotate_cmd.add_argument(
        "--granularity",
        required=True,
        choices=[g.value for g in Granularity],
    )
    annotate_cmd.add_argument(
        "--keywords", required=True, help="comma-separated domain keywords"
    )
    annotate_cmd.add_argument("--features", required=True, metavar="PATH")
    annotate_cmd.add_argument(
        "--target", required=True, type=int, metavar="RANK",
        help="rank of the feature to annotate; the rest become context",
    )
    annotate_cmd.add_argument("--store", required=True, metavar="PATH")
    annotate_cmd.add_argument(
        "--top", type=int, default=None, metavar="N",
        help="keep only the N best headlines (1 = just the default pick)",
    )
    annotate_cmd.add_argument("--out", required=True, metavar="PATH")
    annotate_cmd.set_defaults(func=_cmd_annotate)

    render_cmd = commands.add_parser(
        "render", help="emit an annotated-chart JSON spec"
    )
    render_cmd.add_argument("--series", required=True, metavar="CSV")
    render_cmd.add_argument(
        "--annotations-dir", required=True, metavar="DIR",
        help="directory of annotate outputs; each contributes its top pick",
    )
    render_cmd.add_argument("--out", required=True, metavar="PATH")
    render_cmd.set_defaults(func=_cmd_render)

    serve_cmd = commands.add_parser("serve", help="run the HTTP service")
    serve_cmd.add_argument("--store", required=True, metavar="PATH")
    serve_cmd.add_argument("--host", default="127.0.0.1")
    serve_cmd.add_argument("--port", type=int, default=8000)
    serve_cmd.add_argument("--max-body", type=int, default=1_048_576)
    serve_cmd.add_argument("--cors", default=None, metavar="ORIGINS")
    serve_cmd.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ChartnotesError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
