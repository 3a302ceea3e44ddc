"""Command-line pipeline driver.

Subcommands: ingest | score | timeseries | hotspots | terms | votes |
serve | all.  Each writes its artifact file and exits 0 on success;
data errors exit 1 with a diagnostic, usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import date

from . import corpus as corpus_mod
from . import pipeline as pipeline_mod
from . import server as server_mod
from . import terms as terms_mod
from . import votes as votes_mod
from .errors import SnaplensError
from .pipeline import DEFAULT_CONFIG, PipelineConfig, load_config
from .sentiment import load_lexicon, score_document


def _add_config_arg(parser):
    parser.add_argument("--config", help="key = value config file")


def _add_corpus_args(parser):
    parser.add_argument("--input", required=True, help="corpus JSONL file")
    parser.add_argument("--lexicon", required=True, help="valence lexicon TSV")
    _add_config_arg(parser)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snaplens",
        description="SNAP discourse analytics: sentiment, terms, hot spots, votes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load, validate and relevance-filter a corpus")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--no-filter", action="store_true",
                   help="keep all valid documents, skip the relevance filter")
    _add_config_arg(p)

    p = sub.add_parser("score", help="write per-document sentiment scores as JSONL")
    _add_corpus_args(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("timeseries", help="aggregate score JSONL into daily points")
    p.add_argument("--scores", required=True, help="DocumentScore JSONL from 'score'")
    p.add_argument("--out", required=True)
    p.add_argument("--from", dest="from_day", type=date.fromisoformat)
    p.add_argument("--to", dest="to_day", type=date.fromisoformat)
    _add_config_arg(p)

    p = sub.add_parser("hotspots", help="hex-grid hot/cold spot GeoJSON")
    _add_corpus_args(p)
    p.add_argument("--out", required=True)
    p.add_argument("--metric", choices=pipeline_mod.MAP_METRICS)

    p = sub.add_parser("terms", help="weighted word-cloud terms as JSON")
    _add_corpus_args(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("votes", help="filter a bills file; optionally one record")
    p.add_argument("--bills", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--legislator", help="write this legislator's votes instead")
    _add_config_arg(p)

    p = sub.add_parser("all", help="run the whole pipeline into a snapshot file")
    p.add_argument("--input", required=True)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--bills")
    p.add_argument("--out", required=True)
    p.add_argument("--built-at", type=corpus_mod.parse_timestamp,
                   help="pin the build timestamp (for reproducible exports)")
    _add_config_arg(p)

    p = sub.add_parser("serve", help="serve a snapshot over HTTP")
    p.add_argument("--snapshot", required=True, help="snapshot JSON from 'all'")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None,
                   help="default: $PORT or 8000")
    p.add_argument("--static-dir", help="serve the built explorer UI from this dir")

    return parser


def _load_cfg(args) -> PipelineConfig:
    if getattr(args, "config", None):
        return load_config(args.config)
    return DEFAULT_CONFIG


def _write_json(path, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, ensure_ascii=False)
        fh.write("\n")


def run(args) -> int:
    cfg = _load_cfg(args)

    if args.command == "ingest":
        docs = corpus_mod.load_documents(args.input)
        if not args.no_filter:
            docs = corpus_mod.filter_relevant(docs, cfg.key_terms)
        corpus_mod.save_documents(docs, args.out)
        print(f"wrote {len(docs)} documents to {args.out}")
        return 0

    if args.command == "score":
        docs = corpus_mod.filter_relevant(corpus_mod.load_documents(args.input),
                                          cfg.key_terms)
        lexicon = load_lexicon(args.lexicon)
        with open(args.out, "w", encoding="utf-8") as fh:
            for doc in docs:
                score = score_document(doc, lexicon, cfg.rules, cfg.key_terms,
                                       cfg.kappa, cfg.negation_mode)
                fh.write(json.dumps(pipeline_mod.score_to_record(score)) + "\n")
        print(f"wrote {len(docs)} document scores to {args.out}")
        return 0

    if args.command == "timeseries":
        with open(args.scores, encoding="utf-8") as fh:
            scores = [pipeline_mod.score_from_record(json.loads(line))
                      for line in fh if line.strip()]
        points = pipeline_mod.compute_timeseries(
            scores, from_day=args.from_day, to_day=args.to_day,
            weighted=cfg.weighted_timeseries)
        _write_json(args.out, [pipeline_mod.timepoint_to_record(p) for p in points])
        print(f"wrote {len(points)} daily points to {args.out}")
        return 0

    if args.command == "hotspots":
        docs = corpus_mod.filter_relevant(corpus_mod.load_documents(args.input),
                                          cfg.key_terms)
        lexicon = load_lexicon(args.lexicon)
        scores = [score_document(d, lexicon, cfg.rules, cfg.key_terms, cfg.kappa,
                                 cfg.negation_mode) for d in docs]
        docs_meta = {
            d.id: pipeline_mod.DocMeta(kind=d.kind, source=d.source,
                                       geotag=tuple(d.geotag) if d.geotag else None)
            for d in docs
        }
        grid = pipeline_mod.compute_map_grid(cfg, docs_meta, scores,
                                             metric=args.metric, require_data=True)
        from .geo import grid_to_geojson
        _write_json(args.out, grid_to_geojson(grid))
        n_data = len(grid.data_cells())
        print(f"wrote {len(grid.cells)} cells ({n_data} with data) to {args.out}")
        return 0

    if args.command == "terms":
        docs = corpus_mod.filter_relevant(corpus_mod.load_documents(args.input),
                                          cfg.key_terms)
        lexicon = load_lexicon(args.lexicon)
        scores = [score_document(d, lexicon, cfg.rules, cfg.key_terms, cfg.kappa,
                                 cfg.negation_mode) for d in docs]
        entries = terms_mod.wordcloud_terms(docs, scores, day_bucket=cfg.day_bucket,
                                            min_count=cfg.min_count, top_n=cfg.top_n)
        _write_json(args.out, [pipeline_mod.term_to_record(t) for t in entries])
        print(f"wrote {len(entries)} term entries to {args.out}")
        return 0

    if args.command == "votes":
        bills = votes_mod.filter_bills(votes_mod.load_bills(args.bills),
                                       cfg.bill_phrases)
        if args.legislator:
            rows = votes_mod.legislator_record(bills, args.legislator)
            _write_json(args.out, [
                {"bill_id": r.bill_id, "title": r.title, "session": r.session,
                 "vote": r.vote} for r in rows
            ])
            print(f"wrote {len(rows)} votes for {args.legislator} to {args.out}")
        else:
            votes_mod.save_bills(bills, args.out)
            print(f"wrote {len(bills)} filtered bills to {args.out}")
        return 0

    if args.command == "all":
        snapshot = pipeline_mod.build_snapshot(cfg, args.input, args.lexicon,
                                               bills_path=args.bills,
                                               built_at=args.built_at)
        pipeline_mod.save_snapshot(snapshot, args.out)
        print(f"wrote snapshot ({snapshot.meta['n_docs']} docs) to {args.out}")
        return 0

    if args.command == "serve":
        snapshot = pipeline_mod.load_snapshot(args.snapshot)
        port = server_mod.resolve_port(args.port)
        server_mod.serve(snapshot, f"{args.host}:{port}", static_dir=args.static_dir)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except SnaplensError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
