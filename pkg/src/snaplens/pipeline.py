"""End-to-end orchestration: one config object, one immutable snapshot.

``build_snapshot`` runs ingest -> relevance filter -> sentiment scoring
-> time series -> hex grid hot spots -> weighted terms -> bill filter
and materializes everything the read-only API serves.  Rebuilding with
identical inputs, config and seeds reproduces the export byte for byte
(pass ``built_at`` to pin the timestamp).
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, replace
from datetime import date, datetime, timezone
from typing import Optional, Sequence

from . import corpus as corpus_mod
from . import geo as geo_mod
from . import terms as terms_mod
from . import votes as votes_mod
from .corpus import DEFAULT_KEY_TERMS
from .errors import PipelineError, SnaplensError
from .sentiment import (DEFAULT_RULES, DocumentScore, RuleConfig, TimePoint,
                        corpus_timeseries, load_lexicon, score_document)

MAP_METRICS = ("compound", "word_sum")

# Continental U.S. extent used when no bbox is configured.
DEFAULT_BBOX = (-125.0, 24.0, -66.0, 50.0)


@dataclass(frozen=True)
class PipelineConfig:
    rules: RuleConfig = DEFAULT_RULES
    key_terms: tuple[str, ...] = DEFAULT_KEY_TERMS
    kappa: float = 2.0
    negation_mode: bool = False
    weighted_timeseries: bool = True
    weighted_map: bool = True
    bbox: tuple[float, float, float, float] = DEFAULT_BBOX
    cell_size: float = 1.0
    map_metric: str = "compound"
    min_count: int = 3
    top_n: int = 50
    day_bucket: bool = True
    lda_topics: int = 10
    lda_iterations: int = 500
    lda_alpha: Optional[float] = None
    lda_beta: float = 0.01
    seed: int = 13
    bill_phrases: tuple[str, ...] = votes_mod.DEFAULT_BILL_PHRASES

    def __post_init__(self):
        if self.map_metric not in MAP_METRICS:
            raise ValueError(f"map_metric must be one of {MAP_METRICS}")


DEFAULT_CONFIG = PipelineConfig()

_RULE_FLOAT_KEYS = {"alpha", "booster_delta", "negation_scalar", "caps_delta",
                    "exclaim_delta", "but_weight_before", "but_weight_after"}
_RULE_SET_KEYS = {"booster_terms", "dampener_terms", "negation_cues"}
_FLOAT_KEYS = {"kappa", "cell_size", "lda_alpha", "lda_beta"}
_INT_KEYS = {"min_count", "top_n", "lda_topics", "lda_iterations", "seed"}
_BOOL_KEYS = {"negation_mode", "weighted_timeseries", "weighted_map", "day_bucket"}
_LIST_KEYS = {"key_terms", "bill_phrases"}


def _parse_bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("true", "yes", "on", "1"):
        return True
    if lowered in ("false", "no", "off", "0"):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def load_config(path) -> PipelineConfig:
    """Parse a plain-text ``key = value`` config file.

    Lists are comma-separated; '#' starts a comment; unknown keys are
    ignored with a warning.
    """
    rule_kwargs: dict = {}
    kwargs: dict = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            if "=" not in text:
                raise ValueError(f"{path}:{line_no}: expected 'key = value'")
            key, value = (part.strip() for part in text.split("=", 1))
            key = key.lower()
            try:
                if key in _RULE_FLOAT_KEYS:
                    rule_kwargs[key] = float(value)
                elif key == "negation_window":
                    rule_kwargs[key] = int(value)
                elif key in _RULE_SET_KEYS:
                    rule_kwargs[key] = frozenset(
                        t.strip().lower() for t in value.split(",") if t.strip())
                elif key in _FLOAT_KEYS:
                    kwargs[key] = float(value)
                elif key in _INT_KEYS:
                    kwargs[key] = int(value)
                elif key in _BOOL_KEYS:
                    kwargs[key] = _parse_bool(value)
                elif key in _LIST_KEYS:
                    kwargs[key] = tuple(
                        t.strip().lower() for t in value.split(",") if t.strip())
                elif key == "bbox":
                    parts = [float(t) for t in value.split(",")]
                    if len(parts) != 4:
                        raise ValueError("bbox needs 4 comma-separated numbers")
                    kwargs[key] = tuple(parts)
                elif key == "map_metric":
                    kwargs[key] = value.strip().lower()
                else:
                    warnings.warn(f"{path}:{line_no}: ignoring unknown config key {key!r}")
            except ValueError as exc:
                raise ValueError(f"{path}:{line_no}: {exc}") from exc
    if rule_kwargs:
        kwargs["rules"] = replace(DEFAULT_RULES, **rule_kwargs)
    return replace(DEFAULT_CONFIG, **kwargs)


def config_to_dict(config: PipelineConfig) -> dict:
    rules = config.rules
    return {
        "rules": {
            "alpha": rules.alpha,
            "booster_delta": rules.booster_delta,
            "negation_scalar": rules.negation_scalar,
            "negation_window": rules.negation_window,
            "caps_delta": rules.caps_delta,
            "exclaim_delta": rules.exclaim_delta,
            "but_weight_before": rules.but_weight_before,
            "but_weight_after": rules.but_weight_after,
            "booster_terms": sorted(rules.booster_terms),
            "dampener_terms": sorted(rules.dampener_terms),
            "negation_cues": sorted(rules.negation_cues),
        },
        "key_terms": list(config.key_terms),
        "kappa": config.kappa,
        "negation_mode": config.negation_mode,
        "weighted_timeseries": config.weighted_timeseries,
        "weighted_map": config.weighted_map,
        "bbox": list(config.bbox),
        "cell_size": config.cell_size,
        "map_metric": config.map_metric,
        "min_count": config.min_count,
        "top_n": config.top_n,
        "day_bucket": config.day_bucket,
        "lda_topics": config.lda_topics,
        "lda_iterations": config.lda_iterations,
        "lda_alpha": config.lda_alpha,
        "lda_beta": config.lda_beta,
        "seed": config.seed,
        "bill_phrases": list(config.bill_phrases),
    }


def config_from_dict(payload: dict) -> PipelineConfig:
    rules_payload = dict(payload["rules"])
    for key in ("booster_terms", "dampener_terms", "negation_cues"):
        rules_payload[key] = frozenset(rules_payload[key])
    return PipelineConfig(
        rules=RuleConfig(**rules_payload),
        key_terms=tuple(payload["key_terms"]),
        kappa=payload["kappa"],
        negation_mode=payload["negation_mode"],
        weighted_timeseries=payload["weighted_timeseries"],
        weighted_map=payload["weighted_map"],
        bbox=tuple(payload["bbox"]),
        cell_size=payload["cell_size"],
        map_metric=payload["map_metric"],
        min_count=payload["min_count"],
        top_n=payload["top_n"],
        day_bucket=payload["day_bucket"],
        lda_topics=payload["lda_topics"],
        lda_iterations=payload["lda_iterations"],
        lda_alpha=payload["lda_alpha"],
        lda_beta=payload["lda_beta"],
        seed=payload["seed"],
        bill_phrases=tuple(payload["bill_phrases"]),
    )


@dataclass(frozen=True)
class DocMeta:
    kind: str
    source: str
    geotag: Optional[tuple[float, float]]  # (lat, lon)


@dataclass
class Snapshot:
    built_at: datetime
    config: PipelineConfig
    meta: dict
    docs_meta: dict[str, DocMeta]
    doc_scores: list[DocumentScore]
    timeseries: list[TimePoint]
    map_geojson: dict
    skipped_points: int
    terms: list[terms_mod.TermEntry]
    bills: list[votes_mod.Bill]


def effective_scores(scores: Sequence[DocumentScore],
                     weighted: bool) -> list[DocumentScore]:
    """Scores as aggregation inputs; unit doc weights when unweighted."""
    if weighted:
        return list(scores)
    return [replace(s, doc_weight=1.0) for s in scores]


def compute_timeseries(scores: Sequence[DocumentScore],
                       from_day: Optional[date] = None,
                       to_day: Optional[date] = None,
                       weighted: bool = True) -> list[TimePoint]:
    """Time series over [from, to], defaulting to the full score range.

    An explicitly inverted range is an error; a one-sided bound beyond
    the data simply selects nothing.
    """
    if from_day is not None and to_day is not None:
        return corpus_timeseries(effective_scores(scores, weighted), from_day, to_day)
    if not scores:
        return []
    days = [s.day for s in scores]
    from_day = min(days) if from_day is None else from_day
    to_day = max(days) if to_day is None else to_day
    if from_day > to_day:
        return []
    return corpus_timeseries(effective_scores(scores, weighted), from_day, to_day)


def compute_map_grid(config: PipelineConfig,
                     docs_meta: dict[str, DocMeta],
                     scores: Sequence[DocumentScore],
                     metric: Optional[str] = None,
                     from_day: Optional[date] = None,
                     to_day: Optional[date] = None,
                     require_data: bool = False) -> geo_mod.HexGrid:
    """Hex grid joined, scored with Gi* and classified.

    The hot-spot statistic is skipped (cells stay unclassified beyond
    ns/empty) when fewer than two cells hold data, unless
    ``require_data`` insists and the TooFewCells error propagates.
    """
    metric = metric or config.map_metric
    if metric not in MAP_METRICS:
        raise ValueError(f"metric must be one of {MAP_METRICS}")
    grid = geo_mod.make_hex_grid(config.bbox, config.cell_size)
    pairs = []
    weights = []
    for score in scores:
        if from_day is not None and score.day < from_day:
            continue
        if to_day is not None and score.day > to_day:
            continue
        meta = docs_meta.get(score.doc_id)
        if meta is None or meta.geotag is None:
            continue
        value = score.compound_avg if metric == "compound" else score.word_sum_avg
        pairs.append((meta.geotag, value))
        weights.append(score.doc_weight)
    geo_mod.spatial_join(grid, pairs, weights if config.weighted_map else None)
    if require_data or len(grid.data_cells()) >= 2:
        geo_mod.gi_star(grid)
    return geo_mod.classify_hotspots(grid)


def _stage(stage: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except SnaplensError as exc:
        raise PipelineError(stage, str(exc)) from exc


def build_snapshot(config: PipelineConfig, corpus_path, lexicon_path,
                   bills_path=None,
                   built_at: Optional[datetime] = None) -> Snapshot:
    """Run the full pipeline over file inputs and freeze the results."""
    if built_at is None:
        built_at = datetime.now(timezone.utc)

    docs = _stage("ingest", corpus_mod.load_documents, corpus_path)
    relevant = _stage("filter", corpus_mod.filter_relevant, docs, config.key_terms)
    lexicon = _stage("lexicon", load_lexicon, lexicon_path)

    scores = []
    for doc in relevant:
        scores.append(_stage(f"score doc {doc.id!r}", score_document, doc, lexicon,
                             config.rules, config.key_terms, config.kappa,
                             config.negation_mode))

    docs_meta = {
        doc.id: DocMeta(kind=doc.kind, source=doc.source,
                        geotag=tuple(doc.geotag) if doc.geotag else None)
        for doc in relevant
    }

    timeseries = _stage("timeseries", compute_timeseries, scores,
                        weighted=config.weighted_timeseries)
    grid = _stage("hotspots", compute_map_grid, config, docs_meta, scores)
    term_entries = _stage("terms", terms_mod.wordcloud_terms, relevant, scores,
                          day_bucket=config.day_bucket,
                          min_count=config.min_count, top_n=config.top_n)

    bills: list[votes_mod.Bill] = []
    if bills_path is not None:
        raw_bills = _stage("bills", votes_mod.load_bills, bills_path)
        bills = _stage("bills", votes_mod.filter_bills, raw_bills, config.bill_phrases)

    by_kind: dict[str, int] = {}
    by_outlet: dict[str, int] = {}
    for doc in relevant:
        by_kind[doc.kind] = by_kind.get(doc.kind, 0) + 1
        by_outlet[doc.source] = by_outlet.get(doc.source, 0) + 1
    days = sorted(s.day for s in scores)
    meta = {
        "n_ingested": len(docs),
        "n_docs": len(relevant),
        "by_kind": dict(sorted(by_kind.items())),
        "by_outlet": dict(sorted(by_outlet.items())),
        "date_from": days[0].isoformat() if days else None,
        "date_to": days[-1].isoformat() if days else None,
    }

    return Snapshot(
        built_at=built_at,
        config=config,
        meta=meta,
        docs_meta=docs_meta,
        doc_scores=scores,
        timeseries=timeseries,
        map_geojson=geo_mod.grid_to_geojson(grid),
        skipped_points=grid.skipped_points,
        terms=term_entries,
        bills=bills,
    )


def timepoint_to_record(point: TimePoint) -> dict:
    return {
        "day": point.day.isoformat(),
        "avg_word_sum": point.avg_word_sum,
        "avg_compound": point.avg_compound,
        "n_docs": point.n_docs,
    }


def score_to_record(score: DocumentScore) -> dict:
    return {
        "doc_id": score.doc_id,
        "word_sum_avg": score.word_sum_avg,
        "compound_avg": score.compound_avg,
        "doc_weight": score.doc_weight,
        "published_at": score.published_at.isoformat(),
    }


def score_from_record(record: dict) -> DocumentScore:
    return DocumentScore(
        doc_id=record["doc_id"],
        word_sum_avg=record["word_sum_avg"],
        compound_avg=record["compound_avg"],
        doc_weight=record["doc_weight"],
        published_at=corpus_mod.parse_timestamp(record["published_at"]),
    )


def term_to_record(entry: terms_mod.TermEntry) -> dict:
    return {
        "term": entry.term,
        "score": entry.score,
        "day": entry.day.isoformat() if entry.day else None,
        "origin": entry.origin,
    }


def snapshot_to_json(snapshot: Snapshot) -> str:
    payload = {
        "built_at": snapshot.built_at.isoformat(),
        "config": config_to_dict(snapshot.config),
        "meta": snapshot.meta,
        "docs_meta": {
            doc_id: {
                "kind": m.kind,
                "source": m.source,
                "lat": m.geotag[0] if m.geotag else None,
                "lon": m.geotag[1] if m.geotag else None,
            }
            for doc_id, m in snapshot.docs_meta.items()
        },
        "doc_scores": [score_to_record(s) for s in snapshot.doc_scores],
        "timeseries": [timepoint_to_record(p) for p in snapshot.timeseries],
        "map": snapshot.map_geojson,
        "skipped_points": snapshot.skipped_points,
        "terms": [term_to_record(t) for t in snapshot.terms],
        "bills": [votes_mod.bill_to_record(b) for b in snapshot.bills],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def save_snapshot(snapshot: Snapshot, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(snapshot_to_json(snapshot))
        fh.write("\n")


def snapshot_from_json(text: str) -> Snapshot:
    payload = json.loads(text)
    docs_meta = {}
    for doc_id, m in payload["docs_meta"].items():
        geotag = (m["lat"], m["lon"]) if m["lat"] is not None else None
        docs_meta[doc_id] = DocMeta(kind=m["kind"], source=m["source"], geotag=geotag)
    timeseries = [
        TimePoint(day=date.fromisoformat(p["day"]), avg_word_sum=p["avg_word_sum"],
                  avg_compound=p["avg_compound"], n_docs=p["n_docs"])
        for p in payload["timeseries"]
    ]
    term_entries = [
        terms_mod.TermEntry(
            term=t["term"], score=t["score"],
            day=date.fromisoformat(t["day"]) if t["day"] else None,
            origin=t["origin"])
        for t in payload["terms"]
    ]
    return Snapshot(
        built_at=corpus_mod.parse_timestamp(payload["built_at"]),
        config=config_from_dict(payload["config"]),
        meta=payload["meta"],
        docs_meta=docs_meta,
        doc_scores=[score_from_record(s) for s in payload["doc_scores"]],
        timeseries=timeseries,
        map_geojson=payload["map"],
        skipped_points=payload["skipped_points"],
        terms=term_entries,
        bills=[votes_mod.bill_from_record(b) for b in payload["bills"]],
    )


def load_snapshot(path) -> Snapshot:
    with open(path, encoding="utf-8") as fh:
        return snapshot_from_json(fh.read())
