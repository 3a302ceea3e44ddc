"""Read-only HTTP API over a built snapshot.

Every response is a pure function of (snapshot, query): the snapshot is
immutable after startup and query filters re-aggregate from the stored
document scores, so identical requests always produce identical bodies.
"""

from __future__ import annotations

import os
from datetime import date
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import pipeline as pipeline_mod
from .errors import BindFailure, UnknownLegislator
from .geo import grid_to_geojson
from .pipeline import MAP_METRICS, Snapshot
from .votes import legislator_record

ENV_PORT = "PORT"
ENV_UI_ORIGIN = "SNAPLENS_UI_ORIGIN"


def create_app(snapshot: Snapshot, static_dir: Optional[str] = None) -> FastAPI:
    """FastAPI application serving the snapshot (and, optionally, the
    built explorer UI as static files)."""
    app = FastAPI(title="snaplens", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[os.environ.get(ENV_UI_ORIGIN, "*")],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    config = snapshot.config

    @app.get("/api/meta")
    def meta():
        return {
            "built_at": snapshot.built_at.isoformat(),
            "skipped_points": snapshot.skipped_points,
            **snapshot.meta,
        }

    @app.get("/api/timeseries")
    def timeseries(
        from_: Optional[date] = Query(default=None, alias="from"),
        to: Optional[date] = Query(default=None),
        outlet: Optional[str] = Query(default=None),
        kind: Optional[str] = Query(default=None),
    ):
        if from_ is not None and to is not None and from_ > to:
            raise HTTPException(status_code=422, detail="'from' is after 'to'")
        if kind is not None and kind not in ("article", "tweet"):
            raise HTTPException(status_code=422, detail="kind must be article or tweet")
        scores = snapshot.doc_scores
        if outlet is not None or kind is not None:
            scores = [
                s for s in scores
                if (meta := snapshot.docs_meta.get(s.doc_id)) is not None
                and (outlet is None or meta.source == outlet)
                and (kind is None or meta.kind == kind)
            ]
        if from_ is None and to is None and outlet is None and kind is None:
            points = snapshot.timeseries
        else:
            points = pipeline_mod.compute_timeseries(
                scores, from_day=from_, to_day=to,
                weighted=config.weighted_timeseries)
        return [pipeline_mod.timepoint_to_record(p) for p in points]

    @app.get("/api/map")
    def hotspot_map(
        metric: Optional[str] = Query(default=None),
        from_: Optional[date] = Query(default=None, alias="from"),
        to: Optional[date] = Query(default=None),
    ):
        if metric is not None and metric not in MAP_METRICS:
            raise HTTPException(status_code=422,
                                detail=f"metric must be one of {MAP_METRICS}")
        if from_ is not None and to is not None and from_ > to:
            raise HTTPException(status_code=422, detail="'from' is after 'to'")
        if (metric is None or metric == config.map_metric) \
                and from_ is None and to is None:
            return snapshot.map_geojson
        grid = pipeline_mod.compute_map_grid(
            config, snapshot.docs_meta, snapshot.doc_scores,
            metric=metric, from_day=from_, to_day=to)
        return grid_to_geojson(grid)

    @app.get("/api/terms")
    def terms(
        day: Optional[date] = Query(default=None),
        limit: int = Query(default=100, ge=1),
    ):
        entries = snapshot.terms
        if day is not None:
            entries = [t for t in entries if t.day == day]
        return [pipeline_mod.term_to_record(t) for t in entries[:limit]]

    @app.get("/api/legislators")
    def legislators():
        seen: dict[str, dict] = {}
        for bill in snapshot.bills:
            for vote in bill.votes:
                entry = seen.setdefault(vote.legislator_id, {
                    "id": vote.legislator_id,
                    "name": vote.name,
                    "chamber": vote.chamber,
                    "n_votes": 0,
                })
                entry["n_votes"] += 1
        return sorted(seen.values(), key=lambda e: e["id"])

    @app.get("/api/legislators/{legislator_id}/votes")
    def legislator_votes(legislator_id: str):
        try:
            rows = legislator_record(snapshot.bills, legislator_id)
        except UnknownLegislator as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        return [
            {"bill_id": r.bill_id, "title": r.title, "session": r.session,
             "vote": r.vote}
            for r in rows
        ]

    @app.exception_handler(404)
    def not_found(request, exc):
        detail = getattr(exc, "detail", "not found")
        return JSONResponse(status_code=404, content={"detail": detail})

    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def resolve_port(explicit: Optional[int] = None, default: int = 8000) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_PORT)
    return int(env) if env else default


def serve(snapshot: Snapshot, bind_address: str = "127.0.0.1:8000",
          static_dir: Optional[str] = None) -> None:
    """Run the API with uvicorn until interrupted."""
    import uvicorn

    host, _, port_text = bind_address.partition(":")
    port = resolve_port(int(port_text) if port_text else None)
    app = create_app(snapshot, static_dir=static_dir)
    try:
        uvicorn.run(app, host=host or "127.0.0.1", port=port, log_level="info")
    except OSError as exc:
        raise BindFailure(f"could not bind {bind_address}: {exc}") from exc
