"""Stateless HTTP JSON API.

Every puzzle is regenerated from (corpus, seed) on each request, so the
process holds no session state: the corpus snapshot is immutable, the
only mutable resource is the append-only results log, and a client can
replay any request sequence against a fresh process and get identical
bytes. Hint leveling trusts the client-reported mistake count; solved
piece counting trusts solved_so_far the same way (anti-cheat is a
non-goal).

Routes (JSON unless noted):

    GET  /api/v1/stats
    GET  /api/v1/puzzle/{game}?seed=<16 hex>
    GET  /api/v1/puzzle/{game}/daily[?date=YYYY-MM-DD]
    POST /api/v1/guess
    GET  /api/v1/reveal?game=<game>&seed_hex=<16 hex>
    POST /api/v1/result            (204 on success)
    GET  /                         static web client, when built
"""

from __future__ import annotations

import datetime as _dt
import json
import re
import threading
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import HTMLResponse, JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from .authored import authored_view, generate_authored
from .colon import colon_view, generate_colon
from .corpus import Corpus
from .errors import CorpusTooSmall, GenerationExhausted
from .game import reveal, stateless_authored_verdict, stateless_colon_verdict
from .rng import derive_seed, seed_from_hex
from .stats import corpus_stats

GAMES = ("colon", "authored")

_DATE_RE = re.compile(r"^\d{4}-\d{2}-\d{2}$")

_FALLBACK_INDEX = """<!doctype html>
<html><head><title>pubgames</title></head>
<body><h1>pubgames API</h1>
<p>No web client is built. API lives under <code>/api/v1/</code>:
stats, puzzle/{game}?seed=, puzzle/{game}/daily, guess, reveal, result.</p>
</body></html>
"""


class _ApiError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        self.message = message


def _require_game(game: str) -> str:
    if game not in GAMES:
        raise _ApiError(400, f"unknown game {game!r}")
    return game


def _require_seed(seed_hex) -> int:
    if not isinstance(seed_hex, str):
        raise _ApiError(400, "seed must be a string of 16 lowercase hex digits")
    try:
        return seed_from_hex(seed_hex)
    except ValueError as exc:
        raise _ApiError(400, str(exc)) from None


def _generate(corpus: Corpus, game: str, seed: int):
    try:
        if game == "colon":
            return generate_colon(corpus, seed)
        return generate_authored(corpus, seed)
    except CorpusTooSmall as exc:
        raise _ApiError(409, str(exc)) from None
    except GenerationExhausted as exc:
        raise _ApiError(500, str(exc)) from None


def _nonneg_int(payload: dict, key: str, *, required: bool, default=None):
    if key not in payload:
        if required:
            raise _ApiError(400, f"missing field {key!r}")
        return default
    value = payload[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise _ApiError(400, f"{key} must be a non-negative integer")
    return value


def create_app(
    corpus: Corpus | None,
    results_path: str | Path | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    """Build the application around one immutable corpus snapshot.

    corpus=None models a failed load: API calls answer 503. Normal
    deployments fail fast at startup instead (see cli.serve)."""
    app = FastAPI(title="pubgames", docs_url=None, redoc_url=None)
    results_lock = threading.Lock()

    @app.exception_handler(_ApiError)
    def api_error(_request: Request, exc: _ApiError):
        return JSONResponse(status_code=exc.status, content={"detail": exc.message})

    @app.exception_handler(RequestValidationError)
    def malformed_body(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    def require_corpus() -> Corpus:
        if corpus is None:
            raise _ApiError(503, "corpus unavailable")
        return corpus

    @app.get("/api/v1/stats")
    def stats():
        return corpus_stats(require_corpus()).to_jsonable()

    def puzzle_response(game: str, seed: int):
        snapshot = require_corpus()
        puzzle = _generate(snapshot, game, seed)
        if game == "colon":
            return colon_view(puzzle)
        return authored_view(puzzle, snapshot)

    @app.get("/api/v1/puzzle/{game}/daily")
    def daily_puzzle(game: str, date: str | None = None):
        game = _require_game(game)
        if date is None:
            date = _dt.datetime.now(_dt.timezone.utc).date().isoformat()
        if not _DATE_RE.match(date):
            raise _ApiError(400, f"date must be YYYY-MM-DD, got {date!r}")
        try:
            _dt.date.fromisoformat(date)
        except ValueError as exc:
            raise _ApiError(400, str(exc)) from None
        return puzzle_response(game, derive_seed(f"{game}:{date}"))

    @app.get("/api/v1/puzzle/{game}")
    def seeded_puzzle(game: str, seed: str | None = None):
        game = _require_game(game)
        if seed is None:
            raise _ApiError(400, "missing seed query parameter")
        return puzzle_response(game, _require_seed(seed))

    @app.post("/api/v1/guess")
    def guess(payload: dict):
        game = _require_game(payload.get("game"))
        seed = _require_seed(payload.get("seed_hex"))
        mistakes_so_far = _nonneg_int(payload, "mistakes_so_far", required=True)
        solved_so_far = _nonneg_int(payload, "solved_so_far", required=False, default=0)
        snapshot = require_corpus()
        puzzle = _generate(snapshot, game, seed)

        if game == "colon":
            if "prefix_item" not in payload or "suffix_display_slot" not in payload:
                raise _ApiError(400, "colon guess needs prefix_item and suffix_display_slot")
            verdict = stateless_colon_verdict(
                puzzle, payload["prefix_item"], payload["suffix_display_slot"],
                mistakes_so_far, solved_so_far,
            )
        else:
            if "cells" not in payload or not isinstance(payload["cells"], list):
                raise _ApiError(400, "authored guess needs a cells array")
            verdict = stateless_authored_verdict(
                puzzle, snapshot, payload["cells"], mistakes_so_far, solved_so_far,
            )

        status = 422 if verdict.kind == "Rejected" else 200
        return JSONResponse(status_code=status, content=verdict.to_jsonable())

    @app.get("/api/v1/reveal")
    def reveal_endpoint(game: str | None = None, seed_hex: str | None = None):
        if game is None or seed_hex is None:
            raise _ApiError(400, "reveal needs game and seed_hex query parameters")
        game = _require_game(game)
        seed = _require_seed(seed_hex)
        snapshot = require_corpus()
        return reveal(_generate(snapshot, game, seed), snapshot)

    @app.post("/api/v1/result")
    def record_result(payload: dict):
        if results_path is None:
            raise _ApiError(503, "results log not configured")
        allowed = {"game", "seed_hex", "mistakes", "duration_ms"}
        unknown = set(payload) - allowed
        if unknown:
            raise _ApiError(400, f"unknown fields: {sorted(unknown)}")
        record = {
            "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(),
            "game": _require_game(payload.get("game")),
            "seed_hex": payload.get("seed_hex"),
            "mistakes": _nonneg_int(payload, "mistakes", required=True),
        }
        _require_seed(record["seed_hex"])
        duration = _nonneg_int(payload, "duration_ms", required=False)
        if duration is not None:
            record["duration_ms"] = duration
        line = json.dumps(record, ensure_ascii=False) + "\n"
        try:
            with results_lock:
                with open(results_path, "a", encoding="utf-8") as fh:
                    fh.write(line)
                    fh.flush()
        except OSError as exc:
            raise _ApiError(500, f"results log write failed: {exc}") from None
        return Response(status_code=204)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="client")
    else:
        @app.get("/", response_class=HTMLResponse)
        def index():
            return _FALLBACK_INDEX

    return app
