"""HTTP service exposing scoring, explanation, alternatives, and feedback."""

from __future__ import annotations

from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .alternatives import generate_span_alternatives, is_highlighted
from .backend import EmbeddingTable, Lexicon, NgramModel, ReferenceBackend
from .errors import InputTooLarge, SpanOutOfBounds, SpanTooLong
from .explanation import Thresholds, score_span
from .feedback import FeedbackLog
from .textcore import MAX_INPUT_BYTES, Span, tokenize

MAX_COMMENT_BYTES = 5_000


@dataclass
class ServiceConfig:
    lexicon: str
    embeddings: str
    corpus: str
    feedback_log: str = "feedback.jsonl"
    port: int = 8080
    thresholds: Thresholds = field(default_factory=Thresholds)
    cors_origins: list[str] = field(default_factory=lambda: ["*"])


class ScoreRequest(BaseModel):
    text: str


class SpanBody(BaseModel):
    start_token: int
    end_token: int


class SpanRequest(BaseModel):
    text: str
    span: SpanBody


class FeedbackRequest(BaseModel):
    text: str = ""
    comment: str


def _round3(x: float) -> float:
    return round(x, 3)


def load_backend(config: ServiceConfig) -> ReferenceBackend:
    return ReferenceBackend(
        lexicon=Lexicon.load(config.lexicon),
        embeddings=EmbeddingTable.load(config.embeddings),
        ngram=NgramModel.load(config.corpus),
    )


def create_app(config: ServiceConfig, backend=None) -> FastAPI:
    """Build the service app; the backend is loaded once at startup and
    shared read-only across request handlers."""
    app = FastAPI(title="recast")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=config.cors_origins,
        allow_methods=["*"],
        allow_headers=["*"],
    )
    thresholds = config.thresholds
    feedback = FeedbackLog(config.feedback_log)
    app.state.backend = backend if backend is not None else load_backend(config)

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    def _tokenize_or_413(text: str):
        if len(text.encode("utf-8")) > MAX_INPUT_BYTES:
            raise InputTooLarge
        return tokenize(text)

    @app.post("/api/score")
    def api_score(body: ScoreRequest):
        try:
            doc = _tokenize_or_413(body.text)
        except InputTooLarge:
            return JSONResponse(status_code=413, content={"detail": "input too large"})
        b = app.state.backend
        attention = b.token_attention(doc)
        tokens = []
        for token, attn in zip(doc.tokens, attention):
            highlighted = attn > thresholds.attn_cutoff and is_highlighted(
                doc, token.index, b, thresholds
            )
            tokens.append(
                {
                    "text": token.text,
                    "byte_start": token.byte_start,
                    "byte_end": token.byte_end,
                    "attention": _round3(attn),
                    "highlighted": highlighted,
                }
            )
        # plain JSONResponse skips FastAPI's per-field encoder; token lists
        # can run to thousands of entries at the input size limit
        return JSONResponse(
            content={"score_0_100": _round3(100 * b.score(body.text)), "tokens": tokens}
        )

    @app.post("/api/alternatives")
    def api_alternatives(body: SpanRequest):
        try:
            doc = _tokenize_or_413(body.text)
        except InputTooLarge:
            return JSONResponse(status_code=413, content={"detail": "input too large"})
        span = Span(body.span.start_token, body.span.end_token)
        b = app.state.backend
        try:
            suggestions = generate_span_alternatives(doc, span, b, thresholds)
        except (SpanOutOfBounds, SpanTooLong) as exc:
            return JSONResponse(status_code=422, content={"detail": str(exc) or "invalid span"})
        return {
            "span": {"start_token": span.start_token, "end_token": span.end_token},
            "original_toxicity": _round3(100 * suggestions.original_toxicity),
            "candidates": [
                {
                    "replacement": c.replacement,
                    "individual_toxicity": _round3(100 * c.individual_toxicity),
                    "resulting_toxicity": _round3(100 * c.resulting_toxicity),
                    "source": c.source,
                }
                for c in suggestions.candidates
            ],
        }

    @app.post("/api/score-span")
    def api_score_span(body: SpanRequest):
        try:
            doc = _tokenize_or_413(body.text)
        except InputTooLarge:
            return JSONResponse(status_code=413, content={"detail": "input too large"})
        span = Span(body.span.start_token, body.span.end_token)
        try:
            score = score_span(doc, span, app.state.backend)
        except SpanOutOfBounds as exc:
            return JSONResponse(status_code=422, content={"detail": str(exc) or "invalid span"})
        return {"score_0_100": _round3(100 * score)}

    @app.post("/api/feedback")
    def api_feedback(body: FeedbackRequest):
        if not body.comment.strip():
            return JSONResponse(status_code=422, content={"detail": "comment must be nonempty"})
        if len(body.comment.encode("utf-8")) > MAX_COMMENT_BYTES:
            return JSONResponse(status_code=422, content={"detail": "comment too large"})
        score = _round3(100 * app.state.backend.score(body.text))
        try:
            feedback.append(body.text, body.comment, score)
        except OSError:
            return JSONResponse(status_code=500, content={"detail": "feedback log unwritable"})
        return {"accepted": True}

    @app.get("/api/health")
    def api_health():
        b = app.state.backend
        if b is None:
            return JSONResponse(status_code=503, content={"status": "loading"})
        return {"status": "ok", "backend": b.name, "vocab_sizes": b.vocab_sizes()}

    return app
