"""Toxicity interrogation engine: scoring, per-token attribution, and
ranked alternative wordings, plus the statistics harness and HTTP service."""

from .alternatives import (
    Candidate,
    SuggestionSet,
    generate_alternatives,
    generate_span_alternatives,
    is_highlighted,
)
from .backend import (
    BackendContract,
    EmbeddingTable,
    Lexicon,
    NgramModel,
    ReferenceBackend,
)
from .errors import (
    EmptyDistribution,
    EmptySample,
    InputTooLarge,
    RecastError,
    SpanOutOfBounds,
    SpanTooLong,
    UndefinedCorrelation,
)
from .explanation import (
    CalibrationResult,
    Thresholds,
    calibrate_cutoff,
    flag_tokens,
    overlap,
    score_span,
)
from .stats import (
    ExplainerReport,
    PairedSample,
    TauResult,
    binomial_ci,
    compare_explainers,
    kendall_tau_b,
)
from .textcore import Document, Span, Token, apply_replacement, tokenize

__all__ = [
    "BackendContract",
    "CalibrationResult",
    "Candidate",
    "Document",
    "EmbeddingTable",
    "EmptyDistribution",
    "EmptySample",
    "ExplainerReport",
    "InputTooLarge",
    "Lexicon",
    "NgramModel",
    "PairedSample",
    "RecastError",
    "ReferenceBackend",
    "Span",
    "SpanOutOfBounds",
    "SpanTooLong",
    "SuggestionSet",
    "TauResult",
    "Thresholds",
    "Token",
    "UndefinedCorrelation",
    "apply_replacement",
    "binomial_ci",
    "calibrate_cutoff",
    "compare_explainers",
    "flag_tokens",
    "generate_alternatives",
    "generate_span_alternatives",
    "is_highlighted",
    "kendall_tau_b",
    "overlap",
    "score_span",
    "tokenize",
]
