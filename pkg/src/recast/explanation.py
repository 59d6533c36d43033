"""Token flagging, explanation-method agreement, and cutoff calibration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .backend import BackendContract
from .errors import EmptyDistribution
from .textcore import Document, Span


@dataclass(frozen=True)
class Thresholds:
    """Pipeline cutoffs: attention flagging, candidate-toxicity admission,
    neighbor count, and mask-fill pool size."""

    attn_cutoff: float = 0.2
    alt_toxicity_max: float = 0.4
    knn: int = 10
    mlm_topk: int = 20

    def __post_init__(self) -> None:
        if not 0 < self.attn_cutoff < 1:
            raise ValueError("attn_cutoff must be in (0, 1)")
        if not 0 < self.alt_toxicity_max < 1:
            raise ValueError("alt_toxicity_max must be in (0, 1)")
        if self.knn < 1 or self.mlm_topk < 1:
            raise ValueError("knn and mlm_topk must be >= 1")


@dataclass(frozen=True)
class CalibrationResult:
    source_cutoff: float
    source_percentile: float
    mapped_cutoff: float


def flag_tokens(attention: Sequence[float], cutoff: float) -> set[int]:
    """Indices whose attention weight is strictly greater than the cutoff."""
    return {i for i, a in enumerate(attention) if a > cutoff}


def overlap(x: set, y: set) -> float:
    """|X ∩ Y| / min(|X|, |Y|); 0 when either set is empty."""
    if not x or not y:
        return 0.0
    return len(x & y) / min(len(x), len(y))


def calibrate_cutoff(
    source_samples: Sequence[float],
    target_samples: Sequence[float],
    source_cutoff: float,
) -> CalibrationResult:
    """Map a cutoff from one score distribution to another by matching
    empirical percentiles, using the nearest-rank quantile of the target."""
    if not source_samples or not target_samples:
        raise EmptyDistribution("calibration requires nonempty sample lists")
    p = sum(1 for s in source_samples if s <= source_cutoff) / len(source_samples)
    ordered = sorted(target_samples)
    rank = max(0, math.ceil(p * len(ordered)) - 1)
    return CalibrationResult(
        source_cutoff=source_cutoff,
        source_percentile=p,
        mapped_cutoff=ordered[rank],
    )


def score_span(doc: Document, span: Span, backend: BackendContract) -> float:
    """Toxicity of the span's raw substring scored as standalone text."""
    return backend.score(doc.span_text(span))
