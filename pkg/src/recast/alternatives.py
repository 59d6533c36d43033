"""Alternative-wording generation for single tokens and contiguous spans.

Candidates come from the union of embedding nearest neighbors and
masked-LM fill-ins (plus deletion for single tokens), then pass two
safety filters: the candidate on its own must score below the
admission cutoff, and applying it must strictly lower the whole-text
toxicity. Survivors are ranked by the resulting toxicity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .backend import BackendContract, fold
from .errors import SpanTooLong
from .explanation import Thresholds
from .textcore import Document, Span, apply_replacement

MAX_SPAN_TOKENS = 5

SOURCE_EMBEDDING = "embedding"
SOURCE_MASKED_LM = "masked_lm"
SOURCE_BOTH = "both"
SOURCE_DELETION = "deletion"


@dataclass(frozen=True)
class Candidate:
    replacement: str
    individual_toxicity: float
    resulting_toxicity: float
    source: str


@dataclass(frozen=True)
class SuggestionSet:
    span: Span
    original_toxicity: float
    candidates: tuple[Candidate, ...]


def _filter_and_rank(
    doc: Document,
    span: Span,
    pool: dict[str, str],
    original: float,
    backend: BackendContract,
    thresholds: Thresholds,
) -> SuggestionSet:
    """Apply the admission and improvement filters, then rank ascending by
    resulting toxicity with lexicographic tie-break."""
    kept = []
    for replacement, source in pool.items():
        individual = backend.score(replacement)
        if individual >= thresholds.alt_toxicity_max:
            continue
        resulting = backend.score(apply_replacement(doc, span, replacement).raw)
        if resulting >= original:
            continue
        kept.append(Candidate(replacement, individual, resulting, source))
    kept.sort(key=lambda c: (c.resulting_toxicity, c.replacement))
    return SuggestionSet(span=span, original_toxicity=original, candidates=tuple(kept))


def generate_alternatives(
    doc: Document,
    token_index: int,
    backend: BackendContract,
    thresholds: Thresholds = Thresholds(),
) -> SuggestionSet:
    """Ranked lower-toxicity replacements for one token (deletion included)."""
    span = Span(token_index, token_index + 1)
    doc.validate_span(span)
    word = doc.tokens[token_index].text

    neighbors = backend.nearest_neighbors(word, thresholds.knn)
    fills = [r for r, _ in backend.mask_fill(doc, span, thresholds.mlm_topk)]

    pool: dict[str, str] = {}
    for c in neighbors:
        pool[c] = SOURCE_EMBEDDING
    for c in fills:
        pool[c] = SOURCE_BOTH if c in pool else SOURCE_MASKED_LM
    pool[""] = SOURCE_DELETION
    pool = {c: s for c, s in pool.items() if fold(c) != fold(word) or c == ""}

    original = backend.score(doc.raw)
    return _filter_and_rank(doc, span, pool, original, backend, thresholds)


def generate_span_alternatives(
    doc: Document,
    span: Span,
    backend: BackendContract,
    thresholds: Thresholds = Thresholds(),
) -> SuggestionSet:
    """Ranked multi-word replacements for a contiguous span.

    Tuples come from the joint masked distribution over the span, plus
    tuples assembled from per-position embedding neighbors when the
    backend can score arbitrary fill-ins (``joint_fill_score``); the
    embedding tuples admitted are the top ``mlm_topk`` by that score.
    Single-token spans delegate to the single-word path.
    """
    doc.validate_span(span)
    if len(span) == 1:
        return generate_alternatives(doc, span.start_token, backend, thresholds)
    if len(span) > MAX_SPAN_TOKENS:
        raise SpanTooLong(f"span length {len(span)} exceeds {MAX_SPAN_TOKENS}")

    original_joined = fold(" ".join(doc.tokens[i].text for i in range(span.start_token, span.end_token)))

    pool: dict[str, str] = {}

    scorer = getattr(backend, "joint_fill_score", None)
    if scorer is not None:
        per_position = []
        for i in range(span.start_token, span.end_token):
            word = doc.tokens[i].text
            per_position.append(backend.nearest_neighbors(word, thresholds.knn) + [fold(word)])
        ranked = sorted(
            (-scorer(doc, span, combo), " ".join(combo))
            for combo in itertools.product(*per_position)
        )
        for _, text in ranked[: thresholds.mlm_topk]:
            pool[text] = SOURCE_EMBEDDING

    for text, _ in backend.mask_fill(doc, span, thresholds.mlm_topk):
        pool[text] = SOURCE_BOTH if text in pool else SOURCE_MASKED_LM

    pool = {c: s for c, s in pool.items() if fold(c) != original_joined}

    original = backend.score(doc.raw)
    return _filter_and_rank(doc, span, pool, original, backend, thresholds)


def is_highlighted(
    doc: Document,
    token_index: int,
    backend: BackendContract,
    thresholds: Thresholds = Thresholds(),
) -> bool:
    """True when the token's attention clears the cutoff and at least one
    admissible alternative exists."""
    span = Span(token_index, token_index + 1)
    doc.validate_span(span)
    attention = backend.token_attention(doc)[token_index]
    if attention <= thresholds.attn_cutoff:
        return False
    return bool(generate_alternatives(doc, token_index, backend, thresholds).candidates)
