"""Pluggable model backend: scoring, token relevance, and mask-fill.

The contract is model-agnostic; any backend exposing these operations can
drive the explanation and alternative-wording pipelines. The reference
implementation here is deterministic and auditable by hand: a weighted
lexicon behind a logistic link, a dense word-embedding table with cosine
nearest neighbors, and a bigram language model with add-one smoothing.
"""

from __future__ import annotations

import heapq
import itertools
import math
import re
from collections import Counter
from typing import Iterable, Protocol, Sequence, runtime_checkable

import numpy as np

from .textcore import Document, Span, tokenize

BOS = "<s>"
EOS = "</s>"

_SENTENCE_SPLIT_RE = re.compile(r"[.!?\n]+")


def sigmoid(x: float) -> float:
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def fold(word: str) -> str:
    return word.casefold()


@runtime_checkable
class BackendContract(Protocol):
    """Operations every model backend must provide.

    All operations must be deterministic for fixed backend state and safe
    to call concurrently; state is read-only after load.
    """

    def score(self, text: str) -> float:
        """Toxicity probability in [0, 1]."""
        ...

    def token_attention(self, doc: Document) -> list[float]:
        """Per-token relevance weights in [0, 1], one per token."""
        ...

    def mask_fill(self, doc: Document, span: Span, k: int) -> list[tuple[str, float]]:
        """Up to k (replacement, probability) pairs, probability descending."""
        ...

    def nearest_neighbors(self, word: str, k: int) -> list[str]:
        """Up to k in-vocabulary words nearest to `word` in embedding space."""
        ...


class Lexicon:
    """Case-folded word weights plus a bias for the logistic scorer."""

    def __init__(self, entries: dict[str, float], bias: float = -4.0):
        for word, weight in entries.items():
            if not math.isfinite(weight) or weight < 0:
                raise ValueError(f"lexicon weight for {word!r} must be finite and >= 0")
        self.entries = {fold(w): float(wt) for w, wt in entries.items()}
        self.bias = float(bias)

    def weight(self, word: str) -> float:
        return self.entries.get(fold(word), 0.0)

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def load(cls, path: str, bias: float = -4.0) -> "Lexicon":
        """Load `word<TAB>weight` lines; `#` starts a comment."""
        entries: dict[str, float] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 2:
                    raise ValueError(f"{path}:{lineno}: expected 'word<TAB>weight'")
                try:
                    weight = float(parts[1])
                except ValueError:
                    raise ValueError(f"{path}:{lineno}: bad weight {parts[1]!r}") from None
                if not math.isfinite(weight) or weight < 0:
                    raise ValueError(f"{path}:{lineno}: weight must be finite and >= 0")
                entries[parts[0]] = weight
        return cls(entries, bias=bias)


class EmbeddingTable:
    """Dense word vectors with cosine k-nearest-neighbor lookup."""

    def __init__(self, vectors: dict[str, Iterable[float]]):
        folded: dict[str, np.ndarray] = {}
        dim = None
        for word, vec in vectors.items():
            arr = np.asarray(list(vec), dtype=np.float64)
            if dim is None:
                dim = arr.shape[0]
            elif arr.shape[0] != dim:
                raise ValueError(f"vector for {word!r} has dimension {arr.shape[0]}, expected {dim}")
            norm = float(np.linalg.norm(arr))
            if norm == 0.0:
                raise ValueError(f"zero-magnitude vector for {word!r}")
            folded[fold(word)] = arr
        self._vectors = folded
        self._words = sorted(folded)
        if self._words:
            self._matrix = np.stack([folded[w] for w in self._words])
            self._norms = np.linalg.norm(self._matrix, axis=1)
        else:
            self._matrix = np.zeros((0, 0))
            self._norms = np.zeros(0)

    def __len__(self) -> int:
        return len(self._vectors)

    def __contains__(self, word: str) -> bool:
        return fold(word) in self._vectors

    def nearest_neighbors(self, word: str, k: int) -> list[str]:
        """Up to k neighbors by descending cosine similarity, excluding the
        query word; lexicographic tie-break; [] for out-of-vocabulary."""
        if k < 1:
            raise ValueError("k must be >= 1")
        query = fold(word)
        vec = self._vectors.get(query)
        if vec is None:
            return []
        sims = self._matrix @ vec / (self._norms * np.linalg.norm(vec))
        ranked = sorted(
            ((-float(s), w) for w, s in zip(self._words, sims) if w != query)
        )
        return [w for _, w in ranked[:k]]

    @classmethod
    def load(cls, path: str) -> "EmbeddingTable":
        """Load `word v1 v2 ... vd` lines (whitespace-separated floats)."""
        vectors: dict[str, list[float]] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                parts = line.split()
                if not parts:
                    continue
                if len(parts) < 2:
                    raise ValueError(f"{path}:{lineno}: expected word followed by floats")
                try:
                    vec = [float(x) for x in parts[1:]]
                except ValueError:
                    raise ValueError(f"{path}:{lineno}: malformed vector component") from None
                vectors[parts[0]] = vec
        try:
            return cls(vectors)
        except ValueError as exc:
            raise ValueError(f"{path}: {exc}") from None


class NgramModel:
    """Bigram language model with add-one smoothing.

    Sentence boundaries contribute <s>/</s> pseudo-tokens so edge positions
    have real context. The vocabulary size used by smoothing counts word
    types plus the two boundary tokens, so probabilities are defined even
    for an empty corpus.
    """

    def __init__(self) -> None:
        self.unigrams: Counter[str] = Counter()
        self.bigrams: Counter[tuple[str, str]] = Counter()
        self.word_types: set[str] = set()
        self.total_tokens = 0

    @property
    def vocab_size(self) -> int:
        return len(self.word_types) + 2

    def train_text(self, text: str) -> None:
        for sentence in _SENTENCE_SPLIT_RE.split(text):
            words = [fold(t.text) for t in tokenize(sentence).tokens]
            if not words:
                continue
            self.word_types.update(words)
            self.total_tokens += len(words)
            seq = [BOS, *words, EOS]
            self.unigrams.update(seq)
            self.bigrams.update(zip(seq, seq[1:]))

    @classmethod
    def load(cls, path: str) -> "NgramModel":
        model = cls()
        with open(path, encoding="utf-8") as fh:
            model.train_text(fh.read())
        return model

    def bigram_prob(self, prev: str, word: str) -> float:
        return (self.bigrams[(prev, word)] + 1) / (self.unigrams[prev] + self.vocab_size)

    def unigram_prob(self, word: str) -> float:
        return (self.unigrams[word] + 1) / (self.total_tokens + self.vocab_size)

    def _candidates(self, doc: Document) -> list[str]:
        pool = set(self.word_types)
        pool.update(fold(t.text) for t in doc.tokens)
        return sorted(pool)

    def _context(self, doc: Document, span: Span) -> tuple[str, str]:
        prev = fold(doc.tokens[span.start_token - 1].text) if span.start_token > 0 else BOS
        nxt = (
            fold(doc.tokens[span.end_token].text)
            if span.end_token < len(doc.tokens)
            else EOS
        )
        return prev, nxt

    def mask_fill(self, doc: Document, span: Span, k: int) -> list[tuple[str, float]]:
        """Rank replacements for the span by smoothed bigram chain score.

        Single-token spans score each candidate c by P(c|prev)·P(next|c).
        Longer spans enumerate tuples over the top-20 unigram candidates
        per position and score the full chain through the span. Ties break
        lexicographically on the replacement text.
        """
        if k < 1:
            raise ValueError("k must be >= 1")
        doc.validate_span(span)
        prev, nxt = self._context(doc, span)
        candidates = self._candidates(doc)
        n = len(span)

        if n == 1:
            scored = sorted(
                (-self.bigram_prob(prev, c) * self.bigram_prob(c, nxt), c)
                for c in candidates
            )
            return [(c, -neg) for neg, c in scored[:k]]

        per_position = sorted(
            ((-self.unigram_prob(c), c) for c in candidates)
        )[:20]
        pool = [c for _, c in per_position]

        def chain_scores():
            for combo in itertools.product(pool, repeat=n):
                yield (-self._chain_score(prev, combo, nxt), " ".join(combo))

        best = heapq.nsmallest(k, chain_scores())
        return [(text, -neg) for neg, text in best]

    def _chain_score(self, prev: str, words: Sequence[str], nxt: str) -> float:
        seq = (prev, *words, nxt)
        score = 1.0
        for a, b in zip(seq, seq[1:]):
            score *= self.bigram_prob(a, b)
        return score

    def joint_fill_score(self, doc: Document, span: Span, words: Sequence[str]) -> float:
        """Smoothed bigram chain probability of `words` filled into the span."""
        doc.validate_span(span)
        prev, nxt = self._context(doc, span)
        return self._chain_score(prev, words, nxt)


class ReferenceBackend:
    """Deterministic desk-scale backend: logistic lexicon scorer, embedding
    k-NN, and smoothed bigram mask-fill."""

    name = "reference"

    def __init__(self, lexicon: Lexicon, embeddings: EmbeddingTable, ngram: NgramModel):
        self.lexicon = lexicon
        self.embeddings = embeddings
        self.ngram = ngram

    def score(self, text: str) -> float:
        doc = tokenize(text)
        logit = self.lexicon.bias + sum(self.lexicon.weight(t.text) for t in doc.tokens)
        return sigmoid(logit)

    def token_attention(self, doc: Document) -> list[float]:
        weights = [self.lexicon.weight(t.text) for t in doc.tokens]
        top = max(weights, default=0.0)
        if top <= 0.0:
            return [0.0] * len(weights)
        return [w / top for w in weights]

    def mask_fill(self, doc: Document, span: Span, k: int) -> list[tuple[str, float]]:
        return self.ngram.mask_fill(doc, span, k)

    def nearest_neighbors(self, word: str, k: int) -> list[str]:
        return self.embeddings.nearest_neighbors(word, k)

    def joint_fill_score(self, doc: Document, span: Span, words: Sequence[str]) -> float:
        return self.ngram.joint_fill_score(doc, span, words)

    def vocab_sizes(self) -> dict[str, int]:
        return {
            "lexicon": len(self.lexicon),
            "embeddings": len(self.embeddings),
            "corpus_word_types": len(self.ngram.word_types),
        }
