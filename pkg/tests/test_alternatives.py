import random

import pytest

from recast import (
    Span,
    SpanOutOfBounds,
    SpanTooLong,
    Thresholds,
    apply_replacement,
    generate_alternatives,
    generate_span_alternatives,
    is_highlighted,
    tokenize,
)
from recast.backend import sigmoid


class TestGenerateAlternatives:
    def test_embedding_candidate_included_and_filtered(self, toy_backend):
        doc = tokenize("you are stupid")
        result = generate_alternatives(doc, 2, toy_backend)
        by_name = {c.replacement: c for c in result.candidates}
        assert "foolish" in by_name
        foolish = by_name["foolish"]
        assert foolish.individual_toxicity == pytest.approx(sigmoid(-4), abs=1e-12)
        assert foolish.resulting_toxicity == pytest.approx(sigmoid(-4), abs=1e-12)
        assert result.original_toxicity == pytest.approx(sigmoid(-1), abs=1e-12)

    def test_deletion_candidate(self, toy_backend):
        doc = tokenize("you are stupid")
        result = generate_alternatives(doc, 2, toy_backend)
        deletion = [c for c in result.candidates if c.replacement == ""]
        assert len(deletion) == 1
        assert deletion[0].source == "deletion"
        assert deletion[0].resulting_toxicity == pytest.approx(sigmoid(-4), abs=1e-12)

    def test_constant_backend_yields_empty(self, constant_backend):
        # every replacement keeps the score constant, so none improves it
        doc = tokenize("any words here")
        result = generate_alternatives(doc, 1, constant_backend)
        assert result.candidates == ()

    def test_original_word_never_suggested(self, toy_backend):
        doc = tokenize("you are STUPID")
        result = generate_alternatives(doc, 2, toy_backend)
        assert all(c.replacement.casefold() != "stupid" for c in result.candidates)

    def test_toxic_neighbors_filtered_by_individual(self, toy_backend):
        # "idiot" is in the embedding table near "person" but has weight 3.0
        doc = tokenize("you utter idiot")
        result = generate_alternatives(doc, 2, toy_backend)
        assert all(c.replacement != "idiot" for c in result.candidates)
        for c in result.candidates:
            assert c.individual_toxicity < 0.4
            assert c.resulting_toxicity < result.original_toxicity

    def test_sorted_by_resulting_then_lexicographic(self, toy_backend):
        doc = tokenize("you are stupid")
        cands = generate_alternatives(doc, 2, toy_backend).candidates
        assert list(cands) == sorted(cands, key=lambda c: (c.resulting_toxicity, c.replacement))

    def test_deduplicated(self, toy_backend):
        doc = tokenize("you are stupid")
        cands = generate_alternatives(doc, 2, toy_backend).candidates
        names = [c.replacement for c in cands]
        assert len(names) == len(set(names))

    def test_pool_size_bound(self, toy_backend):
        thresholds = Thresholds()
        doc = tokenize("you are stupid")
        cands = generate_alternatives(doc, 2, toy_backend, thresholds).candidates
        assert len(cands) <= thresholds.knn + thresholds.mlm_topk + 1

    def test_top_candidate_rescores_exactly(self, toy_backend):
        doc = tokenize("you are stupid")
        result = generate_alternatives(doc, 2, toy_backend)
        top = result.candidates[0]
        edited = apply_replacement(doc, result.span, top.replacement)
        assert toy_backend.score(edited.raw) == top.resulting_toxicity

    def test_deterministic(self, toy_backend):
        doc = tokenize("you are stupid")
        assert generate_alternatives(doc, 2, toy_backend) == generate_alternatives(
            doc, 2, toy_backend
        )

    def test_index_out_of_range(self, toy_backend):
        with pytest.raises(SpanOutOfBounds):
            generate_alternatives(tokenize("short text"), 5, toy_backend)


class TestGenerateSpanAlternatives:
    def test_single_token_delegates(self, toy_backend):
        doc = tokenize("you are stupid")
        assert generate_span_alternatives(doc, Span(2, 3), toy_backend) == (
            generate_alternatives(doc, 2, toy_backend)
        )

    def test_two_token_span_improves(self, toy_backend):
        doc = tokenize("you stupid idiot")
        result = generate_span_alternatives(doc, Span(1, 3), toy_backend)
        assert result.candidates, "expected at least one admissible tuple"
        original = toy_backend.score(doc.raw)
        for c in result.candidates:
            assert len(c.replacement.split(" ")) == 2
            assert c.individual_toxicity < 0.4
            assert c.resulting_toxicity < original

    def test_constant_backend_yields_empty(self, constant_backend):
        doc = tokenize("some words to replace")
        result = generate_span_alternatives(doc, Span(1, 3), constant_backend)
        assert result.candidates == ()

    def test_span_too_long(self, toy_backend):
        doc = tokenize("one two three four five six seven")
        with pytest.raises(SpanTooLong):
            generate_span_alternatives(doc, Span(0, 6), toy_backend)

    def test_invalid_span(self, toy_backend):
        with pytest.raises(SpanOutOfBounds):
            generate_span_alternatives(tokenize("a b"), Span(0, 5), toy_backend)

    def test_top_tuple_rescores_exactly(self, toy_backend):
        doc = tokenize("you stupid idiot")
        result = generate_span_alternatives(doc, Span(1, 3), toy_backend)
        top = result.candidates[0]
        edited = apply_replacement(doc, result.span, top.replacement)
        assert toy_backend.score(edited.raw) == top.resulting_toxicity


class TestIsHighlighted:
    def test_low_attention_short_circuits(self, toy_backend):
        doc = tokenize("you are stupid")
        # "you" has zero attention
        assert not is_highlighted(doc, 0, toy_backend)

    def test_high_attention_with_candidates(self, toy_backend):
        doc = tokenize("you are stupid")
        assert is_highlighted(doc, 2, toy_backend)

    def test_high_attention_all_filtered(self, constant_backend):
        doc = tokenize("anything at all")
        # constant backend: attention 1.0 everywhere, but no candidate improves
        assert not is_highlighted(doc, 1, constant_backend)

    def test_matches_definition(self, toy_backend):
        thresholds = Thresholds()
        doc = tokenize("you are stupid and i hate it")
        attention = toy_backend.token_attention(doc)
        for i in range(len(doc.tokens)):
            expected = attention[i] > thresholds.attn_cutoff and bool(
                generate_alternatives(doc, i, toy_backend, thresholds).candidates
            )
            assert is_highlighted(doc, i, toy_backend, thresholds) == expected


def test_safeguard_fuzz_small(toy_backend):
    rng = random.Random(42)
    vocab = ["you", "are", "stupid", "idiot", "fine", "person", "cat", "sat", "the"]
    for _ in range(50):
        doc = tokenize(" ".join(rng.choices(vocab, k=rng.randint(1, 6))))
        original = toy_backend.score(doc.raw)
        for i in range(len(doc.tokens)):
            for c in generate_alternatives(doc, i, toy_backend).candidates:
                assert c.individual_toxicity < 0.4
                assert c.resulting_toxicity < original
