import math

import pytest
from hypothesis import given, strategies as st

from recast import (
    EmptyDistribution,
    Span,
    Thresholds,
    calibrate_cutoff,
    flag_tokens,
    overlap,
    score_span,
    tokenize,
)
from recast.backend import sigmoid


class TestThresholds:
    def test_defaults(self):
        t = Thresholds()
        assert (t.attn_cutoff, t.alt_toxicity_max, t.knn, t.mlm_topk) == (0.2, 0.4, 10, 20)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"attn_cutoff": 0.0},
            {"attn_cutoff": 1.0},
            {"alt_toxicity_max": 1.5},
            {"knn": 0},
            {"mlm_topk": 0},
        ],
    )
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ValueError):
            Thresholds(**kwargs)


class TestFlagTokens:
    def test_strict_comparison(self):
        assert flag_tokens([0.5, 0.1, 0.9], 0.2) == {0, 2}

    def test_all_zero(self):
        assert flag_tokens([0.0, 0.0], 0.2) == set()

    def test_zero_cutoff_flags_positive(self):
        assert flag_tokens([0.0, 0.3, 0.0, 0.7], 0.0) == {1, 3}

    def test_cutoff_boundary_excluded(self):
        assert flag_tokens([0.2], 0.2) == set()

    @given(
        st.lists(st.floats(0, 1), max_size=30),
        st.floats(0, 1),
        st.floats(0, 1),
    )
    def test_anti_monotone_in_cutoff(self, weights, c1, c2):
        lo, hi = min(c1, c2), max(c1, c2)
        assert flag_tokens(weights, lo) >= flag_tokens(weights, hi)


class TestOverlap:
    def test_identical_sets(self):
        assert overlap({"a", "b"}, {"a", "b"}) == 1.0

    def test_partial(self):
        assert overlap({"a", "b", "c"}, {"b", "c", "d"}) == pytest.approx(2 / 3)

    def test_disjoint(self):
        assert overlap({"a"}, {"b"}) == 0.0

    def test_empty_sets(self):
        assert overlap(set(), {"a"}) == 0.0
        assert overlap({"a"}, set()) == 0.0
        assert overlap(set(), set()) == 0.0

    @given(st.sets(st.integers(0, 20)), st.sets(st.integers(0, 20)))
    def test_symmetric_and_bounded(self, x, y):
        assert overlap(x, y) == overlap(y, x)
        assert 0.0 <= overlap(x, y) <= 1.0
        if x and y:
            assert (overlap(x, y) == 0.0) == (not x & y)


class TestCalibrateCutoff:
    def test_identity_distribution(self):
        samples = [0.3, 0.1, 0.5, 0.2, 0.4]
        r = calibrate_cutoff(samples, samples, 0.25)
        rank = max(0, math.ceil(r.source_percentile * 5) - 1)
        assert r.mapped_cutoff == sorted(samples)[rank]

    def test_worked_example(self):
        r = calibrate_cutoff([0.1, 0.2, 0.3, 0.4, 0.5], [1, 2, 3, 4, 5], 0.2)
        assert r.source_percentile == pytest.approx(0.4)
        assert r.mapped_cutoff == 2

    def test_empty_raises(self):
        with pytest.raises(EmptyDistribution):
            calibrate_cutoff([], [1.0], 0.5)
        with pytest.raises(EmptyDistribution):
            calibrate_cutoff([1.0], [], 0.5)

    @given(
        st.lists(st.floats(-10, 10), min_size=1, max_size=50),
        st.lists(st.floats(-10, 10), min_size=1, max_size=50),
        st.floats(-10, 10),
        st.randoms(use_true_random=False),
    )
    def test_permutation_invariant(self, source, target, cutoff, rng):
        base = calibrate_cutoff(source, target, cutoff)
        rng.shuffle(source)
        rng.shuffle(target)
        assert calibrate_cutoff(source, target, cutoff) == base

    @given(
        st.lists(st.floats(-100, 100), min_size=1, max_size=60),
        st.floats(-100, 100),
        st.floats(0.01, 5),
        st.floats(-3, 3),
    )
    def test_monotone_transform_property(self, source, cutoff, scale, shift):
        f = lambda v: scale * v + shift
        target = [f(s) for s in source]
        r = calibrate_cutoff(source, target, cutoff)
        rank = max(0, math.ceil(r.source_percentile * len(source)) - 1)
        assert r.mapped_cutoff == f(sorted(source)[rank])


class TestScoreSpan:
    def test_full_span_equals_whole_text(self, toy_backend):
        doc = tokenize("you are stupid")
        assert score_span(doc, Span(0, 3), toy_backend) == toy_backend.score(doc.raw)

    def test_single_toxic_word(self, toy_backend):
        doc = tokenize("you are stupid")
        assert score_span(doc, Span(2, 3), toy_backend) == pytest.approx(sigmoid(-1), abs=1e-12)

    def test_lexicon_free_words(self, toy_backend):
        doc = tokenize("you are stupid")
        assert score_span(doc, Span(0, 2), toy_backend) == pytest.approx(sigmoid(-4), abs=1e-12)
