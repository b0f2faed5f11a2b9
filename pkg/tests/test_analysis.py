"""Verification verdicts, corpus statistics, and trial aggregation."""

import pytest

from jumblekit import corpus
from jumblekit.analysis import (
    AlignmentError,
    Check,
    aggregate_trials,
    corpus_stats,
    verify_pair,
)
from jumblekit.distance import Metric
from jumblekit.perturb import PerturbSpec, TextGenerator, perturb_text
from jumblekit.tokens import tokenize, word_texts
from jumblekit.trials import TrialRecord


def toks(name):
    return tokenize(corpus.corpus_text(name))


def record(reader, condition, text_index=0, elapsed=1000, bundle="b1"):
    return TrialRecord(bundle, reader, condition, text_index, elapsed, "2026-01-01T00:00:00Z")


# ---------------------------------------------------------------------------
# verify_pair


def test_identity_pair_all_pass():
    tokens = toks("passage")
    verdicts = verify_pair(tokens, tokens)
    assert all(v.ok for v in verdicts)
    assert all(v.measured_distance == 0 for v in verdicts)


def test_circulated_jumble_violates_its_own_rule():
    verdicts = verify_pair(
        toks("cambridge_original"),
        toks("cambridge_jumbled"),
        checks={Check.ENDPOINTS_FIXED, Check.MULTISET_EQUAL},
    )
    bad = [v for v in verdicts if Check.MULTISET_EQUAL not in v.passed]
    assert [v.candidate for v in bad] == ["rscheearch", "mtttaer", "iprmoetnt"]
    # endpoints hold everywhere even where the letter multiset does not
    assert all(Check.ENDPOINTS_FIXED in v.passed for v in verdicts)


def test_published_edit1_wordlist_is_mostly_distance_one():
    verdicts = verify_pair(
        toks("wordlist100"),
        toks("wordlist100_edit1_unconstrained"),
        checks={Check.WITHIN_DISTANCE},
        metric=Metric.OSA,
        max_distance=1,
    )
    violations = [v for v in verdicts if not v.ok]
    assert violations  # the published list contains distance>1 words
    assert len(violations) < len(verdicts) / 2


def test_word_count_mismatch_is_an_error():
    with pytest.raises(AlignmentError, match="67 vs 68"):
        verify_pair(toks("passage"), toks("passage_edit1"))


def test_distance_cap_reporting():
    a = tokenize("abcdefgh")
    b = tokenize("hgfedcba")
    (verdict,) = verify_pair(a, b, {Check.WITHIN_DISTANCE}, cap=2)
    assert verdict.exceeds_cap
    assert verdict.measured_distance is None
    assert verdict.to_dict()["measured_distance"] == "exceeds cap"


def test_generator_output_passes_its_own_contract():
    tokens = toks("wordlist100")
    spec = PerturbSpec(seed=5)
    jumbled, _ = perturb_text(tokens, spec, generator=TextGenerator.JUMBLE)
    verdicts = verify_pair(
        tokens, jumbled, {Check.ENDPOINTS_FIXED, Check.MULTISET_EQUAL}
    )
    assert all(v.ok for v in verdicts)


# ---------------------------------------------------------------------------
# corpus_stats


def test_stats_identity():
    tokens = toks("passage")
    stats = corpus_stats(tokens, tokens)
    assert stats.unchanged_fraction == 1.0
    assert stats.distance_histogram == {0: stats.word_count}


def test_stats_on_the_circulated_pair():
    stats = corpus_stats(toks("cambridge_original"), toks("cambridge_jumbled"))
    assert stats.word_count == 69
    assert stats.unchanged_count == 32
    assert 0.45 <= stats.unchanged_fraction <= 0.50
    assert stats.distance_histogram[0] == stats.unchanged_count
    assert sum(stats.distance_histogram.values()) == stats.word_count


def test_stats_fresh_jumble_unchanged_count_matches_fixture_structure():
    tokens = toks("wordlist100")
    jumbled, _ = perturb_text(tokens, PerturbSpec(seed=9), generator=TextGenerator.JUMBLE)
    stats = corpus_stats(tokens, jumbled)
    expected_unchanged = sum(
        1 for w in word_texts(tokens) if len(w) <= 3 or len(set(w[1:-1])) < 2
    )
    assert stats.unchanged_count == expected_unchanged


# ---------------------------------------------------------------------------
# aggregate_trials


def test_two_reader_mean():
    records = [
        record("r1", "plain", elapsed=4000),
        record("r2", "plain", elapsed=6000),
    ]
    (summary,) = aggregate_trials(records)
    assert summary.mean_time == 5000
    assert summary.reader_count == 2
    assert summary.per_reader == {"r1": 4000, "r2": 6000}


def test_ten_readers_four_conditions():
    records = [
        record(f"r{i}", cond, elapsed=3000 + 100 * i + 1000 * k)
        for k, cond in enumerate(["c0", "c1", "c2", "c3"])
        for i in range(10)
    ]
    summaries = aggregate_trials(records)
    assert [s.condition for s in summaries] == ["c0", "c1", "c2", "c3"]
    assert all(s.reader_count == 10 for s in summaries)
    assert [s.mean_time for s in summaries] == [3450, 4450, 5450, 6450]


def test_mean_is_order_invariant():
    records = [record(f"r{i}", "c", elapsed=1000 + i) for i in range(7)]
    forward = aggregate_trials(records)
    backward = aggregate_trials(list(reversed(records)))
    assert forward == backward


def test_reader_with_multiple_texts_contributes_their_mean():
    records = [
        record("r1", "c", text_index=0, elapsed=1000),
        record("r1", "c", text_index=1, elapsed=3000),
        record("r2", "c", text_index=0, elapsed=2000),
    ]
    (summary,) = aggregate_trials(records)
    assert summary.per_reader == {"r1": 2000, "r2": 2000}
    assert summary.mean_time == 2000


def test_duplicate_submission_rejected():
    records = [record("r1", "c"), record("r1", "c")]
    with pytest.raises(ValueError, match="duplicate"):
        aggregate_trials(records)


def test_empty_input_rejected():
    with pytest.raises(ValueError):
        aggregate_trials([])


def test_nonpositive_elapsed_rejected_at_construction():
    with pytest.raises(ValueError):
        record("r1", "c", elapsed=0)
