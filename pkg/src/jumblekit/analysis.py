"""Verification and statistics over aligned word pairs, plus trial aggregation.

Alignment is positional: the i-th word of the candidate is compared with
the i-th word of the original. A word-count mismatch is an input error,
not something to be repaired by fuzzy matching.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .distance import Metric, distance
from .tokens import Token, word_texts
from .trials import TrialRecord


class AlignmentError(ValueError):
    """Word counts of original and candidate do not match."""


class Check(Enum):
    ENDPOINTS_FIXED = "endpoints-fixed"
    MULTISET_EQUAL = "multiset-equal"
    WITHIN_DISTANCE = "within-distance"


ALL_CHECKS = frozenset(Check)


@dataclass(frozen=True)
class WordVerdict:
    index: int
    original: str
    candidate: str
    checks: frozenset[Check]
    passed: frozenset[Check]
    measured_distance: int | None = None
    exceeds_cap: bool = False

    @property
    def ok(self) -> bool:
        return self.passed == self.checks

    def to_dict(self) -> dict:
        d = {
            "index": self.index,
            "original": self.original,
            "candidate": self.candidate,
            "checks": sorted(c.value for c in self.checks),
            "passed": sorted(c.value for c in self.passed),
            "ok": self.ok,
        }
        if Check.WITHIN_DISTANCE in self.checks:
            d["measured_distance"] = (
                "exceeds cap" if self.exceeds_cap else self.measured_distance
            )
        return d


def _aligned_words(original_tokens: Sequence[Token], candidate_tokens: Sequence[Token]):
    orig = word_texts(original_tokens)
    cand = word_texts(candidate_tokens)
    if len(orig) != len(cand):
        raise AlignmentError(
            f"word counts differ: {len(orig)} vs {len(cand)} "
            f"(first unmatched word index {min(len(orig), len(cand))})"
        )
    return orig, cand


def verify_pair(
    original_tokens: Sequence[Token],
    candidate_tokens: Sequence[Token],
    checks: Iterable[Check] = ALL_CHECKS,
    metric: Metric = Metric.OSA,
    max_distance: int = 1,
    cap: int = 4,
) -> list[WordVerdict]:
    """One verdict per aligned word pair.

    ENDPOINTS_FIXED requires the first and last characters to match,
    MULTISET_EQUAL requires equal character multisets, WITHIN_DISTANCE
    requires the metric distance to be at most `max_distance` (unchanged
    words trivially pass). Distances are always computed exactly; `cap`
    only bounds what is reported (larger values show as "exceeds cap").
    """
    checks = frozenset(checks)
    orig, cand = _aligned_words(original_tokens, candidate_tokens)
    verdicts = []
    for i, (o, c) in enumerate(zip(orig, cand)):
        passed = set()
        measured: int | None = None
        exceeds = False
        if Check.ENDPOINTS_FIXED in checks:
            if o[0] == c[0] and o[-1] == c[-1]:
                passed.add(Check.ENDPOINTS_FIXED)
        if Check.MULTISET_EQUAL in checks:
            if sorted(o) == sorted(c):
                passed.add(Check.MULTISET_EQUAL)
        if Check.WITHIN_DISTANCE in checks:
            d = distance(o, c, metric)
            if d <= max_distance:
                passed.add(Check.WITHIN_DISTANCE)
            exceeds = d > cap
            measured = None if exceeds else d
        verdicts.append(
            WordVerdict(i, o, c, checks, frozenset(passed), measured, exceeds)
        )
    return verdicts


@dataclass(frozen=True)
class CorpusStats:
    word_count: int
    unchanged_count: int
    unchanged_fraction: float
    distance_histogram: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "word_count": self.word_count,
            "unchanged_count": self.unchanged_count,
            "unchanged_fraction": self.unchanged_fraction,
            "distance_histogram": {str(k): v for k, v in sorted(self.distance_histogram.items())},
        }


def corpus_stats(
    original_tokens: Sequence[Token],
    candidate_tokens: Sequence[Token],
    metric: Metric = Metric.OSA,
) -> CorpusStats:
    """Unchanged-word fraction and per-word distance histogram.

    "Unchanged" means exact, case-sensitive string equality.
    """
    orig, cand = _aligned_words(original_tokens, candidate_tokens)
    histogram: Counter[int] = Counter()
    unchanged = 0
    for o, c in zip(orig, cand):
        d = distance(o, c, metric)
        histogram[d] += 1
        if o == c:
            unchanged += 1
    count = len(orig)
    fraction = unchanged / count if count else 1.0
    return CorpusStats(count, unchanged, fraction, dict(histogram))


@dataclass(frozen=True)
class TrialSummary:
    condition: str
    reader_count: int
    mean_time: float
    per_reader: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "reader_count": self.reader_count,
            "mean_ms": self.mean_time,
            "per_reader": dict(sorted(self.per_reader.items())),
        }


def aggregate_trials(records: Sequence[TrialRecord]) -> list[TrialSummary]:
    """Per-condition mean reading times, ordered by condition name.

    A reader who read several texts in one condition contributes the mean
    of their own times; the condition mean averages over readers. Duplicate
    (reader, condition, text) submissions and non-positive times are errors.
    """
    if not records:
        raise ValueError("no trial records to aggregate")
    seen = set()
    for rec in records:
        if rec.elapsed_ms <= 0:
            raise ValueError(
                f"non-positive elapsed_ms {rec.elapsed_ms} for reader {rec.reader_id!r}"
            )
        key = (rec.bundle_id, rec.reader_id, rec.condition, rec.text_index)
        if key in seen:
            raise ValueError(
                f"duplicate record for reader {rec.reader_id!r}, "
                f"condition {rec.condition!r}, text {rec.text_index}"
            )
        seen.add(key)

    by_condition: dict[str, dict[str, list[int]]] = {}
    for rec in records:
        by_condition.setdefault(rec.condition, {}).setdefault(rec.reader_id, []).append(
            rec.elapsed_ms
        )

    summaries = []
    for condition in sorted(by_condition):
        readers = by_condition[condition]
        per_reader = {r: sum(ts) / len(ts) for r, ts in readers.items()}
        mean_time = sum(per_reader.values()) / len(per_reader)
        summaries.append(TrialSummary(condition, len(per_reader), mean_time, per_reader))
    return summaries
