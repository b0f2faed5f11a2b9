"""Edit distances: Levenshtein, optimal string alignment, Damerau-Levenshtein, Hamming.

All metrics use unit costs. The two transposition-aware metrics differ:
OSA never edits the same substring twice, the full Damerau-Levenshtein
metric has no such restriction. They agree up to distance 1, and first
separate on pairs like ("ca", "abc"): OSA 3, Damerau-Levenshtein 2
(transpose to "ac", then insert "b"). OSA is not a true metric; the
triangle inequality fails on ("ca", "ac", "abc").
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Metric(Enum):
    LEVENSHTEIN = "levenshtein"
    OSA = "osa"
    DAMERAU_LEVENSHTEIN = "damerau-levenshtein"
    HAMMING = "hamming"


class OpKind(Enum):
    INSERT = "insert"
    DELETE = "delete"
    SUBSTITUTE = "substitute"
    TRANSPOSE = "transpose"


# operation sets per metric; transposition means adjacent characters only
METRIC_OPS = {
    Metric.LEVENSHTEIN: frozenset({OpKind.INSERT, OpKind.DELETE, OpKind.SUBSTITUTE}),
    Metric.OSA: frozenset(
        {OpKind.INSERT, OpKind.DELETE, OpKind.SUBSTITUTE, OpKind.TRANSPOSE}
    ),
    Metric.DAMERAU_LEVENSHTEIN: frozenset(
        {OpKind.INSERT, OpKind.DELETE, OpKind.SUBSTITUTE, OpKind.TRANSPOSE}
    ),
    Metric.HAMMING: frozenset({OpKind.SUBSTITUTE}),
}


@dataclass(frozen=True)
class EditOp:
    """One concrete edit.

    INSERT places `char` before position `position` (position may equal
    len(word), meaning append). DELETE removes the character at `position`.
    SUBSTITUTE replaces it with `char`. TRANSPOSE swaps positions
    `position` and `position + 1`; the two characters must differ so the
    op actually changes the string.
    """

    kind: OpKind
    position: int
    char: str | None = None

    def apply(self, word: str) -> str:
        n = len(word)
        pos = self.position
        if self.kind is OpKind.INSERT:
            if self.char is None:
                raise ValueError("insert needs a character payload")
            if not 0 <= pos <= n:
                raise ValueError(f"insert position {pos} out of range for {word!r}")
            return word[:pos] + self.char + word[pos:]
        if not 0 <= pos < n:
            raise ValueError(f"position {pos} out of range for {word!r}")
        if self.kind is OpKind.DELETE:
            if self.char is not None:
                raise ValueError("delete takes no character payload")
            return word[:pos] + word[pos + 1 :]
        if self.kind is OpKind.SUBSTITUTE:
            if self.char is None:
                raise ValueError("substitute needs a character payload")
            if self.char == word[pos]:
                raise ValueError(f"substitute at {pos} does not change {word!r}")
            return word[:pos] + self.char + word[pos + 1 :]
        # transpose
        if self.char is not None:
            raise ValueError("transpose takes no character payload")
        if pos + 1 >= n:
            raise ValueError(f"transpose position {pos} out of range for {word!r}")
        if word[pos] == word[pos + 1]:
            raise ValueError(f"transpose at {pos} does not change {word!r}")
        return word[:pos] + word[pos + 1] + word[pos] + word[pos + 2 :]

    def to_dict(self) -> dict:
        d = {"kind": self.kind.value, "position": self.position}
        if self.char is not None:
            d["char"] = self.char
        return d


def levenshtein(a: str, b: str) -> int:
    """Minimum insertions + deletions + substitutions turning a into b."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i] + [0] * len(b)
        for j, cb in enumerate(b, 1):
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb))
        prev = cur
    return prev[-1]


def osa(a: str, b: str) -> int:
    """Optimal string alignment distance (adds adjacent transposition, but
    no substring is edited more than once)."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if not la or not lb:
        return la or lb
    prev2: list[int] | None = None
    prev = list(range(lb + 1))
    for i in range(1, la + 1):
        cur = [i] + [0] * lb
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            best = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                best = min(best, prev2[j - 2] + 1)  # type: ignore[index]
            cur[j] = best
        prev2, prev = prev, cur
    return prev[-1]


def damerau_levenshtein(a: str, b: str) -> int:
    """Unrestricted Damerau-Levenshtein distance (Lowrance-Wagner)."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if not la or not lb:
        return la or lb
    maxdist = la + lb
    last_row: dict[str, int] = {}
    # matrix with a sentinel row/column of maxdist at index 0
    d = [[maxdist] * (lb + 2) for _ in range(la + 2)]
    for i in range(la + 1):
        d[i + 1][1] = i
    for j in range(lb + 1):
        d[1][j + 1] = j
    for i in range(1, la + 1):
        last_col = 0
        for j in range(1, lb + 1):
            k = last_row.get(b[j - 1], 0)
            l = last_col
            if a[i - 1] == b[j - 1]:
                cost = 0
                last_col = j
            else:
                cost = 1
            d[i + 1][j + 1] = min(
                d[i][j] + cost,  # substitute / match
                d[i + 1][j] + 1,  # insert
                d[i][j + 1] + 1,  # delete
                d[k][l] + (i - k - 1) + 1 + (j - l - 1),  # transpose block
            )
        last_row[a[i - 1]] = i
    return d[la + 1][lb + 1]


def hamming(a: str, b: str) -> int:
    """Substitution-only distance; defined only for equal-length strings."""
    if len(a) != len(b):
        raise ValueError(
            f"hamming distance needs equal lengths, got {len(a)} and {len(b)}"
        )
    return sum(x != y for x, y in zip(a, b))


_DISPATCH = {
    Metric.LEVENSHTEIN: levenshtein,
    Metric.OSA: osa,
    Metric.DAMERAU_LEVENSHTEIN: damerau_levenshtein,
    Metric.HAMMING: hamming,
}


def distance(a: str, b: str, metric: Metric = Metric.LEVENSHTEIN, case_fold: bool = False) -> int:
    """Edit distance between a and b under the given metric.

    Comparison is over exact Unicode scalar values; pass case_fold=True to
    compare case-insensitively. Hamming raises ValueError on unequal lengths.
    """
    if case_fold:
        a, b = a.casefold(), b.casefold()
    return _DISPATCH[metric](a, b)
