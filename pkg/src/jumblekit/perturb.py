"""Seeded text perturbation.

Two generators operate on Word tokens and leave everything else alone:

* jumble: random permutation of a word's interior, first and last
  characters pinned in place.
* edit1: one random edit at OSA distance exactly 1, drawn uniformly from
  the full set of legal concrete edits under a constraint mode
  (unconstrained, fix-first, fix-first-last, or qwerty-neighbor payloads).

Everything is driven by per-word random states derived from (seed, word
ordinal), so output is a pure function of the inputs and words could be
processed independently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from pathlib import Path
from enum import Enum
from typing import Mapping, Sequence

from .distance import EditOp, OpKind
from .tokens import Token, TokenKind

DEFAULT_ALPHABET = "abcdefghijklmnopqrstuvwxyz"
DEFAULT_MIN_WORD_LEN = 4

JUMBLE_OP = "jumble-permutation"
SKIPPED = "skipped"


class ConstraintMode(Enum):
    UNCONSTRAINED = "unconstrained"
    FIX_FIRST = "fix-first"
    FIX_FIRST_LAST = "fix-first-last"
    QWERTY_NEIGHBOR = "qwerty"


class TextGenerator(Enum):
    JUMBLE = "jumble"
    EDIT1 = "edit1"


@dataclass(frozen=True)
class PerturbSpec:
    """Reproducible recipe for one perturbation run."""

    mode: ConstraintMode = ConstraintMode.UNCONSTRAINED
    distance: int = 1
    min_word_len: int = DEFAULT_MIN_WORD_LEN
    seed: int = 0
    alphabet: str = DEFAULT_ALPHABET

    def __post_init__(self):
        if self.distance != 1:
            raise ValueError("only distance-1 perturbation is supported")
        if self.min_word_len < 1:
            raise ValueError("min_word_len must be >= 1")
        if not self.alphabet:
            raise ValueError("alphabet must not be empty")
        if "'" in self.alphabet:
            raise ValueError("alphabet must not contain apostrophes")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet must not contain duplicate characters")

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "distance": self.distance,
            "min_word_len": self.min_word_len,
            "seed": self.seed,
            "alphabet": self.alphabet,
        }


class LayoutError(ValueError):
    """Raised for malformed or asymmetric keyboard layout tables."""


@dataclass(frozen=True)
class KeyboardLayout:
    """Key adjacency map; symmetric and irreflexive by construction."""

    adjacency: Mapping[str, frozenset[str]]
    name: str = "custom"

    def __post_init__(self):
        for key, nbrs in self.adjacency.items():
            if key in nbrs:
                raise LayoutError(f"key {key!r} listed as its own neighbor")
            for n in nbrs:
                if key not in self.adjacency.get(n, frozenset()):
                    raise LayoutError(
                        f"asymmetric adjacency: {key!r} -> {n!r} has no reverse entry"
                    )

    def neighbors(self, ch: str) -> frozenset[str]:
        hit = self.adjacency.get(ch)
        if hit is None:
            hit = self.adjacency.get(ch.casefold(), frozenset())
        return hit

    @classmethod
    def from_file(cls, path: str | Path, name: str | None = None) -> "KeyboardLayout":
        """Parse a layout file: one `key: neighbor neighbor ...` line per key."""
        path = Path(path)
        adjacency: dict[str, frozenset[str]] = {}
        for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ":" not in line:
                raise LayoutError(f"{path.name}:{lineno}: expected 'key: neighbors'")
            key, _, rest = line.partition(":")
            key = key.strip()
            if len(key) != 1:
                raise LayoutError(f"{path.name}:{lineno}: key must be one character")
            if key in adjacency:
                raise LayoutError(f"{path.name}:{lineno}: duplicate key {key!r}")
            nbrs = rest.split()
            if any(len(n) != 1 for n in nbrs):
                raise LayoutError(f"{path.name}:{lineno}: neighbors must be single characters")
            adjacency[key] = frozenset(nbrs)
        return cls(adjacency, name=name or path.stem)


@dataclass(frozen=True)
class PerturbationTrace:
    """Provenance for one word: what was done to it, or why it was skipped."""

    word_index: int
    original: str
    result: str
    op: EditOp | str
    reason: str | None = None

    def to_dict(self) -> dict:
        d = {
            "word_index": self.word_index,
            "original": self.original,
            "result": self.result,
            "op": self.op.to_dict() if isinstance(self.op, EditOp) else self.op,
        }
        if self.reason is not None:
            d["reason"] = self.reason
        return d


def _word_rng(seed: int, word_index: int) -> random.Random:
    # string seeding hashes via sha512, stable across processes
    return random.Random(f"{seed}:{word_index}")


def jumble_word(word: str, rng: random.Random, max_retries: int = 100) -> str:
    """Randomly permute the interior of `word`, endpoints pinned.

    Words shorter than 4 characters have no permutable interior and come
    back unchanged. When the interior has at least two distinct characters
    the permutation is resampled until it differs from the original
    (bounded retries, after which the identity is accepted).
    """
    if len(word) < 4:
        return word
    interior = list(word[1:-1])
    if len(set(interior)) < 2:
        return word
    result = word
    for _ in range(max_retries):
        rng.shuffle(interior)
        result = word[0] + "".join(interior) + word[-1]
        if result != word:
            break
    return result


def enumerate_legal_ops(
    word: str,
    spec: PerturbSpec,
    layout: KeyboardLayout | None = None,
) -> list[EditOp]:
    """Every concrete edit of `word` that is legal under the spec's mode.

    The result is at OSA distance exactly 1 for each op. Order is
    deterministic (deletes, inserts, substitutes, transposes, by position
    then payload) so a seeded uniform draw is reproducible.
    """
    if not word:
        raise ValueError("cannot perturb an empty word")
    mode = spec.mode
    if mode is ConstraintMode.QWERTY_NEIGHBOR and layout is None:
        raise ValueError("qwerty mode needs a keyboard layout")
    fix_first = mode in (ConstraintMode.FIX_FIRST, ConstraintMode.FIX_FIRST_LAST)
    fix_last = mode is ConstraintMode.FIX_FIRST_LAST
    qwerty = mode is ConstraintMode.QWERTY_NEIGHBOR
    n = len(word)
    ops: list[EditOp] = []

    for pos in range(n):
        if fix_first and pos == 0:
            continue
        if fix_last and pos == n - 1:
            continue
        ops.append(EditOp(OpKind.DELETE, pos))

    for pos in range(n + 1):
        if fix_first and pos == 0:
            continue
        if fix_last and pos == n:
            continue
        if qwerty:
            anchor = word[pos - 1] if pos > 0 else word[0]
            payloads = [c for c in spec.alphabet if c in layout.neighbors(anchor)]
        else:
            payloads = list(spec.alphabet)
        for c in payloads:
            ops.append(EditOp(OpKind.INSERT, pos, c))

    for pos in range(n):
        if fix_first and pos == 0:
            continue
        if fix_last and pos == n - 1:
            continue
        if qwerty:
            payloads = [c for c in spec.alphabet if c in layout.neighbors(word[pos])]
        else:
            payloads = list(spec.alphabet)
        for c in payloads:
            if c != word[pos]:
                ops.append(EditOp(OpKind.SUBSTITUTE, pos, c))

    for pos in range(n - 1):
        if fix_first and pos == 0:
            continue
        if fix_last and pos == n - 2:
            continue
        if word[pos] != word[pos + 1]:
            ops.append(EditOp(OpKind.TRANSPOSE, pos))

    return ops


def perturb_word(
    word: str,
    spec: PerturbSpec,
    layout: KeyboardLayout | None = None,
    rng: random.Random | None = None,
    word_index: int = 0,
) -> tuple[str, PerturbationTrace]:
    """Apply one uniformly drawn legal edit, or skip the word.

    Words below spec.min_word_len and words with no legal ops pass through
    unchanged with a skip trace.
    """
    if rng is None:
        rng = _word_rng(spec.seed, word_index)
    if len(word) < spec.min_word_len:
        trace = PerturbationTrace(word_index, word, word, SKIPPED, "below-min-word-len")
        return word, trace
    ops = enumerate_legal_ops(word, spec, layout)
    if not ops:
        trace = PerturbationTrace(word_index, word, word, SKIPPED, "no-legal-ops")
        return word, trace
    op = ops[rng.randrange(len(ops))]
    result = op.apply(word)
    return result, PerturbationTrace(word_index, word, result, op)


def _jumble_token(word: str, spec: PerturbSpec, rng: random.Random, word_index: int):
    if len(word) < spec.min_word_len:
        return word, PerturbationTrace(word_index, word, word, SKIPPED, "below-min-word-len")
    if len(word) < 4 or len(set(word[1:-1])) < 2:
        return word, PerturbationTrace(word_index, word, word, SKIPPED, "interior-not-jumblable")
    result = jumble_word(word, rng)
    reason = "identity-after-retries" if result == word else None
    return result, PerturbationTrace(word_index, word, result, JUMBLE_OP, reason)


def perturb_text(
    tokens: Sequence[Token],
    spec: PerturbSpec,
    layout: KeyboardLayout | None = None,
    generator: TextGenerator = TextGenerator.EDIT1,
) -> tuple[list[Token], list[PerturbationTrace]]:
    """Perturb every Word token independently; pass the rest through.

    The i-th word gets a random state derived from (spec.seed, i), so the
    whole transformation is deterministic in (tokens, spec, layout,
    generator) and there is one trace per word.
    """
    out: list[Token] = []
    traces: list[PerturbationTrace] = []
    word_index = 0
    for tok in tokens:
        if tok.kind is not TokenKind.WORD:
            out.append(tok)
            continue
        rng = _word_rng(spec.seed, word_index)
        if generator is TextGenerator.JUMBLE:
            result, trace = _jumble_token(tok.text, spec, rng, word_index)
        else:
            result, trace = perturb_word(tok.text, spec, layout, rng, word_index)
        out.append(replace(tok, text=result))
        traces.append(trace)
        word_index += 1
    return out, traces
