"""Trial bundles and records: the file formats shared with the browser runner.

A bundle packages experimental conditions (each a list of display texts)
for presentation to readers; a results file carries one record per timed
reading. Both are JSON with a schema_version field, validated against the
JSON Schema files shipped under data/schemas (the same files are vendored
into the frontend, so the two programs cannot drift apart silently).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import jsonschema

from . import corpus
from .perturb import (
    ConstraintMode,
    KeyboardLayout,
    PerturbSpec,
    TextGenerator,
    perturb_text,
)
from .tokens import StopwordLexicon, detokenize, strip_stopwords, tokenize

SCHEMA_VERSION = 1

PRESENTATION_FIXED = "fixed"
PRESENTATION_SHUFFLED = "shuffled-per-reader"
PRESENTATIONS = (PRESENTATION_FIXED, PRESENTATION_SHUFFLED)


class SchemaError(ValueError):
    """A JSON document does not match its schema; `field` names the culprit."""

    def __init__(self, message: str, field_path: str):
        super().__init__(f"{field_path}: {message}" if field_path else message)
        self.field_path = field_path


def _validate(document: dict, schema_name: str) -> None:
    schema = corpus.schema(schema_name)
    validator = jsonschema.Draft202012Validator(schema)
    error = jsonschema.exceptions.best_match(validator.iter_errors(document))
    if error is not None:
        raise SchemaError(error.message, error.json_path.lstrip("$").lstrip("."))


@dataclass(frozen=True)
class TrialRecord:
    """One timed reading of one text by one reader."""

    bundle_id: str
    reader_id: str
    condition: str
    text_index: int
    elapsed_ms: int
    recorded_at: str
    comprehension: str | None = None

    def __post_init__(self):
        if self.elapsed_ms <= 0:
            raise ValueError(f"elapsed_ms must be positive, got {self.elapsed_ms}")
        if self.text_index < 0:
            raise ValueError(f"text_index must be >= 0, got {self.text_index}")

    def to_dict(self) -> dict:
        d = {
            "bundle_id": self.bundle_id,
            "reader_id": self.reader_id,
            "condition": self.condition,
            "text_index": self.text_index,
            "elapsed_ms": self.elapsed_ms,
            "recorded_at": self.recorded_at,
        }
        if self.comprehension is not None:
            d["comprehension"] = self.comprehension
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TrialRecord":
        return cls(
            bundle_id=d["bundle_id"],
            reader_id=d["reader_id"],
            condition=d["condition"],
            text_index=d["text_index"],
            elapsed_ms=d["elapsed_ms"],
            recorded_at=d["recorded_at"],
            comprehension=d.get("comprehension"),
        )


@dataclass(frozen=True)
class TrialCondition:
    name: str
    generator: str
    spec: dict
    texts: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "generator": self.generator,
            "spec": self.spec,
            "texts": list(self.texts),
        }


@dataclass(frozen=True)
class TrialBundle:
    bundle_id: str
    presentation: str
    conditions: tuple[TrialCondition, ...]
    created_from: dict

    def __post_init__(self):
        names = [c.name for c in self.conditions]
        if len(set(names)) != len(names):
            raise ValueError("condition names must be unique")
        if not self.conditions:
            raise ValueError("bundle needs at least one condition")
        for c in self.conditions:
            if not c.texts:
                raise ValueError(f"condition {c.name!r} has no texts")
        if self.presentation not in PRESENTATIONS:
            raise ValueError(f"unknown presentation {self.presentation!r}")

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "bundle_id": self.bundle_id,
            "presentation": self.presentation,
            "conditions": [c.to_dict() for c in self.conditions],
            "created_from": self.created_from,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TrialBundle":
        _validate(d, "trial_bundle")
        conditions = tuple(
            TrialCondition(
                name=c["name"],
                generator=c["generator"],
                spec=c.get("spec", {}),
                texts=tuple(c["texts"]),
            )
            for c in d["conditions"]
        )
        return cls(d["bundle_id"], d["presentation"], conditions, d["created_from"])


def load_bundle(path: str | Path) -> TrialBundle:
    with open(path, encoding="utf-8") as fh:
        return TrialBundle.from_dict(json.load(fh))


def load_results(path: str | Path) -> tuple[dict, list[TrialRecord]]:
    """Read a results file (as exported by the trial runner); returns
    (metadata, records)."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    _validate(doc, "trial_records")
    records = [TrialRecord.from_dict(r) for r in doc["records"]]
    meta = {k: v for k, v in doc.items() if k != "records"}
    for rec in records:
        if rec.bundle_id != doc["bundle_id"]:
            raise SchemaError(
                f"record bundle_id {rec.bundle_id!r} does not match file "
                f"bundle_id {doc['bundle_id']!r}",
                "records",
            )
    return meta, records


# ---------------------------------------------------------------------------
# bundle construction


def _resolve_source(source: str) -> str:
    if source.startswith("corpus:"):
        return corpus.corpus_text(source.removeprefix("corpus:"))
    return Path(source).read_text(encoding="utf-8")


def _resolve_lexicon(name: str) -> StopwordLexicon:
    if name in corpus.lexicon_names():
        return corpus.lexicon(name)
    return StopwordLexicon.from_file(name)


def _render_condition(cond: dict, seed: int, layout: KeyboardLayout) -> TrialCondition:
    text = _resolve_source(cond["source"])
    tokens = tokenize(text.strip())
    applied: dict = {"source": cond["source"], "seed": seed}

    if cond.get("strip"):
        lexicon_name = cond.get("lexicon", "default")
        tokens = strip_stopwords(tokens, _resolve_lexicon(lexicon_name))
        applied["strip"] = True
        applied["lexicon"] = lexicon_name

    generator = cond.get("generator", "none")
    if generator == "none":
        rendered = detokenize(tokens)
    elif generator in (TextGenerator.JUMBLE.value, TextGenerator.EDIT1.value):
        spec = PerturbSpec(
            mode=ConstraintMode(cond.get("mode", "unconstrained")),
            min_word_len=cond.get("min_word_len", 4),
            seed=seed,
        )
        out_tokens, _ = perturb_text(tokens, spec, layout, TextGenerator(generator))
        rendered = detokenize(out_tokens)
        applied.update(spec.to_dict())
    else:
        raise ValueError(f"unknown generator {generator!r} in condition {cond['name']!r}")
    applied["generator"] = generator

    return TrialCondition(cond["name"], generator, applied, (rendered,))


def build_bundle(config: dict, seed: int, tool_version: str) -> TrialBundle:
    """Render a bundle from a make-config: resolve sources, apply generators.

    Each condition gets its own derived seed (base seed + ordinal), recorded
    in the condition spec so any text can be regenerated.
    """
    conditions = config.get("conditions")
    if not conditions:
        raise ValueError("config has no conditions")
    layout = corpus.keyboard("qwerty")
    rendered = tuple(
        _render_condition(cond, seed + i, layout) for i, cond in enumerate(conditions)
    )
    source_blob = "\n".join(
        text for cond in rendered for text in cond.texts
    ).encode("utf-8")
    source_hash = hashlib.sha256(source_blob).hexdigest()
    bundle_id = config.get("bundle_id") or f"bundle-{source_hash[:12]}"
    created_from = {
        "source_hash": source_hash,
        "seed": seed,
        "tool_version": tool_version,
    }
    if "preset" in config:
        created_from["preset"] = config["preset"]
    return TrialBundle(
        bundle_id=bundle_id,
        presentation=config.get("presentation", PRESENTATION_FIXED),
        conditions=rendered,
        created_from=created_from,
    )


# the four classic regimes over the bundled corpus, ready to hand to readers
PRESETS: dict[str, dict] = {
    "cambridge": {
        "preset": "cambridge",
        "presentation": PRESENTATION_FIXED,
        "conditions": [
            {"name": "passage-plain", "source": "corpus:passage", "generator": "none"},
            {"name": "passage-jumbled", "source": "corpus:passage", "generator": "jumble"},
            {
                "name": "passage-stripped",
                "source": "corpus:passage",
                "strip": True,
                "lexicon": "passage",
                "generator": "none",
            },
            {
                "name": "passage-stripped-jumbled",
                "source": "corpus:passage",
                "strip": True,
                "lexicon": "passage",
                "generator": "jumble",
            },
            {
                "name": "passage-edit1",
                "source": "corpus:passage",
                "generator": "edit1",
                "mode": "unconstrained",
            },
            {"name": "words-plain", "source": "corpus:wordlist100", "generator": "none"},
            {"name": "words-jumbled", "source": "corpus:wordlist100", "generator": "jumble"},
            {
                "name": "words-edit1-unconstrained",
                "source": "corpus:wordlist100",
                "generator": "edit1",
                "mode": "unconstrained",
            },
            {
                "name": "words-edit1-fix-first",
                "source": "corpus:wordlist100",
                "generator": "edit1",
                "mode": "fix-first",
            },
            {
                "name": "words-edit1-fix-first-last",
                "source": "corpus:wordlist100",
                "generator": "edit1",
                "mode": "fix-first-last",
            },
            {
                "name": "words-edit1-qwerty",
                "source": "corpus:wordlist100",
                "generator": "edit1",
                "mode": "qwerty",
            },
        ],
    }
}
