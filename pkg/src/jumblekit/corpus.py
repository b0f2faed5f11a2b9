"""Access to the bundled data: corpus texts, lexicons, keyboard layouts, schemas.

The corpus ships the classic "jumbled letters" demonstration texts: the
circulated Cambridge-style scrambled paragraph with its word-aligned
original, a plain reading passage with its published function-word-free
form, and a 100-word list with jumbled and distance-1-perturbed variants
under each constraint regime. Several of the published variants contain
known irregularities (words whose letters do not actually match the
original); they are shipped verbatim because surfacing such anomalies is
exactly what the verifier is for.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib.resources import files
from pathlib import Path


def _data_dir():
    return files("jumblekit") / "data"


def corpus_names() -> list[str]:
    return sorted(p.name.removesuffix(".txt") for p in (_data_dir() / "corpus").iterdir())


def corpus_text(name: str) -> str:
    path = _data_dir() / "corpus" / f"{name}.txt"
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise KeyError(
            f"no bundled corpus text {name!r}; available: {', '.join(corpus_names())}"
        ) from None


def lexicon_names() -> list[str]:
    return sorted(p.name.removesuffix(".txt") for p in (_data_dir() / "lexicons").iterdir())


@lru_cache(maxsize=None)
def lexicon(name: str):
    from .tokens import StopwordLexicon

    path = _data_dir() / "lexicons" / f"{name}.txt"
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise KeyError(
            f"no bundled lexicon {name!r}; available: {', '.join(lexicon_names())}"
        ) from None
    entries = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            entries.append(line)
    return StopwordLexicon.from_words(entries, name=name)


@lru_cache(maxsize=None)
def keyboard(name: str = "qwerty"):
    from importlib.resources import as_file

    from .perturb import KeyboardLayout

    resource = _data_dir() / "keyboards" / f"{name}.kbd"
    # the resource may live inside a zip; as_file materializes a real path
    with as_file(resource) as path:
        return KeyboardLayout.from_file(Path(path), name=name)


@lru_cache(maxsize=None)
def schema(name: str) -> dict:
    path = _data_dir() / "schemas" / f"{name}.schema.json"
    return json.loads(path.read_text(encoding="utf-8"))
