"""Tokenization into word/punct/whitespace spans, plus function-word stripping.

The tokenizer is deliberately dumb: a word is a maximal run of letters with
interior apostrophes ("doesn't" is one word, "'tis" is punct + word), runs of
whitespace are kept verbatim, and every other character (commas, hyphens,
digits, stray quotes) becomes a single punct token. Concatenating the token
texts always reproduces the input exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence


class TokenKind(Enum):
    WORD = "word"
    PUNCT = "punct"
    WHITESPACE = "whitespace"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    index: int


_SENTENCE_FINAL = frozenset(".!?")


def tokenize(text: str) -> list[Token]:
    """Split text into Word/Punct/Whitespace tokens; lossless by construction.

    A word is a maximal run of letters (str.isalpha) where an apostrophe is
    absorbed only when flanked by letters on both sides. Whitespace runs
    collapse into single tokens; any other character is one Punct token.
    """
    tokens = []
    n = len(text)
    i = 0
    while i < n:
        ch = text[i]
        if ch.isalpha():
            j = i + 1
            while j < n:
                c = text[j]
                if c.isalpha():
                    j += 1
                elif c == "'" and j + 1 < n and text[j + 1].isalpha():
                    j += 2
                else:
                    break
            kind = TokenKind.WORD
        elif ch.isspace():
            j = i + 1
            while j < n and text[j].isspace():
                j += 1
            kind = TokenKind.WHITESPACE
        else:
            j = i + 1
            kind = TokenKind.PUNCT
        tokens.append(Token(kind, text[i:j], len(tokens)))
        i = j
    return tokens


def detokenize(tokens: Iterable[Token]) -> str:
    return "".join(t.text for t in tokens)


def words(tokens: Iterable[Token]) -> list[Token]:
    return [t for t in tokens if t.kind is TokenKind.WORD]


def word_texts(tokens: Iterable[Token]) -> list[str]:
    return [t.text for t in tokens if t.kind is TokenKind.WORD]


@dataclass(frozen=True)
class StopwordLexicon:
    """A named set of function words; membership is case-insensitive."""

    words: frozenset[str]
    name: str = "custom"

    def __contains__(self, word: str) -> bool:
        return word.casefold() in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def from_words(cls, words: Iterable[str], name: str = "custom") -> "StopwordLexicon":
        return cls(frozenset(w.casefold() for w in words), name)

    @classmethod
    def from_file(cls, path: str | Path, name: str | None = None) -> "StopwordLexicon":
        """Load a lexicon file: one word per line, `#` comments, blanks ignored."""
        path = Path(path)
        entries = []
        for line in path.read_text(encoding="utf-8").splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                entries.append(line)
        return cls.from_words(entries, name=name or path.stem)


def strip_stopwords(tokens: Sequence[Token], lexicon: StopwordLexicon) -> list[Token]:
    """Drop lexicon words, keeping the rest in order.

    Whitespace is normalized to a single space between survivors. Sentence-final
    punctuation (. ! ?) is kept and attached to the preceding surviving word;
    all other punctuation (commas, quotes, ...) is dropped.
    """
    if not lexicon.words:
        raise ValueError("stopword lexicon is empty")
    out: list[Token] = []
    for tok in tokens:
        if tok.kind is TokenKind.WORD:
            if tok.text in lexicon:
                continue
            if out:
                out.append(Token(TokenKind.WHITESPACE, " ", 0))
            out.append(tok)
        elif tok.kind is TokenKind.PUNCT:
            keep = all(c in _SENTENCE_FINAL for c in tok.text)
            if keep and out and out[-1].kind is TokenKind.WORD:
                out.append(tok)
    return [replace(tok, index=i) for i, tok in enumerate(out)]
