"""Deterministic sentence splitting and tokenization.

The word count of a sentence (its scoring denominator) is the number of
word and number tokens; punctuation tokens never count.  Everything here
is rule-based so that scores are reproducible bit for bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal

TokenKind = Literal["word", "number", "punctuation"]

# Acronyms with internal periods ("U.S.") stay one token; numbers keep
# internal separators and an optional percent sign; words keep internal
# hyphens and apostrophes so "Covid-19" is a single word token.
_ACRONYM = r"(?:[^\W\d_]\.){2,}"
_NUMBER = r"\d+(?:[.,]\d+)*%?"
_WORD = r"\w+(?:[-'’]\w+)*"
_PUNCT = r"[^\w\s]+"
_TOKEN_RE = re.compile(f"({_ACRONYM})|({_NUMBER})|({_WORD})|({_PUNCT})")
_NUMBER_RE = re.compile(f"{_NUMBER}$")

_TERMINATOR_RE = re.compile(r"[.!?…]+")

# Abbreviations that never end a sentence, per language.
_ABBREVIATIONS: dict[str, frozenset[str]] = {
    "en": frozenset(
        """mr mrs ms dr prof sr jr st vs etc e.g i.e cf fig no inc ltd co al
        approx dept est gen gov sen rep rev hon capt col sgt""".split()
    ),
    "fr": frozenset(
        """m mm mme mlle dr st ste etc cf fig p ex av env boul nos vol""".split()
    ),
}


@dataclass(frozen=True)
class Token:
    surface: str
    kind: TokenKind
    char_start: int
    char_end: int

    @property
    def countable(self) -> bool:
        """True for tokens that count toward the sentence word total."""
        return self.kind in ("word", "number")


@dataclass(frozen=True)
class Sentence:
    text: str
    tokens: tuple[Token, ...]
    index: int

    @property
    def word_count(self) -> int:
        return sum(1 for t in self.tokens if t.countable)


def tokenize(text: str) -> tuple[Token, ...]:
    """Split a sentence into word, number and punctuation tokens."""
    tokens: list[Token] = []
    for match in _TOKEN_RE.finditer(text):
        surface = match.group(0)
        if match.group(2) is not None or _NUMBER_RE.fullmatch(surface):
            kind: TokenKind = "number"
        elif match.group(4) is not None:
            kind = "punctuation"
        else:
            kind = "word"
        tokens.append(Token(surface, kind, match.start(), match.end()))
    return tuple(tokens)


def _is_abbreviation(chunk: str, language: str) -> bool:
    bare = chunk.rstrip(".").lower()
    if not bare:
        return False
    if bare in _ABBREVIATIONS.get(language, _ABBREVIATIONS["en"]):
        return True
    # Single letters are initials ("J. Smith"); internal periods mark
    # acronyms ("U.S.") whose final dot is part of the token.
    if len(bare) == 1 and bare.isalpha():
        return True
    if "." in bare:
        return True
    return False


def _is_boundary(text: str, match: re.Match, language: str) -> bool:
    run = match.group(0)
    end = match.end()
    before = text[: match.start()]
    chunk_match = re.search(r"[\w.'’-]+$", before)
    chunk = chunk_match.group(0) if chunk_match else ""
    rest = text[end:]
    next_char = rest.lstrip()[:1]
    if "." in run and not any(c in run for c in "!?…"):
        if _is_abbreviation(chunk, language):
            return False
        # Decimal-internal periods never split.
        if chunk[-1:].isdigit() and next_char.isdigit() and not rest[:1].isspace():
            return False
    if next_char and next_char.islower():
        return False
    return True


def split_sentences(text: str, language: str = "en") -> list[Sentence]:
    """Split a document into sentences on final punctuation.

    A fixed abbreviation guard list keeps "Mr. Smith" together; text
    without any terminator is a single sentence.  Empty input yields an
    empty list.
    """
    boundaries: list[int] = []
    for match in _TERMINATOR_RE.finditer(text):
        if _is_boundary(text, match, language):
            end = match.end()
            # Pull trailing closing quotes/brackets into the sentence.
            while end < len(text) and text[end] in "\"')»”]":
                end += 1
            boundaries.append(end)
    sentences: list[Sentence] = []
    start = 0
    for end in boundaries + [len(text)]:
        segment = text[start:end].strip()
        if segment:
            sentences.append(Sentence(segment, tokenize(segment), len(sentences)))
        start = end
    return sentences
