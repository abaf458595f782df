"""Vague-term lexicons: loading, validation, merging and longest-match lookup.

A lexicon is an immutable set of (term, category, language) entries.
Terms are lowercase and may contain single spaces for multiword
expressions ("at most").  Each term carries exactly one category per
language; ambiguity must be resolved in the lexicon file itself.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence


class LexiconError(ValueError):
    """Raised for malformed lexicon files or inconsistent merges."""


class VaguenessCategory(enum.Enum):
    """The four vagueness categories.

    Approximation and generality are factual kinds of vagueness; degree
    and combinatorial vagueness are the subjective kinds.
    """

    APPROXIMATION = "V_A"
    GENERALITY = "V_G"
    DEGREE = "V_D"
    COMBINATORIAL = "V_C"

    @property
    def subjective(self) -> bool:
        return self in (VaguenessCategory.DEGREE, VaguenessCategory.COMBINATORIAL)

    @property
    def factual(self) -> bool:
        return not self.subjective


CATEGORY_LABELS = {c.value: c for c in VaguenessCategory}


@dataclass(frozen=True)
class LexiconEntry:
    term: str
    category: VaguenessCategory
    language: str

    def __post_init__(self) -> None:
        if not self.term or self.term != self.term.strip():
            raise LexiconError(f"empty or untrimmed term: {self.term!r}")
        if "\t" in self.term or "\n" in self.term:
            raise LexiconError(f"term contains tab or newline: {self.term!r}")
        if self.term != self.term.lower():
            raise LexiconError(f"term must be lowercase: {self.term!r}")

    @property
    def word_count(self) -> int:
        return self.term.count(" ") + 1


class Lexicon:
    """Immutable collection of vague-term entries for one language."""

    def __init__(self, entries: Iterable[LexiconEntry], language: str):
        self.language = language
        by_term: dict[str, LexiconEntry] = {}
        for entry in entries:
            if entry.language != language:
                raise LexiconError(
                    f"entry language {entry.language!r} does not match lexicon language {language!r}"
                )
            existing = by_term.get(entry.term)
            if existing is not None and existing.category is not entry.category:
                raise LexiconError(
                    f"term {entry.term!r} listed with two categories: "
                    f"{existing.category.value} and {entry.category.value}"
                )
            by_term[entry.term] = entry
        self._by_term = by_term
        self.max_words = max((e.word_count for e in by_term.values()), default=0)

    @property
    def entries(self) -> frozenset[LexiconEntry]:
        return frozenset(self._by_term.values())

    @property
    def category_counts(self) -> dict[VaguenessCategory, int]:
        counts = {c: 0 for c in VaguenessCategory}
        for entry in self._by_term.values():
            counts[entry.category] += 1
        return counts

    def __len__(self) -> int:
        return len(self._by_term)

    def __contains__(self, term: str) -> bool:
        return term in self._by_term

    def get(self, term: str) -> Optional[LexiconEntry]:
        return self._by_term.get(term)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self.language == other.language and self._by_term == other._by_term

    def __repr__(self) -> str:
        return f"Lexicon(language={self.language!r}, entries={len(self)})"


def load_lexicon(path: str | Path, language: str) -> Lexicon:
    """Load a tab-separated ``term<TAB>category`` lexicon file.

    Lines starting with ``#`` are comments; a third column (enrichment
    score) is accepted and ignored.  Duplicate identical lines collapse
    silently; the same term with two categories is an error.
    """
    if isinstance(path, str):
        path = Path(path)
    entries: dict[str, LexiconEntry] = {}
    with path.open(encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 2:
                raise LexiconError(f"{path}:{lineno}: expected 'term<TAB>category'")
            term = parts[0].strip().lower()
            label = parts[1].strip()
            if not term:
                raise LexiconError(f"{path}:{lineno}: empty term")
            category = CATEGORY_LABELS.get(label)
            if category is None:
                raise LexiconError(f"{path}:{lineno}: unknown category {label!r}")
            try:
                entry = LexiconEntry(term, category, language)
            except LexiconError as exc:
                raise LexiconError(f"{path}:{lineno}: {exc}") from exc
            existing = entries.get(term)
            if existing is not None and existing.category is not category:
                raise LexiconError(
                    f"{path}:{lineno}: term {term!r} already listed as {existing.category.value}"
                )
            entries[term] = entry
    return Lexicon(entries.values(), language)


def save_lexicon(lexicon: Lexicon, path: str | Path) -> None:
    """Write a lexicon back to its TSV carrier, sorted by term."""
    path = Path(path)
    lines = [f"{e.term}\t{e.category.value}" for e in sorted(lexicon.entries, key=lambda e: e.term)]
    path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def merge_lexicons(base: Lexicon, addition: Lexicon) -> Lexicon:
    """Union of two same-language lexicons; category conflicts are errors."""
    if base.language != addition.language:
        raise LexiconError(
            f"language mismatch: {base.language!r} vs {addition.language!r}"
        )
    merged: dict[str, LexiconEntry] = {e.term: e for e in base.entries}
    for entry in addition.entries:
        existing = merged.get(entry.term)
        if existing is not None and existing.category is not entry.category:
            raise LexiconError(
                f"category conflict for term {entry.term!r}: "
                f"{existing.category.value} vs {entry.category.value}"
            )
        merged[entry.term] = entry
    return Lexicon(merged.values(), base.language)


def lookup_longest(
    words: Sequence[str], start: int, lexicon: Lexicon
) -> Optional[tuple[LexiconEntry, int]]:
    """Longest lexicon match for the word sequence beginning at ``start``.

    Words are lowercased and space-joined before lookup.  Returns the
    matched entry and its span length, or ``None``.
    """
    if not 0 <= start < len(words):
        raise IndexError(f"start {start} out of range for {len(words)} words")
    longest = min(lexicon.max_words, len(words) - start)
    for length in range(longest, 0, -1):
        candidate = " ".join(w.lower() for w in words[start : start + length])
        entry = lexicon.get(candidate)
        if entry is not None:
            return entry, length
    return None
