"""Vague-term detection and vagueness-cancellation rules.

Detection is a greedy left-to-right longest-match scan over the word and
number tokens of a sentence.  Cancellation marks degree-vagueness
matches that sit in a comparative construction ("taller ... than") or a
measure phrase ("5 feet tall"); superlatives and the other three
categories are never cancelled.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
from typing import Literal, Optional, Sequence

from vaguescope.lexicon import Lexicon, LexiconEntry, VaguenessCategory
from vaguescope.segmenter import Sentence

CancelReason = Literal["comparative", "measure_phrase"]

# Pre/post trigger words for the comparative rule, per language.
_MORE_WORDS = {"en": frozenset({"more", "less"}), "fr": frozenset({"plus", "moins"})}
_THAN_WORDS = {"en": frozenset({"than"}), "fr": frozenset({"que"})}
_THAN_PREFIXES = {"en": (), "fr": ("qu'", "qu’")}


@dataclass(frozen=True)
class VagueMatch:
    entry: LexiconEntry
    token_start: int
    token_len: int
    cancelled: bool = False
    cancel_reason: Optional[CancelReason] = None

    def surface(self, sentence: Sentence) -> str:
        parts = sentence.tokens[self.token_start : self.token_start + self.token_len]
        return " ".join(t.surface for t in parts)


@dataclass(frozen=True)
class CancelTables:
    """Per-language trigger inventories for the cancellation rules.

    ``comparatives`` maps inflected comparative forms to their base
    adjective and doubles as the inflection map for degree adjectives.
    """

    language: str
    comparatives: dict[str, str]
    units: frozenset[str]

    @property
    def more_words(self) -> frozenset[str]:
        return _MORE_WORDS.get(self.language, _MORE_WORDS["en"])

    def is_than(self, surface: str) -> bool:
        lowered = surface.lower()
        if lowered in _THAN_WORDS.get(self.language, _THAN_WORDS["en"]):
            return True
        return lowered.startswith(_THAN_PREFIXES.get(self.language, ()))


def load_tables(
    language: str,
    comparatives_path: str | Path | None = None,
    units_path: str | Path | None = None,
) -> CancelTables:
    """Load comparative and unit tables, defaulting to the bundled ones."""
    data = resources.files("vaguescope") / "data"
    comp_file = Path(comparatives_path) if comparatives_path else data / f"comparatives_{language}.tsv"
    unit_file = Path(units_path) if units_path else data / f"units_{language}.txt"
    comparatives: dict[str, str] = {}
    for lineno, line in enumerate(comp_file.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise ValueError(f"{comp_file}:{lineno}: expected 'inflected<TAB>base'")
        comparatives[parts[0].strip().lower()] = parts[1].strip().lower()
    units = frozenset(
        line.strip().lower()
        for line in unit_file.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    )
    return CancelTables(language, comparatives, units)


def find_vague_terms(
    sentence: Sentence, lexicon: Lexicon, tables: CancelTables | None = None
) -> list[VagueMatch]:
    """Greedy longest-match scan of a sentence against the lexicon.

    Multiword entries match contiguous word/number tokens only.  When
    tables are given, comparative inflections of degree adjectives
    ("taller") match their base entry.
    """
    tokens = sentence.tokens
    matches: list[VagueMatch] = []
    i = 0
    while i < len(tokens):
        if not tokens[i].countable:
            i += 1
            continue
        span = _longest_span(tokens, i, lexicon)
        if span is None and tables is not None:
            base = tables.comparatives.get(tokens[i].surface.lower())
            if base is not None:
                entry = lexicon.get(base)
                if entry is not None and entry.category is VaguenessCategory.DEGREE:
                    span = (entry, 1)
        if span is None:
            i += 1
        else:
            entry, length = span
            matches.append(VagueMatch(entry, i, length))
            i += length
    return matches


def _longest_span(
    tokens: Sequence, start: int, lexicon: Lexicon
) -> Optional[tuple[LexiconEntry, int]]:
    longest = min(lexicon.max_words, len(tokens) - start)
    for length in range(longest, 0, -1):
        window = tokens[start : start + length]
        if any(not t.countable for t in window):
            continue
        entry = lexicon.get(" ".join(t.surface.lower() for t in window))
        if entry is not None:
            return entry, length
    return None


def apply_cancellation(
    matches: Sequence[VagueMatch], sentence: Sentence, tables: CancelTables
) -> list[VagueMatch]:
    """Flip the cancelled flag on degree matches in cancelling contexts.

    Never adds or removes matches.  A degree match is cancelled as
    comparative when it is an inflected comparative form (or directly
    preceded by "more"/"less") and a "than" equivalent follows later in
    the sentence; it is cancelled as measure phrase when preceded by a
    number token followed by a unit word.
    """
    tokens = sentence.tokens
    out: list[VagueMatch] = []
    for match in matches:
        reason: Optional[CancelReason] = None
        if match.entry.category is VaguenessCategory.DEGREE:
            if _comparative_context(match, tokens, tables):
                reason = "comparative"
            elif _measure_context(match, tokens, tables):
                reason = "measure_phrase"
        if reason is None:
            out.append(replace(match, cancelled=False, cancel_reason=None))
        else:
            out.append(replace(match, cancelled=True, cancel_reason=reason))
    return out


def _comparative_context(match: VagueMatch, tokens, tables: CancelTables) -> bool:
    start = match.token_start
    surface = tokens[start].surface.lower()
    inflected = surface in tables.comparatives
    preceded = start >= 1 and tokens[start - 1].surface.lower() in tables.more_words
    if not (inflected or preceded):
        return False
    after = tokens[start + match.token_len :]
    return any(tables.is_than(t.surface) for t in after if t.countable)


def _measure_context(match: VagueMatch, tokens, tables: CancelTables) -> bool:
    start = match.token_start
    if start < 2:
        return False
    number = tokens[start - 2]
    unit = tokens[start - 1]
    return number.kind == "number" and unit.surface.lower() in tables.units
