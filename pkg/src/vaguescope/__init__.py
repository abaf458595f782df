"""Vagueness, subjectivity and detail scoring for texts.

The toolkit detects vague vocabulary with a four-category lexicon,
applies context rules that can cancel degree-vagueness, counts named
entities, and turns the resulting ratios into sentence and text level
scores, corpus statistics and classifier features.
"""

from vaguescope.lexicon import (
    Lexicon,
    LexiconEntry,
    LexiconError,
    VaguenessCategory,
    load_lexicon,
    merge_lexicons,
    save_lexicon,
)
from vaguescope.segmenter import Sentence, Token, split_sentences, tokenize
from vaguescope.matcher import CancelTables, VagueMatch, apply_cancellation, find_vague_terms, load_tables
from vaguescope.entities import EntitySpan, detect_entities, ingest_annotations
from vaguescope.scoring import (
    AnalyzedSentence,
    SentenceScores,
    TextScores,
    analyze_text,
    classify_prc_benchmark,
    score_sentence,
    score_text,
)

__version__ = "0.1.0"
