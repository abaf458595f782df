"""Seeded synthetic corpora with known vague-term and entity densities.

Used by the benchmark suites (group comparison, classifier, neural
distillation) where ground-truth densities must be controlled.  All
randomness flows from the given seed; the vocabulary is chosen so that
filler words never collide with the bundled seed lexicons.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from vaguescope.corpus import CorpusDocument

# Marker pools are drawn from the bundled English seed lexicon.
SUBJECTIVE_MARKERS = (
    "big", "small", "good", "bad", "great", "important", "significant",
    "difficult", "interesting", "serious", "strong", "weak", "nice",
    "terrible", "very", "old", "wonderful", "excellent",
)
FACTUAL_MARKERS = ("some", "most", "several", "almost", "nearly", "often")

FILLER_WORDS = (
    "committee", "reviewed", "report", "during", "meeting", "regarding",
    "plans", "results", "data", "team", "market", "growth", "policy",
    "while", "members", "noted", "trends", "budget", "figures", "were",
    "presented", "discussed", "public", "response", "remained", "steady",
    "officials", "confirmed", "details", "schedule", "changes", "agenda",
    "and", "with", "for", "that", "this", "from", "into", "after",
)
ENTITY_NAMES = (
    "Paris", "Berlin", "Tokyo", "Nairobi", "Oslo", "Madrid", "Lima",
    "Cairo", "Toronto", "Dublin", "Vienna", "Lisbon",
)


@dataclass(frozen=True)
class GroupProfile:
    label: str
    vague_sentence_prob: float  # chance a sentence carries vague markers
    entity_sentence_prob: float = 0.5
    subjective_share: float = 0.75  # vague insertions that are subjective


REGULAR_PROFILE = GroupProfile("regular", vague_sentence_prob=0.2)
SATIRICAL_PROFILE = GroupProfile("satirical", vague_sentence_prob=0.6)


def make_sentence(rng: random.Random, profile: GroupProfile) -> str:
    words = ["the"] + rng.choices(FILLER_WORDS, k=rng.randint(7, 12))
    if rng.random() < profile.entity_sentence_prob:
        position = rng.randint(1, len(words) - 1)
        if rng.random() < 0.5:
            words.insert(position, rng.choice(ENTITY_NAMES))
        else:
            words.insert(position, str(rng.randint(1990, 2023)))
    if rng.random() < profile.vague_sentence_prob:
        for _ in range(rng.randint(1, 2)):
            pool = (
                SUBJECTIVE_MARKERS
                if rng.random() < profile.subjective_share
                else FACTUAL_MARKERS
            )
            words.insert(rng.randint(1, len(words) - 1), rng.choice(pool))
    words[0] = words[0].capitalize()
    return " ".join(words) + "."


def make_document(rng: random.Random, profile: GroupProfile) -> str:
    return " ".join(make_sentence(rng, profile) for _ in range(rng.randint(8, 16)))


def make_corpus(
    n_docs: int,
    seed: int = 42,
    profiles: tuple[GroupProfile, GroupProfile] = (REGULAR_PROFILE, SATIRICAL_PROFILE),
    language: str = "en",
) -> list[CorpusDocument]:
    """Balanced two-label corpus; deterministic for a given seed."""
    rng = random.Random(seed)
    docs = []
    for i in range(n_docs):
        profile = profiles[i % len(profiles)]
        docs.append(
            CorpusDocument(
                id=f"doc{i:05d}",
                label=profile.label,
                text=make_document(rng, profile),
                language=language,
            )
        )
    return docs
