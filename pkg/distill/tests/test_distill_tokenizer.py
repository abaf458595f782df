"""Token parity between the distill tokenizer and the primary segmenter."""

from vaguescope.segmenter import tokenize

from vaguescope_distill.tokenizer import word_tokens


def primary_word_tokens(text):
    return [t.surface for t in tokenize(text) if t.countable]


def test_parity_on_shared_fixture(pairs):
    """Bit-exact word-token parity on 200 exported sentences."""
    sentences = [p.text for p in pairs[:200]]
    assert len(sentences) == 200
    for text in sentences:
        assert word_tokens(text) == primary_word_tokens(text)


def test_parity_on_tricky_surfaces():
    cases = [
        "The U.S. economy grew 3.5% in 1995.",
        "Prices rose by 1,000 euros, more or less.",
        "It's a state-of-the-art plan; critics disagree!",
        "He said: \"wait...\" and left at 5 p.m.",
        "L'accord, tres important, date de 2020.",
    ]
    for text in cases:
        assert word_tokens(text) == primary_word_tokens(text)


def test_punctuation_dropped():
    assert word_tokens("Well, yes; no.") == ["Well", "yes", "no"]


def test_empty_text():
    assert word_tokens("") == []
    assert word_tokens("...") == []
