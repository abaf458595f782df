import pytest

from vaguescope.lexicon import (
    Lexicon,
    LexiconEntry,
    LexiconError,
    VaguenessCategory,
    load_lexicon,
    lookup_longest,
    merge_lexicons,
    save_lexicon,
)

V_A = VaguenessCategory.APPROXIMATION
V_G = VaguenessCategory.GENERALITY
V_D = VaguenessCategory.DEGREE
V_C = VaguenessCategory.COMBINATORIAL


def entry(term, category, language="en"):
    return LexiconEntry(term, category, language)


def test_category_split():
    assert len(VaguenessCategory) == 4
    assert {c for c in VaguenessCategory if c.subjective} == {V_D, V_C}
    assert {c for c in VaguenessCategory if c.factual} == {V_A, V_G}


def test_load_two_entries(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("excellent\tV_C\nsome\tV_G\n", encoding="utf-8")
    lex = load_lexicon(path, "en")
    assert len(lex) == 2
    assert lex.category_counts[V_C] == 1
    assert lex.category_counts[V_G] == 1


def test_load_empty_file(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("", encoding="utf-8")
    lex = load_lexicon(path, "en")
    assert len(lex) == 0
    assert all(n == 0 for n in lex.category_counts.values())


def test_load_reference_scale_counts(tmp_path):
    # Loader handles a full-size lexicon: 9 + 18 + 43 + 1570 entries.
    sizes = {V_A: 9, V_G: 18, V_D: 43, V_C: 1570}
    lines = [
        f"w{cat.value}{i}\t{cat.value}" for cat, n in sizes.items() for i in range(n)
    ]
    path = tmp_path / "full.tsv"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    lex = load_lexicon(path, "en")
    assert lex.category_counts == sizes
    assert len(lex) == 1640


def test_load_comments_and_duplicates(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("# comment\nbig\tV_D\nbig\tV_D\n", encoding="utf-8")
    assert len(load_lexicon(path, "en")) == 1


def test_load_ignores_score_column(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("durable\tV_C\t0.73\n", encoding="utf-8")
    lex = load_lexicon(path, "en")
    assert lex.get("durable").category is V_C


@pytest.mark.parametrize(
    "content,fragment",
    [
        ("big\tV_X\n", ":1"),
        ("\tV_D\n", ":1"),
        ("big\tV_D\nbig\tV_C\n", "big"),
        ("justoneword\n", ":1"),
    ],
)
def test_load_failures(tmp_path, content, fragment):
    path = tmp_path / "lex.tsv"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(LexiconError) as excinfo:
        load_lexicon(path, "en")
    assert fragment in str(excinfo.value)


def test_roundtrip(tmp_path, en_lexicon):
    path = tmp_path / "roundtrip.tsv"
    save_lexicon(en_lexicon, path)
    assert load_lexicon(path, "en").entries == en_lexicon.entries


def test_counts_sum_to_size(en_lexicon, fr_lexicon):
    for lex in (en_lexicon, fr_lexicon):
        assert sum(lex.category_counts.values()) == len(lex)


def test_merge_disjoint():
    a = Lexicon([entry("big", V_D)], "en")
    b = Lexicon([entry("durable", V_C)], "en")
    assert len(merge_lexicons(a, b)) == 2


def test_merge_idempotent():
    a = Lexicon([entry("big", V_D)], "en")
    assert len(merge_lexicons(a, a)) == 1


def test_merge_conflict_names_term():
    a = Lexicon([entry("big", V_D)], "en")
    b = Lexicon([entry("big", V_C)], "en")
    with pytest.raises(LexiconError, match="big"):
        merge_lexicons(a, b)


def test_merge_language_mismatch():
    a = Lexicon([entry("big", V_D)], "en")
    b = Lexicon([entry("grand", V_D, "fr")], "fr")
    with pytest.raises(LexiconError, match="language"):
        merge_lexicons(a, b)


def test_merge_commutative_and_associative():
    a = Lexicon([entry("big", V_D), entry("some", V_G)], "en")
    b = Lexicon([entry("durable", V_C)], "en")
    c = Lexicon([entry("almost", V_A), entry("big", V_D)], "en")
    assert merge_lexicons(a, b) == merge_lexicons(b, a)
    assert merge_lexicons(merge_lexicons(a, b), c) == merge_lexicons(
        a, merge_lexicons(b, c)
    )


def test_lookup_multiword():
    lex = Lexicon([entry("at most", V_G)], "en")
    assert lookup_longest(["at", "most", "five"], 0, lex) == (lex.get("at most"), 2)


def test_lookup_case_insensitive():
    lex = Lexicon([entry("excellent", V_C)], "en")
    result = lookup_longest(["Excellent", "idea"], 0, lex)
    assert result == (lex.get("excellent"), 1)


def test_lookup_prefers_longest():
    lex = Lexicon([entry("very", V_D), entry("very big", V_C)], "en")
    result = lookup_longest(["very", "big"], 0, lex)
    assert result == (lex.get("very big"), 2)


def test_lookup_no_match_and_bounds():
    lex = Lexicon([entry("at most", V_G)], "en")
    assert lookup_longest(["five", "at"], 0, lex) is None
    # A match never extends past the end of the word sequence.
    result = lookup_longest(["at"], 0, lex)
    assert result is None
    with pytest.raises(IndexError):
        lookup_longest(["at"], 3, lex)


def test_entry_validation():
    with pytest.raises(LexiconError):
        LexiconEntry("", V_D, "en")
    with pytest.raises(LexiconError):
        LexiconEntry("bad\tterm", V_D, "en")
    with pytest.raises(LexiconError):
        LexiconEntry("Upper", V_D, "en")
