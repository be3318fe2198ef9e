"""Tests for the emotion lexicon, word scoring and corpus totals."""

import pytest

from kolan.errors import BadCategory, InputIOError, ParseError
from kolan.model import CommentCorpus
from kolan.sentiment import (
    CATEGORIES,
    ZERO_VECTOR,
    CategoryTotals,
    DictionaryProvider,
    EmotionLexicon,
    ScoredWord,
    aggregate,
    load_lexicon,
    parse_lexicon,
    run_sentiment,
    score_word,
)

GOD = (0, 1, 0, 1, 1, 0, 1, 0, 0, 1)
SENSE = (0, 0, 0, 0, 0, 0, 1, 0, 0, 0)


def vector_of(*categories):
    return tuple(int(c in categories) for c in CATEGORIES)


# ===== FIXTURES =====


@pytest.fixture(scope="module")
def fixture_result(dataset, resources, lexicon):
    return run_sentiment(dataset.corpora, resources, lexicon, DictionaryProvider.from_file())


class TestLexicon:
    """Parsing and loading the word-emotion table."""

    def test_bundled_god(self, lexicon):
        """god carries anticipation, fear, joy, positive and trust."""
        assert lexicon.lookup("god") == GOD

    def test_categories_sorted(self):
        assert list(CATEGORIES) == sorted(CATEGORIES)
        assert len(CATEGORIES) == 10

    def test_duplicates_are_ored(self):
        lex = parse_lexicon("happy\tjoy\t1\nhappy\tjoy\t0\nhappy\ttrust\t1\n")
        assert lex.lookup("happy") == vector_of("joy", "trust")

    def test_all_zero_word_dropped(self):
        lex = parse_lexicon("# header\nbank\ttrust\t0\nbank\tanger\t0\n")
        assert "bank" not in lex
        assert len(lex) == 0

    def test_unknown_category(self):
        with pytest.raises(BadCategory) as exc:
            parse_lexicon("god\tjoy\t1\ngod\tawe\t1\n")
        assert exc.value.row == 2

    def test_bad_indicator(self):
        with pytest.raises(ParseError):
            parse_lexicon("god\tjoy\tyes\n")

    def test_empty_file(self, tmp_path):
        path = tmp_path / "lexicon.tsv"
        path.write_text("", encoding="utf-8")
        assert len(load_lexicon(path)) == 0

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputIOError):
            load_lexicon(tmp_path / "absent.tsv")

    def test_uppercase_word_rejected(self):
        with pytest.raises(ValueError):
            EmotionLexicon({"God": GOD})


class TestScoreWord:
    """Lookup of a translated word."""

    def test_known_words(self, lexicon):
        assert score_word("god", lexicon) == GOD
        assert score_word("sense", lexicon) == SENSE

    def test_unknown_word(self, lexicon):
        assert score_word("zzzz", lexicon) == ZERO_VECTOR

    def test_multi_word_falls_back_to_parts(self):
        lex = EmotionLexicon({"good": vector_of("joy"), "luck": vector_of("trust")})
        assert score_word("good luck", lex) == vector_of("joy", "trust")

    def test_multi_word_whole_entry_wins(self):
        lex = EmotionLexicon({"good luck": vector_of("anticipation"), "good": vector_of("joy")})
        assert score_word("good luck", lex) == vector_of("anticipation")


class TestAggregate:
    """Category totals over scored words."""

    def test_occurrence_weighting(self):
        words = [
            ScoredWord(text="allah", translated="god", vector=GOD, n=2),
            ScoredWord(text="akal", translated="sense", vector=SENSE, n=1),
        ]
        totals = aggregate(words)
        assert totals["positive"] == 3
        assert totals["trust"] == 2
        assert aggregate(words, unique=True)["positive"] == 2

    def test_additive_and_order_invariant(self):
        a = [ScoredWord(text="allah", translated="god", vector=GOD, n=2)]
        b = [ScoredWord(text="akal", translated="sense", vector=SENSE, n=3)]
        assert aggregate(a + b) == aggregate(a) + aggregate(b)
        assert aggregate(b + a) == aggregate(a + b)

    def test_empty_is_zero(self):
        assert aggregate([]) == CategoryTotals()

    def test_dominant_ties_alphabetical(self):
        totals = CategoryTotals({c: 0 for c in CATEGORIES})
        assert totals.dominant == list(CATEGORIES)

    def test_scored_word_rejects_bad_vector(self):
        with pytest.raises(ValueError):
            ScoredWord(text="x", translated="x", vector=(2,) * 10)


class TestFixtureSentiment:
    """End to end on the bundled comments with the dictionary provider."""

    def test_positive_dominates(self, fixture_result):
        dominant = fixture_result.dominant
        assert dominant[0] == "positive"
        assert {"trust", "joy", "anticipation"} <= set(dominant[:4])

    def test_weighted_totals(self, fixture_result):
        assert fixture_result.totals.totals == {
            "anger": 2,
            "anticipation": 7,
            "disgust": 0,
            "fear": 1,
            "joy": 6,
            "negative": 1,
            "positive": 10,
            "sadness": 0,
            "surprise": 2,
            "trust": 8,
        }

    def test_unique_weighting(self, dataset, resources, lexicon, provider):
        result = run_sentiment(dataset.corpora, resources, lexicon, provider, unique=True)
        assert result.unique
        assert result.totals["positive"] == 7
        assert result.totals["trust"] == 5

    def test_unscored_words(self, fixture_result):
        """Words without a lexicon hit are reported, never silently dropped."""
        assert fixture_result.unscored == ["ayo", "banget", "barang", "mengidam", "sbr"]
        assert len(fixture_result.words) == len(fixture_result.frequencies)

    def test_stopword_only_comments_score_nothing(self, resources, lexicon, provider):
        corpora = [CommentCorpus(kol_id="vina", comments=("Yang dan di", "the of and"))]
        result = run_sentiment(corpora, resources, lexicon, provider)
        assert len(result.frequencies) == 0
        assert result.words == ()
        assert result.totals == CategoryTotals()
        assert all(v == 0 for v in result.totals.totals.values())

    def test_allah_row(self, fixture_result):

        row = next(w for w in fixture_result.words if w.text == "allah")
        assert row.translated == "god"
        assert row.vector == GOD
        assert row.category("trust") == 1
