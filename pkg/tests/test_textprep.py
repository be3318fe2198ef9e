"""Tests for the comment text pipeline and its resource files."""

import pytest

from kolan.errors import InputIOError, MissingStoplist, ParseError, SlangCycle, StageError
from kolan.model import CommentCorpus
from kolan.textprep import (
    FrequencyTable,
    SlangMap,
    Stage,
    TokenDoc,
    clean,
    lemmatize,
    load_lemma_lexicon,
    load_slang_map,
    load_stoplist,
    prepare_corpora,
    prepare_corpus,
    remove_stopwords,
    tokenize,
    word_frequencies,
)


def lemma_doc(kol_id, tokens):
    return TokenDoc(kol_id=kol_id, stage=Stage.LEMMATIZED, tokens=tuple(tokens))


class TestClean:
    """Lowercasing and removal of everything that is not a letter."""

    @pytest.mark.parametrize(
        "raw, expected",
        [
            ("SBR011 mantap!!! 💰", "sbr mantap"),
            ("Investasi 5 juta, ayo.", "investasi juta ayo"),
            ("  Semangat\tterus\nkak  ", "semangat terus kak"),
            ("2022!!! 😂😂", ""),
            ("", ""),
        ],
    )
    def test_examples(self, raw, expected):
        assert clean(raw) == expected

    def test_idempotent(self):
        for raw in ("Uangnya di bank, ayo investasi!", "Bgt mahal sih barangnya"):
            once = clean(raw)
            assert clean(once) == once

    def test_output_alphabet(self):
        cleaned = clean("Rp.100rb/bln @vina #cuan :)")
        assert all(ch.isalpha() or ch == " " for ch in cleaned)
        assert "  " not in cleaned


class TestTokenizeAndStopwords:
    """Splitting and stoplist filtering."""

    def test_tokenize(self):
        assert tokenize("aman banget kak") == ["aman", "banget", "kak"]
        assert tokenize("") == []
        assert tokenize("a a a") == ["a", "a", "a"]

    def test_remove_stopwords_keeps_order(self):
        tokens = ["uang", "dan", "the", "bank", "uang"]
        assert remove_stopwords(tokens, {"dan"}, {"the"}) == ["uang", "bank", "uang"]

    def test_remove_stopwords_idempotent(self, resources):
        tokens = tokenize(clean("Uangnya yang di bank dan the investasi, ayo of!"))
        once = remove_stopwords(tokens, resources.stop_id, resources.stop_en)
        assert remove_stopwords(once, resources.stop_id, resources.stop_en) == once

    def test_bundled_stoplists(self, resources):

        assert resources.is_stopword("yang")
        assert resources.is_stopword("the")
        assert not resources.is_stopword("investasi")


class TestLemmatize:
    """Slang map, then lemma table, then identity."""

    def test_slang_then_lemma(self, resources):
        assert lemmatize("nyidam", resources.lemmas, resources.slang) == "mengidam"
        assert lemmatize("ngelamar", resources.lemmas, resources.slang) == "melamar"
        assert lemmatize("bgt", resources.lemmas, resources.slang) == "banget"

    def test_lemma_table(self, resources):
        assert lemmatize("uangnya", resources.lemmas, resources.slang) == "uang"

    def test_unknown_is_identity(self, resources):
        assert lemmatize("zzz", resources.lemmas, resources.slang) == "zzz"

    def test_no_letters(self, resources):
        assert lemmatize("123", resources.lemmas, resources.slang) == ""


class TestTokenDoc:
    """Stage discipline."""

    def test_advance_in_order(self):
        doc = TokenDoc(kol_id="vina", stage=Stage.RAW, tokens=("Halo!",))
        doc = doc.advance(Stage.CLEANED, ["halo"])
        assert doc.stage is Stage.CLEANED
        assert doc.tokens == ("halo",)

    def test_skip_rejected(self):
        doc = TokenDoc(kol_id="vina", stage=Stage.RAW)
        with pytest.raises(StageError):
            doc.advance(Stage.STOPPED, [])

    def test_no_stage_after_lemmatized(self):
        with pytest.raises(StageError):
            lemma_doc("vina", ["uang"]).advance(Stage.RAW, [])

    def test_lemmatized_tokens_are_words(self):
        with pytest.raises(ValueError):
            lemma_doc("vina", ["Uang"])


class TestWordFrequencies:
    """Pooled counts, most frequent first, ties alphabetical."""

    def test_ordering(self):
        counts = [
            ("juta", 2),
            ("bank", 2),
            ("uang", 3),
            ("investasi", 5),
            ("gudang", 2),
            ("barang", 4),
            ("duit", 2),
            ("banget", 4),
            ("bahan", 2),
            ("mengatur", 3),
        ]
        tokens = [word for word, n in counts for _ in range(n)]
        table = word_frequencies([lemma_doc("a", tokens[:11]), lemma_doc("b", tokens[11:])])

        assert list(table) == [
            ("investasi", 5),
            ("banget", 4),
            ("barang", 4),
            ("mengatur", 3),
            ("uang", 3),
            ("bahan", 2),
            ("bank", 2),
            ("duit", 2),
            ("gudang", 2),
            ("juta", 2),
        ]
        assert table.total == len(tokens)

    def test_wrong_stage(self):
        with pytest.raises(StageError):
            word_frequencies([TokenDoc(kol_id="vina", stage=Stage.STOPPED)])

    def test_top(self):
        table = word_frequencies([lemma_doc("a", ["b", "a", "a", "c"])])
        assert list(table.top(2)) == [("a", 2), ("b", 1)]
        assert len(table.top(0)) == 0

    def test_unsorted_rows_rejected(self):
        with pytest.raises(ValueError):
            FrequencyTable((("a", 1), ("b", 2)))


class TestPrepareCorpora:
    """The full pipeline on corpora."""

    def test_single_corpus(self, resources):
        corpus = CommentCorpus(kol_id="vina", comments=("Uangnya di bank, ayo investasi!",))
        doc = prepare_corpus(corpus, resources)
        assert doc.stage is Stage.LEMMATIZED
        assert doc.tokens == ("uang", "bank", "ayo", "investasi")

    def test_bundled_corpora(self, dataset, resources):
        docs = prepare_corpora(dataset.corpora, resources)
        table = word_frequencies(docs)
        assert [d.kol_id for d in docs] == ["vina", "morgan", "sigi"]
        assert table.total == 22
        assert len(table) == 15
        assert table.rows[0] == ("investasi", 3)
        assert table.total == sum(len(d.tokens) for d in docs)

    def test_stopword_only_corpus(self, resources):
        """Nothing survives, so the frequency table is empty."""
        corpus = CommentCorpus(kol_id="vina", comments=("Yang dan di!", "the AND of"))
        docs = prepare_corpora([corpus], resources)
        assert docs[0].tokens == ()
        table = word_frequencies(docs)
        assert len(table) == 0
        assert table.total == 0

    def test_empty_corpus_skipped(self, resources, caplog):

        corpora = [
            CommentCorpus(kol_id="vina"),
            CommentCorpus(kol_id="sigi", comments=("Bank",)),
        ]
        docs = prepare_corpora(corpora, resources)
        assert [d.kol_id for d in docs] == ["sigi"]
        assert "vina" in caplog.text


class TestResources:
    """Loading stoplists, lemma tables and slang maps."""

    def test_missing_stoplist(self, tmp_path):
        with pytest.raises(MissingStoplist):
            load_stoplist(tmp_path / "stopwords.txt")

    def test_missing_stoplist_is_io_error(self, tmp_path):
        with pytest.raises(InputIOError):
            load_stoplist(tmp_path / "stopwords.txt")

    def test_stoplist_comments_and_case(self, tmp_path):
        path = tmp_path / "stop.txt"
        path.write_text("# comment\nDan\n\nyang\n", encoding="utf-8")
        assert load_stoplist(path) == frozenset({"dan", "yang"})

    def test_bad_lemma_line(self, tmp_path):
        path = tmp_path / "lemmas.tsv"
        path.write_text("uangnya uang\n", encoding="utf-8")
        with pytest.raises(ParseError):
            load_lemma_lexicon(path)

    def test_slang_cycle(self):
        with pytest.raises(SlangCycle):
            SlangMap({"bgt": "banget", "banget": "bngt"})

    def test_slang_cycle_from_file(self, tmp_path):
        path = tmp_path / "slang.tsv"
        path.write_text("gk\ttidak\ntidak\tgak\n", encoding="utf-8")
        with pytest.raises(SlangCycle):
            load_slang_map(path)

    def test_bundled_slang_loads(self, resources):
        assert resources.slang.get("nyidam") == "mengidam"
        assert resources.slang.get("mengidam") is None
