"""Comment preprocessing: cleaning, tokenization, stopwords, lemmas, frequencies."""

from .pipeline import (
    STAGE_ORDER,
    FrequencyTable,
    Stage,
    TokenDoc,
    clean,
    lemmatize,
    prepare_corpora,
    prepare_corpus,
    remove_stopwords,
    tokenize,
    word_frequencies,
)
from .resources import (
    SlangMap,
    TextResources,
    load_lemma_lexicon,
    load_slang_map,
    load_stoplist,
)

__all__ = [
    "STAGE_ORDER",
    "FrequencyTable",
    "SlangMap",
    "Stage",
    "TextResources",
    "TokenDoc",
    "clean",
    "lemmatize",
    "load_lemma_lexicon",
    "load_slang_map",
    "load_stoplist",
    "prepare_corpora",
    "prepare_corpus",
    "remove_stopwords",
    "tokenize",
    "word_frequencies",
]
