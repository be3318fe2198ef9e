"""Translation-bridged emotion scoring of audience comments."""

from .lexicon import CATEGORIES, ZERO_VECTOR, EmotionLexicon, load_lexicon, parse_lexicon
from .providers import DictionaryProvider, HttpProvider, TranslationProvider
from .scoring import (
    CategoryTotals,
    ScoredWord,
    SentimentResult,
    aggregate,
    run_sentiment,
    score_table,
    score_word,
)
from .translation import TranslationCache, translate_words

__all__ = [
    "CATEGORIES",
    "ZERO_VECTOR",
    "CategoryTotals",
    "DictionaryProvider",
    "EmotionLexicon",
    "HttpProvider",
    "ScoredWord",
    "SentimentResult",
    "TranslationCache",
    "TranslationProvider",
    "aggregate",
    "load_lexicon",
    "parse_lexicon",
    "run_sentiment",
    "score_table",
    "score_word",
    "translate_words",
]
