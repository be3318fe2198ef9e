"""Emotion scoring of translated words and corpus totals."""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..model.profiles import CommentCorpus
from ..textprep.pipeline import FrequencyTable, prepare_corpora, word_frequencies
from ..textprep.resources import TextResources
from .lexicon import CATEGORIES, ZERO_VECTOR, EmotionLexicon, Vector, or_vectors
from .providers.base_provider import TranslationProvider
from .translation import TranslationCache, translate_words

logger = logging.getLogger(__name__)


def score_word(translated: str, lexicon: EmotionLexicon) -> Vector:
    """Indicator vector of an English word.

    A multi-word translation is looked up whole first; on a miss its
    constituent words are looked up and OR-ed. Anything not found scores
    all zeros.
    """
    vector = lexicon.lookup(translated)
    if vector is not None:
        return vector
    parts = translated.split()
    if len(parts) > 1:
        return or_vectors(*(lexicon.lookup(p) or ZERO_VECTOR for p in parts))
    return ZERO_VECTOR


@dataclass(frozen=True)
class ScoredWord:
    """One unique lemma with its translation, indicator vector and count."""

    text: str
    translated: str
    vector: Vector
    n: int = 1

    def __post_init__(self) -> None:
        if len(self.vector) != len(CATEGORIES) or any(b not in (0, 1) for b in self.vector):
            raise ValueError(f"{self.text}: vector must have {len(CATEGORIES)} 0/1 components")
        if self.n < 1:
            raise ValueError(f"{self.text}: count must be positive, got {self.n}")

    @property
    def scored(self) -> bool:
        return any(self.vector)

    def category(self, name: str) -> int:
        return self.vector[CATEGORIES.index(name)]


@dataclass(frozen=True)
class CategoryTotals:
    """Per-category totals over a set of scored words."""

    totals: Dict[str, int] = field(default_factory=lambda: {c: 0 for c in CATEGORIES})

    def __post_init__(self) -> None:
        if tuple(self.totals) != CATEGORIES:
            raise ValueError(f"totals must list exactly {CATEGORIES} in order")
        if any(v < 0 for v in self.totals.values()):
            raise ValueError("category totals must be non-negative")

    @property
    def dominant(self) -> List[str]:
        """Categories by total descending, ties alphabetical."""
        return sorted(CATEGORIES, key=lambda c: (-self.totals[c], c))

    def __add__(self, other: "CategoryTotals") -> "CategoryTotals":
        return CategoryTotals({c: self.totals[c] + other.totals[c] for c in CATEGORIES})

    def __getitem__(self, category: str) -> int:
        return self.totals[category]


def aggregate(scored: Iterable[ScoredWord], unique: bool = False) -> CategoryTotals:
    """Sum indicator vectors, weighted by occurrence count.

    Args:
        scored: Scored words
        unique: Count each word once instead of by its occurrences
    """
    sums = [0] * len(CATEGORIES)
    for word in scored:
        weight = 1 if unique else word.n
        for i, bit in enumerate(word.vector):
            sums[i] += bit * weight
    return CategoryTotals(dict(zip(CATEGORIES, sums)))


def score_table(
    pairs: Sequence[Tuple[str, str]], table: FrequencyTable, lexicon: EmotionLexicon
) -> List[ScoredWord]:
    """Scored rows for translated words, in frequency-table order."""
    counts = table.counts()
    return [
        ScoredWord(
            text=text,
            translated=translated,
            vector=score_word(translated, lexicon),
            n=counts[text],
        )
        for text, translated in pairs
    ]


@dataclass(frozen=True)
class SentimentResult:
    """Everything the sentiment review produces.

    Attributes:
        frequencies: Unique lemmas with counts
        words: Per-word scoring table in frequency order
        totals: Category totals
        unique: Whether totals count each word once
    """

    frequencies: FrequencyTable
    words: Tuple[ScoredWord, ...]
    totals: CategoryTotals
    unique: bool = False

    @property
    def dominant(self) -> List[str]:
        return self.totals.dominant

    @property
    def unscored(self) -> List[str]:
        """Lemmas whose translation has no lexicon entry, sorted."""
        return sorted(w.text for w in self.words if not w.scored)


def run_sentiment(
    corpora: Sequence[CommentCorpus],
    resources: TextResources,
    lexicon: EmotionLexicon,
    provider: TranslationProvider,
    cache: Optional[TranslationCache] = None,
    unique: bool = False,
) -> SentimentResult:
    """Run comments through preprocessing, translation, scoring and totals.

    Nothing is scored until every word has been translated, so a provider
    failure leaves no partial result.

    Raises:
        ProviderUnavailable: If translation fails
    """
    docs = prepare_corpora(corpora, resources)
    table = word_frequencies(docs)
    pairs = translate_words([text for text, _ in table], provider, cache)
    words = score_table(pairs, table, lexicon)
    totals = aggregate(words, unique=unique)
    scored = sum(1 for w in words if w.scored)
    logger.info(
        "sentiment: %d lemmas (%d unique), %d scored, dominant=%s",
        table.total,
        len(table),
        scored,
        totals.dominant[0] if table.total else "none",
    )
    return SentimentResult(frequencies=table, words=tuple(words), totals=totals, unique=unique)
