"""Comment text pipeline: clean, tokenize, drop stopwords, lemmatize, count.

A TokenDoc carries one influencer's comments through the stages. While Raw or
Cleaned its tokens are whole comment strings; from Tokenized on they are
single words.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import AbstractSet, Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from ..errors import StageError
from ..model.profiles import CommentCorpus
from .resources import SlangMap, TextResources

logger = logging.getLogger(__name__)


class Stage(str, Enum):
    RAW = "Raw"
    CLEANED = "Cleaned"
    TOKENIZED = "Tokenized"
    STOPPED = "Stopped"
    LEMMATIZED = "Lemmatized"


STAGE_ORDER: Tuple[Stage, ...] = tuple(Stage)


@dataclass(frozen=True)
class TokenDoc:
    """One corpus at one pipeline stage."""

    kol_id: str
    stage: Stage
    tokens: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.stage is Stage.LEMMATIZED:
            for token in self.tokens:
                if not (token.isalpha() and token == token.lower()):
                    raise ValueError(f"lemmatized token {token!r} is not lowercase letters")

    def advance(self, stage: Stage, tokens: Iterable[str]) -> "TokenDoc":
        """Move to the next stage.

        Raises:
            StageError: If ``stage`` is not the one right after the current stage
        """
        current = STAGE_ORDER.index(self.stage)
        if current + 1 >= len(STAGE_ORDER) or STAGE_ORDER[current + 1] is not stage:
            raise StageError(
                f"{self.kol_id}: cannot move from {self.stage.value} to {stage.value}"
            )
        return TokenDoc(kol_id=self.kol_id, stage=stage, tokens=tuple(tokens))


def clean(raw: str) -> str:
    """Lowercase and keep only letters, with single spaces between words.

    Digits, punctuation, symbols and emoji are deleted outright, so
    "SBR011" becomes "sbr". Letters are Unicode letters.
    """
    kept: List[str] = []
    for ch in raw.lower():
        if ch.isalpha():
            kept.append(ch)
        elif ch.isspace():
            kept.append(" ")
    return " ".join("".join(kept).split())


def tokenize(cleaned: str) -> List[str]:
    return [token for token in cleaned.split(" ") if token]


def remove_stopwords(
    tokens: Sequence[str], stop_id: AbstractSet[str], stop_en: AbstractSet[str]
) -> List[str]:
    """Drop tokens found in either stoplist, preserving order."""
    return [t for t in tokens if t not in stop_id and t not in stop_en]


def lemmatize(token: str, lemma_lexicon: Mapping[str, str], slang: SlangMap) -> str:
    """Reduce a token to its standard base form.

    Resolution order: slang map, then lemma table on the (possibly
    rewritten) token, then the token itself. Returns "" for a token with no
    letters.
    """
    word = "".join(ch for ch in token.lower() if ch.isalpha())
    word = slang.get(word) or word
    return lemma_lexicon.get(word, word)


@dataclass(frozen=True)
class FrequencyTable:
    """Unique words with occurrence counts, most frequent first.

    Attributes:
        rows: (text, n) pairs sorted by n descending then text ascending
    """

    rows: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        """Validate ordering, uniqueness and positive counts."""
        texts = [text for text, _ in self.rows]
        if len(set(texts)) != len(texts):
            raise ValueError("frequency table entries must be unique")
        if any(n < 1 for _, n in self.rows):
            raise ValueError("frequency counts must be positive")
        if list(self.rows) != sorted(self.rows, key=lambda row: (-row[1], row[0])):
            raise ValueError("frequency table must be sorted by count desc, then text")

    def top(self, k: int) -> "FrequencyTable":
        """The first ``k`` rows."""
        return FrequencyTable(self.rows[: max(k, 0)])

    @property
    def total(self) -> int:
        """Total token occurrences."""
        return sum(n for _, n in self.rows)

    def counts(self) -> Dict[str, int]:
        return dict(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[Tuple[str, int]]:
        return iter(self.rows)


def word_frequencies(docs: Iterable[TokenDoc]) -> FrequencyTable:
    """Pool lemma counts across documents.

    Raises:
        StageError: If any document is not Lemmatized
    """
    counter: Counter[str] = Counter()
    for doc in docs:
        if doc.stage is not Stage.LEMMATIZED:
            raise StageError(f"{doc.kol_id}: expected Lemmatized, got {doc.stage.value}")
        counter.update(doc.tokens)
    return FrequencyTable(tuple(sorted(counter.items(), key=lambda row: (-row[1], row[0]))))


def prepare_corpus(corpus: CommentCorpus, resources: TextResources) -> TokenDoc:
    """Run one corpus through every stage up to Lemmatized.

    Lemmas that land in a stoplist after normalization are dropped as well.
    """
    doc = TokenDoc(kol_id=corpus.kol_id, stage=Stage.RAW, tokens=corpus.comments)
    doc = doc.advance(Stage.CLEANED, (clean(c) for c in doc.tokens))
    doc = doc.advance(Stage.TOKENIZED, (t for c in doc.tokens for t in tokenize(c)))
    doc = doc.advance(
        Stage.STOPPED, remove_stopwords(doc.tokens, resources.stop_id, resources.stop_en)
    )
    lemmas = (lemmatize(t, resources.lemmas, resources.slang) for t in doc.tokens)
    doc = doc.advance(
        Stage.LEMMATIZED,
        (lemma for lemma in lemmas if lemma and not resources.is_stopword(lemma)),
    )
    logger.debug(
        "%s: %d comments -> %d lemmas", corpus.kol_id, len(corpus.comments), len(doc.tokens)
    )
    return doc


def prepare_corpora(
    corpora: Iterable[CommentCorpus], resources: TextResources
) -> List[TokenDoc]:
    """Prepare every admitted corpus, in input order.

    Corpora without comments are skipped with a warning.
    """
    docs: List[TokenDoc] = []
    for corpus in corpora:
        if not corpus.admitted:
            logger.warning("skipping empty comment corpus for %s", corpus.kol_id)
            continue
        docs.append(prepare_corpus(corpus, resources))
    return docs
