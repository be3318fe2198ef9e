"""Word lists and tables the text pipeline reads: stoplists, lemmas and slang."""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, Iterator, Optional, Tuple, Union

from ..bundled import LEMMAS, SLANG, STOPWORDS_EN, STOPWORDS_ID, bundled_path
from ..errors import InputIOError, MissingStoplist, ParseError, SlangCycle

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _is_word(text: str) -> bool:
    return bool(text) and text.isalpha() and text == text.lower()


def _read_text(path: PathLike) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise InputIOError(path, str(e)) from e


def _data_lines(text: str) -> Iterator[Tuple[int, str]]:
    """Yield (line number, stripped line), skipping blanks and # comments."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, stripped


def _parse_pairs(text: str, what: str) -> Dict[str, str]:
    pairs: Dict[str, str] = {}
    for lineno, line in _data_lines(text):
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(lineno, what, f"expected word<TAB>{what}, got {line!r}")
        word, target = fields[0].strip(), fields[1].strip()
        if not _is_word(word) or not _is_word(target):
            raise ParseError(lineno, what, f"entries must be lowercase letters: {line!r}")
        pairs[word] = target
    return pairs


def load_stoplist(path: PathLike) -> FrozenSet[str]:
    """Read a one-word-per-line stoplist.

    Raises:
        MissingStoplist: If the file cannot be read
    """
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise MissingStoplist(path, str(e)) from e
    words = frozenset(line.lower() for _, line in _data_lines(text))
    logger.debug("loaded %d stopwords from %s", len(words), path)
    return words


def load_lemma_lexicon(path: PathLike) -> Dict[str, str]:
    """Read a word<TAB>lemma table."""
    return _parse_pairs(_read_text(path), "lemma")


@dataclass(frozen=True)
class SlangMap:
    """Non-standard token to standard form.

    Keys and values are lowercase letters, and no value is also a key, so a
    single lookup is always final.
    """

    entries: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for key, value in self.entries.items():
            if not _is_word(key) or not _is_word(value):
                raise ValueError(f"slang entries must be lowercase letters: {key!r} -> {value!r}")
            if value in self.entries:
                raise SlangCycle(f"slang value {value!r} (from {key!r}) is also a key")

    def get(self, token: str) -> Optional[str]:
        return self.entries.get(token)

    def __len__(self) -> int:
        return len(self.entries)


def load_slang_map(path: PathLike) -> SlangMap:
    """Read a word<TAB>standard-form slang table.

    Raises:
        ParseError: On a malformed line
        SlangCycle: If a standard form is also listed as slang
    """
    return SlangMap(_parse_pairs(_read_text(path), "standard form"))


@dataclass(frozen=True)
class TextResources:
    """Everything the pipeline needs besides the comments themselves."""

    stop_id: FrozenSet[str]
    stop_en: FrozenSet[str]
    lemmas: Dict[str, str]
    slang: SlangMap

    @classmethod
    def load(
        cls,
        stopwords_id: Optional[PathLike] = None,
        stopwords_en: Optional[PathLike] = None,
        lemmas: Optional[PathLike] = None,
        slang: Optional[PathLike] = None,
    ) -> "TextResources":
        """Load from the given paths, falling back to the bundled files."""
        resources = cls(
            stop_id=load_stoplist(stopwords_id or bundled_path(STOPWORDS_ID)),
            stop_en=load_stoplist(stopwords_en or bundled_path(STOPWORDS_EN)),
            lemmas=load_lemma_lexicon(lemmas or bundled_path(LEMMAS)),
            slang=load_slang_map(slang or bundled_path(SLANG)),
        )
        logger.info(
            "text resources: %d+%d stopwords, %d lemmas, %d slang entries",
            len(resources.stop_id),
            len(resources.stop_en),
            len(resources.lemmas),
            len(resources.slang),
        )
        return resources

    def is_stopword(self, token: str) -> bool:
        return token in self.stop_id or token in self.stop_en
