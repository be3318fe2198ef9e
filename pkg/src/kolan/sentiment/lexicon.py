"""Word-emotion association lexicon.

The file format is one association per line, ``word<TAB>category<TAB>0|1``,
with the ten categories of the word-level emotion lexicon. Words whose every
association is 0 are not kept, so a word is in the lexicon exactly when it
has at least one category set.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..bundled import LEXICON, bundled_path
from ..errors import BadCategory, InputIOError, ParseError

logger = logging.getLogger(__name__)

CATEGORIES: Tuple[str, ...] = (
    "anger",
    "anticipation",
    "disgust",
    "fear",
    "joy",
    "negative",
    "positive",
    "sadness",
    "surprise",
    "trust",
)

Vector = Tuple[int, ...]
ZERO_VECTOR: Vector = (0,) * len(CATEGORIES)


def or_vectors(*vectors: Vector) -> Vector:
    """Componentwise OR of indicator vectors."""
    return tuple(int(any(bits)) for bits in zip(ZERO_VECTOR, *vectors))


@dataclass(frozen=True)
class EmotionLexicon:
    """English word -> 10-component 0/1 indicator over CATEGORIES."""

    entries: Dict[str, Vector] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for word, vector in self.entries.items():
            if word != word.lower():
                raise ValueError(f"lexicon words must be lowercase, got {word!r}")
            if len(vector) != len(CATEGORIES) or any(bit not in (0, 1) for bit in vector):
                raise ValueError(f"{word!r}: vector must have {len(CATEGORIES)} 0/1 components")

    def lookup(self, word: str) -> Optional[Vector]:
        return self.entries.get(word)

    def __contains__(self, word: object) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def parse_lexicon(text: str) -> EmotionLexicon:
    """Parse lexicon TSV text.

    Repeated (word, category) lines are OR-ed, so duplicates are harmless.

    Raises:
        ParseError: On a malformed line or indicator
        BadCategory: On a category outside CATEGORIES
    """
    index = {name: i for i, name in enumerate(CATEGORIES)}
    bits: Dict[str, List[int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split("\t")
        if len(fields) != 3:
            raise ParseError(lineno, "<line>", f"expected word<TAB>category<TAB>0|1, got {line!r}")
        word, category, indicator = (f.strip() for f in fields)
        if category not in index:
            raise BadCategory(category, lineno)
        if indicator not in ("0", "1"):
            raise ParseError(lineno, "indicator", f"expected 0 or 1, got {indicator!r}")
        row = bits.setdefault(word.lower(), [0] * len(CATEGORIES))
        if indicator == "1":
            row[index[category]] = 1

    entries = {word: tuple(row) for word, row in sorted(bits.items()) if any(row)}
    return EmotionLexicon(entries)


def load_lexicon(path: Union[str, Path, None] = None) -> EmotionLexicon:
    """Load a lexicon file, defaulting to the bundled subset."""
    source = path or bundled_path(LEXICON)
    try:
        with open(source, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise InputIOError(source, str(e)) from e
    lexicon = parse_lexicon(text)
    logger.info("loaded emotion lexicon with %d scored words from %s", len(lexicon), source)
    return lexicon
