"""Offline translation from a bilingual word list."""

import hashlib
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from ...bundled import DICTIONARY, bundled_path
from ...errors import InputIOError, ParseError
from .base_provider import TranslationProvider

logger = logging.getLogger(__name__)


def parse_dictionary(text: str) -> Dict[str, str]:
    """Parse ``id_word<TAB>en_word`` lines; the English side may be several words."""
    entries: Dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split("\t")
        if len(fields) != 2 or not fields[0].strip() or not fields[1].strip():
            raise ParseError(lineno, "<line>", f"expected id_word<TAB>en_word, got {line!r}")
        entries[fields[0].strip().lower()] = " ".join(fields[1].lower().split())
    return entries


class DictionaryProvider(TranslationProvider):
    """Translates through a file-backed Indonesian-English dictionary.

    Unknown words pass through unchanged, the way an online service returns
    proper nouns and codes such as "sbr".
    """

    def __init__(self, entries: Dict[str, str], version: Optional[str] = None) -> None:
        """Initialize from an in-memory dictionary.

        Args:
            entries: id_word -> en_word
            version: Defaults to a digest of the entries
        """
        if version is None:
            digest = hashlib.sha256()
            for word, translation in sorted(entries.items()):
                digest.update(f"{word}\t{translation}\n".encode("utf-8"))
            version = digest.hexdigest()[:12]
        super().__init__(name="dictionary", version=version)
        self.entries = dict(entries)

    @classmethod
    def from_file(cls, path: Union[str, Path, None] = None) -> "DictionaryProvider":
        """Load the dictionary TSV, defaulting to the bundled one."""
        source = path or bundled_path(DICTIONARY)
        try:
            with open(source, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as e:
            raise InputIOError(source, str(e)) from e
        entries = parse_dictionary(text)
        logger.info("loaded %d dictionary entries from %s", len(entries), source)
        return cls(entries)

    def translate(
        self, words: Sequence[str], source: str = "id", target: str = "en"
    ) -> List[str]:
        if not words:
            return []
        self.calls += 1
        return [self.entries.get(word, word) for word in words]

    def health_check(self) -> Dict[str, Any]:
        status = super().health_check()
        status["entries"] = len(self.entries)
        return status
