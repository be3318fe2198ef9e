"""Word translation with a persistent cache.

The cache file is a JSON object mapping Indonesian lemma to English word.
It is written atomically (temporary file in the same directory, then
rename) and has a single-writer contract.
"""

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import CacheIOError, ProviderUnavailable
from .providers.base_provider import TranslationProvider

logger = logging.getLogger(__name__)


class TranslationCache:
    """In-memory id -> en map, optionally backed by a JSON file.

    Attributes:
        path: Backing file, or None for a memory-only cache
        dirty: Whether entries changed since the last load/save
    """

    def __init__(
        self,
        entries: Optional[Mapping[str, str]] = None,
        path: Union[str, Path, None] = None,
    ) -> None:
        self._entries: Dict[str, str] = dict(entries or {})
        self.path = Path(path) if path is not None else None
        self.dirty = False

    @classmethod
    def load(cls, path: Union[str, Path]) -> "TranslationCache":
        """Read a cache file; a missing file gives an empty cache.

        Raises:
            CacheIOError: If the file exists but cannot be read or is not a
                JSON object of strings
        """
        source = Path(path)
        if not source.exists():
            logger.debug("no translation cache at %s; starting empty", source)
            return cls(path=source)
        try:
            with open(source, encoding="utf-8") as handle:
                data = json.load(handle)
        except (OSError, ValueError) as e:
            raise CacheIOError(source, str(e)) from e
        if not isinstance(data, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in data.items()
        ):
            raise CacheIOError(source, "cache must be a JSON object of string to string")
        logger.info("loaded %d cached translations from %s", len(data), source)
        return cls(data, source)

    def get(self, word: str) -> Optional[str]:
        return self._entries.get(word)

    def update(self, pairs: Iterable[Tuple[str, str]]) -> None:
        for word, translated in pairs:
            if self._entries.get(word) != translated:
                self._entries[word] = translated
                self.dirty = True

    def save(self, path: Union[str, Path, None] = None) -> None:
        """Write the cache atomically.

        Raises:
            CacheIOError: If the file cannot be written
        """
        target = Path(path) if path is not None else self.path
        if target is None:
            return
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(
                dir=target.parent, prefix=f".{target.name}.", suffix=".tmp"
            )
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as handle:
                    json.dump(self._entries, handle, ensure_ascii=False, indent=2, sort_keys=True)
                    handle.write("\n")
                os.replace(tmp, target)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
        except OSError as e:
            raise CacheIOError(target, str(e)) from e
        self.dirty = False
        logger.debug("saved %d cached translations to %s", len(self._entries), target)

    def as_dict(self) -> Dict[str, str]:
        return dict(sorted(self._entries.items()))

    def __contains__(self, word: object) -> bool:
        return word in self._entries

    def __len__(self) -> int:
        return len(self._entries)


def translate_words(
    words: Sequence[str],
    provider: TranslationProvider,
    cache: Optional[TranslationCache] = None,
) -> List[Tuple[str, str]]:
    """Translate words, consulting and updating the cache.

    Each distinct word goes to the provider at most once, in a single call
    covering every cache miss. Words the provider returns unchanged are kept
    as-is.

    Args:
        words: Indonesian lemmas (duplicates allowed)
        provider: Translation backend
        cache: Optional cache; updated in memory, not saved

    Returns:
        (word, translation) for each distinct word, in first-seen order

    Raises:
        ProviderUnavailable: If the provider fails or breaks its contract
    """
    cache = cache if cache is not None else TranslationCache()
    unique = list(dict.fromkeys(words))
    misses = [w for w in unique if cache.get(w) is None]
    logger.info(
        "translation: %d unique words, %d cache hits, %d misses",
        len(unique),
        len(unique) - len(misses),
        len(misses),
    )

    if misses:
        translated = provider.translate(misses)
        if len(translated) != len(misses):
            raise ProviderUnavailable(
                f"{provider.name} returned {len(translated)} translations for {len(misses)} words"
            )
        # an empty answer counts as pass-through
        cache.update((w, " ".join(t.lower().split()) or w) for w, t in zip(misses, translated))

    pairs: List[Tuple[str, str]] = []
    for word in unique:
        translation = cache.get(word)
        if translation is None:
            raise ProviderUnavailable(f"{provider.name} gave no translation for {word!r}")
        pairs.append((word, translation))
    return pairs
