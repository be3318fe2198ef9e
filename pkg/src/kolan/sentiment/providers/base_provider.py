"""Base interface for Indonesian -> English word translation providers.

A provider turns a batch of lemmas into English words that can be looked up
in the emotion lexicon. Implementations must keep the batch length and order
and be deterministic for a given (word, provider version).
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Sequence


class TranslationProvider(ABC):
    """Abstract base class for translation providers.

    Attributes:
        name: Unique identifier for this provider
        version: Provider version; translations are stable per version
        calls: Number of translate() invocations that reached the backend
    """

    def __init__(self, name: str, version: str = "1") -> None:
        """Initialize the base provider.

        Args:
            name: Unique identifier for this provider
            version: Provider version string
        """
        self.name = name
        self.version = version
        self.calls = 0

    @abstractmethod
    def translate(
        self, words: Sequence[str], source: str = "id", target: str = "en"
    ) -> List[str]:
        """Translate a batch of words.

        Args:
            words: Lowercase source-language words
            source: Source language code
            target: Target language code

        Returns:
            One lowercase translation per input word, in input order. Words
            the provider cannot translate come back unchanged.

        Raises:
            ProviderUnavailable: If the backend cannot be reached or answers
                with an unusable response
            NotImplementedError: If not implemented by subclass
        """
        raise NotImplementedError(
            f"{self.__class__.__name__} must implement translate()"
        )

    def health_check(self) -> Dict[str, Any]:
        """Report provider status.

        Returns:
            Dictionary containing:
                - 'name': Provider name
                - 'version': Provider version
                - 'calls': Backend calls made so far
        """
        return {"name": self.name, "version": self.version, "calls": self.calls}

    def __repr__(self) -> str:
        """Return string representation of the provider."""
        return f"{self.__class__.__name__}(name='{self.name}', version='{self.version}')"
