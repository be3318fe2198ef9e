"""Translation providers: offline dictionary and HTTP endpoint."""

from .base_provider import TranslationProvider
from .dictionary_provider import DictionaryProvider, parse_dictionary
from .http_provider import API_KEY_ENV, HttpProvider

__all__ = [
    "API_KEY_ENV",
    "DictionaryProvider",
    "HttpProvider",
    "TranslationProvider",
    "parse_dictionary",
]
