"""Locations of the data files shipped inside the package."""

from importlib import resources
from pathlib import Path

PROFILES = "profiles.csv"
CORPORA = "corpora.json"
STOPWORDS_ID = "stopwords.id.txt"
STOPWORDS_EN = "stopwords.en.txt"
LEMMAS = "lemmas.id.tsv"
SLANG = "slang.tsv"
DICTIONARY = "dictionary.id-en.tsv"
LEXICON = "emotion_lexicon.tsv"
PUBLISHED_LOADINGS = "loadings_published.csv"
DEFAULT_CONFIG = "kolan.conf"


def bundled_path(name: str) -> Path:
    """Return the filesystem path of a bundled data file."""
    return Path(str(resources.files("kolan").joinpath("data", name)))
