"""Shared fixtures for the kolan test suite."""

from pathlib import Path
from typing import Any, Dict

import pytest

from kolan.bundled import CORPORA, PROFILES, bundled_path
from kolan.model import Dataset, KolProfile, load_dataset
from kolan.sentiment import DictionaryProvider, load_lexicon
from kolan.textprep import TextResources


# ===== FIXTURES =====


@pytest.fixture(scope="session")
def dataset() -> Dataset:
    """The bundled ten-influencer campaign with its comment corpora."""
    return load_dataset(bundled_path(PROFILES), bundled_path(CORPORA))


@pytest.fixture(scope="session")
def resources() -> TextResources:
    return TextResources.load()


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon()


@pytest.fixture
def provider() -> DictionaryProvider:
    """Fresh dictionary provider so call counts start at zero."""
    return DictionaryProvider.from_file()


@pytest.fixture
def profile_fields() -> Dict[str, Any]:
    """Valid field values for one profile; tests override single fields."""
    return {
        "id": "chornella",
        "name": "Chornella Tri Pratama",
        "kol_type": "Professional",
        "platform": "TikTok",
        "follower_tier": "MidTier",
        "follower_count": 70000,
        "post_count": 250,
        "avg_likes_per_post": 1000.0,
        "theme": "Finance",
        "audience": "VeryYoung",
        "campaign_likes": 1250,
        "campaign_format": "Video",
    }


@pytest.fixture
def make_profile(profile_fields):
    """Factory building a KolProfile from the valid defaults plus overrides."""

    def _make(**overrides: Any) -> KolProfile:
        return KolProfile.model_validate({**profile_fields, **overrides})

    return _make


@pytest.fixture
def profiles_csv() -> str:
    return bundled_path(PROFILES).read_text(encoding="utf-8")


@pytest.fixture
def config_file(tmp_path: Path) -> Path:
    """A config file pointing at the bundled data with output under tmp_path."""
    data = bundled_path(PROFILES).parent
    lines = [
        f"profiles = {data / 'profiles.csv'}",
        f"corpora = {data / 'corpora.json'}",
        f"lexicon = {data / 'emotion_lexicon.tsv'}",
        f"stopwords_id = {data / 'stopwords.id.txt'}",
        f"stopwords_en = {data / 'stopwords.en.txt'}",
        f"lemmas = {data / 'lemmas.id.tsv'}",
        f"slang = {data / 'slang.tsv'}",
        f"dictionary = {data / 'dictionary.id-en.tsv'}",
        "provider = dictionary",
        "k = 3",
        "seed = 7",
        f"out = {tmp_path / 'out'}",
    ]
    path = tmp_path / "kolan.conf"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
