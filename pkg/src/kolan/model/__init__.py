"""Domain model: influencer profiles, comment corpora and file ingestion."""

from .loader import (
    PROFILE_COLUMNS,
    dump_corpora,
    dump_profiles,
    load_dataset,
    parse_corpora,
    parse_profiles,
    save_dataset,
)
from .profiles import (
    TIER_BANDS,
    TIER_ORDER,
    Audience,
    CommentCorpus,
    ContentFormat,
    Dataset,
    FollowerTier,
    KolProfile,
    KolType,
    Platform,
    Theme,
    tier_of,
)

__all__ = [
    "PROFILE_COLUMNS",
    "TIER_BANDS",
    "TIER_ORDER",
    "Audience",
    "CommentCorpus",
    "ContentFormat",
    "Dataset",
    "FollowerTier",
    "KolProfile",
    "KolType",
    "Platform",
    "Theme",
    "dump_corpora",
    "dump_profiles",
    "load_dataset",
    "parse_corpora",
    "parse_profiles",
    "save_dataset",
    "tier_of",
]
