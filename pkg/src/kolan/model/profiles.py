"""Domain types for influencer profiles and comment corpora.

Profiles and corpora are pydantic models so that every field coming from a
file is type-checked and enum-checked at the ingestion boundary. Unknown enum
strings are rejected, never coerced.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import BelowNano, DanglingReference, ValidationError


class KolType(str, Enum):
    STUDENT = "Student"
    PROFESSIONAL = "Professional"
    ENTREPRENEUR = "Entrepreneur"
    HOUSEWIFE = "Housewife"


class Platform(str, Enum):
    INSTAGRAM = "Instagram"
    TIKTOK = "TikTok"


class FollowerTier(str, Enum):
    NANO = "Nano"
    MICRO = "Micro"
    MID_TIER = "MidTier"
    MACRO = "Macro"
    MEGA = "Mega"


class Theme(str, Enum):
    FINANCE = "Finance"
    GENERAL = "General"


class Audience(str, Enum):
    YOUNG = "Young"
    VERY_YOUNG = "VeryYoung"


class ContentFormat(str, Enum):
    VIDEO = "Video"
    IMAGE = "Image"


# Half-open [lower, upper) follower bands; None means unbounded.
TIER_BANDS: Tuple[Tuple[FollowerTier, int, Optional[int]], ...] = (
    (FollowerTier.NANO, 1_000, 10_000),
    (FollowerTier.MICRO, 10_000, 50_000),
    (FollowerTier.MID_TIER, 50_000, 500_000),
    (FollowerTier.MACRO, 500_000, 1_000_000),
    (FollowerTier.MEGA, 1_000_000, None),
)

TIER_ORDER: Dict[FollowerTier, int] = {tier: i for i, (tier, _, _) in enumerate(TIER_BANDS)}


def tier_of(follower_count: int) -> FollowerTier:
    """Return the follower tier whose band contains ``follower_count``.

    Bands are left-closed, so 10,000 is Micro and 1,000,000 is Mega.

    Args:
        follower_count: Number of followers (>= 1000)

    Returns:
        The matching FollowerTier

    Raises:
        BelowNano: If follower_count < 1000
    """
    if follower_count < TIER_BANDS[0][1]:
        raise BelowNano(follower_count)

    for tier, lower, upper in TIER_BANDS:
        if follower_count >= lower and (upper is None or follower_count < upper):
            return tier

    # unreachable: the last band is unbounded
    raise BelowNano(follower_count)


class KolProfile(BaseModel):
    """One influencer as observed in the campaign snapshot.

    Attributes:
        id: Unique key (lowercase slug in the bundled fixture)
        name: Display name
        kol_type: Occupation category of the influencer
        platform: Platform the campaign post was published on
        follower_tier: Declared follower band; must agree with follower_count
        follower_count: Followers at snapshot time
        post_count: Total posts at snapshot time
        avg_likes_per_post: Typical likes per post (enthusiasm denominator)
        theme: Usual content theme
        audience: Audience age group
        campaign_likes: Likes on the campaign post
        campaign_format: Format of the campaign post
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    id: str = Field(min_length=1)
    name: str = Field(min_length=1)
    kol_type: KolType
    platform: Platform
    follower_tier: FollowerTier
    follower_count: int = Field(ge=0)
    post_count: int = Field(ge=0)
    avg_likes_per_post: float = Field(allow_inf_nan=False)
    theme: Theme
    audience: Audience
    campaign_likes: int = Field(ge=0)
    campaign_format: ContentFormat

    @field_validator("id")
    @classmethod
    def _strip_id(cls, value: str) -> str:
        if value != value.strip():
            raise ValueError("id must not have surrounding whitespace")
        return value

    @model_validator(mode="after")
    def _check_invariants(self) -> "KolProfile":
        if not self.avg_likes_per_post > 0:
            raise ValueError(
                f"avg_likes_per_post must be > 0, got {self.avg_likes_per_post}"
            )
        try:
            expected = tier_of(self.follower_count)
        except BelowNano as e:
            raise ValueError(str(e)) from e
        if expected != self.follower_tier:
            raise ValueError(
                f"follower_tier {self.follower_tier.value} is inconsistent with "
                f"follower_count {self.follower_count} (expected {expected.value})"
            )
        return self


class CommentCorpus(BaseModel):
    """Audience comments scraped from one influencer's campaign post."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kol_id: str = Field(min_length=1)
    source_platform: Platform = Platform.INSTAGRAM
    comments: Tuple[str, ...] = ()

    @field_validator("source_platform")
    @classmethod
    def _instagram_only(cls, value: Platform) -> Platform:
        # TikTok comments are not obtainable under its data-privacy rules.
        if value is not Platform.INSTAGRAM:
            raise ValueError("only Instagram comment corpora are supported")
        return value

    @property
    def admitted(self) -> bool:
        """Whether this corpus can enter sentiment analysis."""
        return len(self.comments) > 0


@dataclass(frozen=True)
class Dataset:
    """Validated, immutable collection of profiles and comment corpora.

    Attributes:
        profiles: Influencer profiles in file order (unique ids)
        corpora: Comment corpora; every kol_id references a profile
    """

    profiles: Tuple[KolProfile, ...]
    corpora: Tuple[CommentCorpus, ...] = ()

    def __post_init__(self) -> None:
        """Check dataset-level invariants."""
        if not self.profiles:
            raise ValidationError("dataset", "dataset must contain ≥1 profile")

        seen: Dict[str, int] = {}
        for profile in self.profiles:
            if profile.id in seen:
                raise ValidationError(profile.id, "duplicate profile id")
            seen[profile.id] = 1

        for corpus in self.corpora:
            if corpus.kol_id not in seen:
                raise DanglingReference(corpus.kol_id)

    @property
    def ids(self) -> List[str]:
        """Profile ids in file order."""
        return [p.id for p in self.profiles]

    def profile(self, kol_id: str) -> KolProfile:
        """Look up a profile by id.

        Raises:
            KeyError: If no profile has that id
        """
        for p in self.profiles:
            if p.id == kol_id:
                return p
        raise KeyError(kol_id)

    def with_profiles(self, profiles: List[KolProfile]) -> "Dataset":
        """Return a new Dataset with the given profiles and the same corpora."""
        return Dataset(profiles=tuple(profiles), corpora=self.corpora)
