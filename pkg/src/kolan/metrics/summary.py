"""Campaign-level summary figures over the influencer roster."""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..model.profiles import TIER_ORDER, Dataset, FollowerTier

HIGH_ENGAGEMENT_LIKES = 100.0


@dataclass(frozen=True)
class LikeShare:
    """One influencer's share of all likes collected by the campaign."""

    kol_id: str
    campaign_likes: int
    share: float

    def __post_init__(self) -> None:
        """Validate share is a fraction."""
        if not 0.0 <= self.share <= 1.0:
            raise ValueError(f"share must be between 0.0 and 1.0, got {self.share}")


def profile_breakdown(dataset: Dataset) -> Dict[str, Dict[str, int]]:
    """Count influencers per value of each categorical profile attribute.

    Returns:
        Dictionary with structure:
        {
            'follower_tier': {'Micro': 2, 'MidTier': 8},
            'platform': {'Instagram': 7, 'TikTok': 3},
            'kol_type': {...},
            'theme': {...},
            'audience': {...},
            'campaign_format': {...}
        }
        Inner keys are sorted alphabetically.
    """
    attributes = ("follower_tier", "platform", "kol_type", "theme", "audience", "campaign_format")
    breakdown: Dict[str, Dict[str, int]] = {}
    for attribute in attributes:
        counts: Dict[str, int] = {}
        for p in dataset.profiles:
            key = getattr(p, attribute).value
            counts[key] = counts.get(key, 0) + 1
        breakdown[attribute] = dict(sorted(counts.items()))
    return breakdown


def high_engagement(dataset: Dataset, threshold: float = HIGH_ENGAGEMENT_LIKES) -> List[str]:
    """Ids of influencers whose average likes per post exceed ``threshold``."""
    return sorted(p.id for p in dataset.profiles if p.avg_likes_per_post > threshold)


def campaign_like_share(dataset: Dataset) -> Tuple[int, List[LikeShare]]:
    """Split total campaign likes by influencer.

    Returns:
        Tuple of (total campaign likes, shares sorted by share descending
        then id). Shares are 0.0 when the total is zero.
    """
    total = sum(p.campaign_likes for p in dataset.profiles)
    shares = [
        LikeShare(
            kol_id=p.id,
            campaign_likes=p.campaign_likes,
            share=(p.campaign_likes / total) if total else 0.0,
        )
        for p in dataset.profiles
    ]
    return total, sorted(shares, key=lambda s: (-s.share, s.kol_id))


def tier_eligibility(
    dataset: Dataset, minimum: FollowerTier = FollowerTier.MICRO
) -> Dict[str, bool]:
    """Whether each influencer meets a minimum follower tier, keyed by id."""
    floor = TIER_ORDER[minimum]
    ordered = sorted(dataset.profiles, key=lambda p: p.id)
    return {p.id: TIER_ORDER[p.follower_tier] >= floor for p in ordered}
