"""Engagement, enthusiasm and campaign summary metrics."""

from .engagement import (
    ChartSeries,
    EnthusiasmRecord,
    Scale,
    build_series,
    campaign_engagement_series,
    engagement_series,
    enthusiasm_by_format,
    enthusiasm_rate,
    enthusiasm_series,
    enthusiasm_table,
)
from .summary import (
    HIGH_ENGAGEMENT_LIKES,
    LikeShare,
    campaign_like_share,
    high_engagement,
    profile_breakdown,
    tier_eligibility,
)

__all__ = [
    "HIGH_ENGAGEMENT_LIKES",
    "ChartSeries",
    "EnthusiasmRecord",
    "LikeShare",
    "Scale",
    "build_series",
    "campaign_engagement_series",
    "campaign_like_share",
    "engagement_series",
    "enthusiasm_by_format",
    "enthusiasm_rate",
    "enthusiasm_series",
    "enthusiasm_table",
    "high_engagement",
    "profile_breakdown",
    "tier_eligibility",
]
