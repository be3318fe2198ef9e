"""Engagement proxies and audience enthusiasm.

Engagement is proxied by likes: the average likes per post of an influencer
and the likes collected by the campaign post. Enthusiasm compares the two:
a rate of 1.0 means the campaign post did exactly as well as a typical post.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Sequence, Tuple, Union

from ..errors import ZeroBaseline
from ..model.profiles import ContentFormat, Dataset, KolProfile


class Scale(str, Enum):
    LINEAR = "linear"
    LOG10 = "log10"


@dataclass(frozen=True)
class EnthusiasmRecord:
    """Enthusiasm of one influencer's audience for the campaign post.

    Attributes:
        kol_id: Influencer id
        rate: campaign_likes / baseline_avg
        campaign_likes: Likes on the campaign post
        baseline_avg: Typical likes per post
    """

    kol_id: str
    rate: float
    campaign_likes: int
    baseline_avg: float

    def __post_init__(self) -> None:
        """Validate the record is internally consistent."""
        if self.baseline_avg <= 0:
            raise ValueError(f"baseline_avg must be positive, got {self.baseline_avg}")
        if self.rate != self.campaign_likes / self.baseline_avg:
            raise ValueError("rate must equal campaign_likes / baseline_avg")


@dataclass(frozen=True)
class ChartSeries:
    """Ordered bar-chart data.

    ``raw`` always holds the linear values; ``points`` holds the values on
    ``scale`` (log10-transformed for Scale.LOG10).

    Attributes:
        label: Series title
        points: (category, value-on-scale) pairs in display order
        scale: Value scale of ``points``
        raw: (category, linear value) pairs in the same order
    """

    label: str
    points: Tuple[Tuple[str, float], ...]
    scale: Scale = Scale.LINEAR
    raw: Tuple[Tuple[str, float], ...] = field(default=())

    def __post_init__(self) -> None:
        """Check raw/points alignment and the log domain."""
        if self.raw and [c for c, _ in self.raw] != [c for c, _ in self.points]:
            raise ValueError("raw and points must list the same categories in the same order")
        if self.scale is Scale.LOG10 and any(v <= 0 for _, v in self.raw):
            raise ValueError("log10 series require strictly positive raw values")

    @property
    def categories(self) -> List[str]:
        return [c for c, _ in self.points]

    @property
    def values(self) -> List[float]:
        return [v for _, v in self.points]


def enthusiasm_rate(campaign_likes: int, baseline_avg: float) -> float:
    """Likes on the campaign post relative to typical likes per post.

    Args:
        campaign_likes: Likes on the campaign post (>= 0)
        baseline_avg: Average likes per post (> 0)

    Returns:
        campaign_likes / baseline_avg

    Raises:
        ZeroBaseline: If baseline_avg <= 0
    """
    if not baseline_avg > 0:
        raise ZeroBaseline(f"baseline average must be positive, got {baseline_avg}")
    return campaign_likes / baseline_avg


def build_series(
    label: str,
    items: List[Tuple[str, float]],
    scale: Scale = Scale.LOG10,
) -> ChartSeries:
    """Sort (id, value) pairs into a ChartSeries.

    Ordering is by raw value descending, ties by id ascending.

    Raises:
        ZeroBaseline: If scale is LOG10 and any value is <= 0
    """
    ordered = sorted(items, key=lambda item: (-item[1], item[0]))
    if scale is Scale.LOG10:
        for kol_id, value in ordered:
            if not value > 0:
                raise ZeroBaseline(f"{label}: cannot log-transform {value} for {kol_id!r}")
        points = tuple((kol_id, math.log10(value)) for kol_id, value in ordered)
    else:
        points = tuple((kol_id, float(value)) for kol_id, value in ordered)
    raw = tuple((kol_id, float(value)) for kol_id, value in ordered)
    return ChartSeries(label=label, points=points, scale=scale, raw=raw)


def _series_over(
    dataset: Dataset,
    label: str,
    getter: Callable[[KolProfile], float],
    scale: Scale,
) -> ChartSeries:
    return build_series(label, [(p.id, getter(p)) for p in dataset.profiles], scale)


def engagement_series(dataset: Dataset, scale: Scale = Scale.LOG10) -> ChartSeries:
    """Average likes per post for every influencer."""
    return _series_over(
        dataset, "Average likes per post", lambda p: p.avg_likes_per_post, scale
    )


def campaign_engagement_series(dataset: Dataset, scale: Scale = Scale.LOG10) -> ChartSeries:
    """Likes on the campaign post for every influencer."""
    return _series_over(
        dataset, "Campaign post likes", lambda p: float(p.campaign_likes), scale
    )


def enthusiasm_table(dataset: Dataset) -> List[EnthusiasmRecord]:
    """Per-influencer enthusiasm, highest rate first (ties by id)."""
    records = [
        EnthusiasmRecord(
            kol_id=p.id,
            rate=enthusiasm_rate(p.campaign_likes, p.avg_likes_per_post),
            campaign_likes=p.campaign_likes,
            baseline_avg=p.avg_likes_per_post,
        )
        for p in dataset.profiles
    ]
    return sorted(records, key=lambda r: (-r.rate, r.kol_id))


def enthusiasm_series(dataset: Dataset, scale: Scale = Scale.LINEAR) -> ChartSeries:
    """Enthusiasm rates as a chart series."""
    return build_series(
        "Audience enthusiasm", [(r.kol_id, r.rate) for r in enthusiasm_table(dataset)], scale
    )


def enthusiasm_by_format(
    dataset: Union[Dataset, Sequence[KolProfile]],
) -> Dict[ContentFormat, float]:
    """Unweighted mean enthusiasm rate per campaign post format.

    Formats without any influencer are omitted, so an empty profile
    sequence yields an empty map. Keys follow the ContentFormat declaration
    order (Video, Image).
    """
    profiles = dataset.profiles if isinstance(dataset, Dataset) else dataset
    buckets: Dict[ContentFormat, List[float]] = {}
    for p in profiles:
        rate = enthusiasm_rate(p.campaign_likes, p.avg_likes_per_post)
        buckets.setdefault(p.campaign_format, []).append(rate)

    return {
        fmt: math.fsum(buckets[fmt]) / len(buckets[fmt])
        for fmt in ContentFormat
        if fmt in buckets
    }
