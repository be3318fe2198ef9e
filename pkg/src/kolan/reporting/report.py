"""The report.json bundle and the console summary.

The bundle is a versioned pydantic model; ``ReportBundle.model_json_schema()``
is the published schema. Sections that were not run are null.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from ..metrics.engagement import (
    ChartSeries,
    Scale,
    campaign_engagement_series,
    engagement_series,
    enthusiasm_by_format,
    enthusiasm_table,
)
from ..metrics.summary import (
    campaign_like_share,
    high_engagement,
    profile_breakdown,
    tier_eligibility,
)
from ..model.profiles import Dataset
from ..pca.analysis import PcaResult, loading_vectors
from ..pca.clustering import ClusterAssignment, biplot_points
from ..sentiment.lexicon import CATEGORIES
from ..sentiment.scoring import SentimentResult

SCHEMA_VERSION = "1.0"
TOP_WORDS = 10
BANNER = "═" * 47


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class SeriesPoint(_Record):
    kol_id: str
    value: float
    linear_value: float


class Series(_Record):
    label: str
    scale: Scale
    points: List[SeriesPoint]


class EnthusiasmRow(_Record):
    kol_id: str
    campaign_likes: int
    baseline_avg: float
    rate: float


class LikeShareRow(_Record):
    kol_id: str
    campaign_likes: int
    share: float


class MetricsSection(_Record):
    engagement: Series
    campaign_engagement: Series
    enthusiasm: List[EnthusiasmRow]
    format_means: Dict[str, float]
    total_campaign_likes: int
    like_share: List[LikeShareRow]
    high_engagement: List[str]
    tier_eligibility: Dict[str, bool]
    breakdown: Dict[str, Dict[str, int]]


class LoadingRow(_Record):
    feature: str
    values: List[float]


class ScoreRow(_Record):
    kol_id: str
    values: List[float]


class BiplotPoint(_Record):
    kol_id: str
    pc1: float
    pc2: float
    cluster: int


class PcaSection(_Record):
    feature_names: List[str]
    component_names: List[str]
    eigenvalues: List[float]
    explained_ratio: List[float]
    loadings: List[LoadingRow]
    scores: List[ScoreRow]
    k: int
    seed: int
    iterations: int
    inertia_history: List[float]
    clusters: List[List[str]]
    biplot: List[BiplotPoint]


class WordCount(_Record):
    text: str
    n: int


class WordScore(_Record):
    text: str
    translated: str
    n: int
    categories: Dict[str, int]


class SentimentSection(_Record):
    top_words: List[WordCount]
    total_tokens: int
    unique_words: int
    words: List[WordScore]
    totals: Dict[str, int]
    dominant: List[str]
    unscored: List[str]
    weighting: str


class ReportBundle(_Record):
    """Everything `kolan report` produces, in one document."""

    schema_version: str = SCHEMA_VERSION
    metrics: Optional[MetricsSection] = None
    pca: Optional[PcaSection] = None
    sentiment: Optional[SentimentSection] = None
    warnings: List[str] = []

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


def _series(series: ChartSeries) -> Series:
    linear = dict(series.raw) if series.raw else dict(series.points)
    return Series(
        label=series.label,
        scale=series.scale,
        points=[
            SeriesPoint(kol_id=kol_id, value=value, linear_value=linear[kol_id])
            for kol_id, value in series.points
        ],
    )


def metrics_section(dataset: Dataset, scale: Scale = Scale.LINEAR) -> MetricsSection:
    total, shares = campaign_like_share(dataset)
    return MetricsSection(
        engagement=_series(engagement_series(dataset, scale)),
        campaign_engagement=_series(campaign_engagement_series(dataset, scale)),
        enthusiasm=[
            EnthusiasmRow(
                kol_id=r.kol_id,
                campaign_likes=r.campaign_likes,
                baseline_avg=r.baseline_avg,
                rate=r.rate,
            )
            for r in enthusiasm_table(dataset)
        ],
        format_means={fmt.value: mean for fmt, mean in enthusiasm_by_format(dataset).items()},
        total_campaign_likes=total,
        like_share=[
            LikeShareRow(kol_id=s.kol_id, campaign_likes=s.campaign_likes, share=s.share)
            for s in shares
        ],
        high_engagement=high_engagement(dataset),
        tier_eligibility=tier_eligibility(dataset),
        breakdown=profile_breakdown(dataset),
    )


def pca_section(result: PcaResult, assignment: ClusterAssignment) -> PcaSection:
    return PcaSection(
        feature_names=list(result.feature_names),
        component_names=result.component_names,
        eigenvalues=[float(v) for v in result.eigenvalues],
        explained_ratio=[float(v) for v in result.explained_ratio],
        loadings=[
            LoadingRow(feature=name, values=[float(v) for v in result.loadings[i]])
            for i, name in enumerate(result.feature_names)
        ],
        scores=[
            ScoreRow(kol_id=kol_id, values=[float(v) for v in result.scores[i]])
            for i, kol_id in enumerate(result.kol_ids)
        ],
        k=assignment.k,
        seed=assignment.seed,
        iterations=assignment.iterations,
        inertia_history=list(assignment.inertia_history),
        clusters=assignment.groups(),
        biplot=[
            BiplotPoint(kol_id=kol_id, pc1=x, pc2=y, cluster=c)
            for kol_id, x, y, c in biplot_points(result, assignment)
        ],
    )


def sentiment_section(result: SentimentResult) -> SentimentSection:
    return SentimentSection(
        top_words=[WordCount(text=t, n=n) for t, n in result.frequencies.top(TOP_WORDS)],
        total_tokens=result.frequencies.total,
        unique_words=len(result.frequencies),
        words=[
            WordScore(
                text=w.text,
                translated=w.translated,
                n=w.n,
                categories=dict(zip(CATEGORIES, w.vector)),
            )
            for w in result.words
        ],
        totals=dict(result.totals.totals),
        dominant=result.dominant,
        unscored=result.unscored,
        weighting="unique" if result.unique else "occurrence",
    )


# ============================================================================
# CONSOLE SUMMARY
# ============================================================================


def _heading(title: str) -> str:
    return f"\n{BANNER}\n{title}\n{BANNER}\n"


def render_summary(bundle: ReportBundle) -> str:
    """Fixed-layout text summary of whichever sections the bundle holds."""
    report = f"\nKOL CAMPAIGN REPORT\n{BANNER}\n"

    if bundle.metrics is not None:
        m = bundle.metrics
        report += _heading("ENGAGEMENT & ENTHUSIASM")
        report += f"\nInfluencers: {len(m.enthusiasm)}\n"
        report += f"Total campaign likes: {m.total_campaign_likes}\n"
        if m.like_share:
            top = m.like_share[0]
            report += f"  • Largest share: {top.kol_id} ({top.share:.1%})\n"
        report += "\nEnthusiasm (campaign likes / average likes):\n"
        for row in m.enthusiasm:
            report += f"  {row.kol_id:<14} {row.rate:.2f}\n"
        report += "\nMean enthusiasm by format:\n"
        for fmt, mean in m.format_means.items():
            report += f"  {fmt:<14} {mean:.3f}\n"

    if bundle.pca is not None:
        p = bundle.pca
        report += _heading("PRINCIPAL COMPONENTS")
        report += "\n"
        for name, ratio in zip(p.component_names, p.explained_ratio):
            report += f"  {name}: {ratio:.1%} of variance\n"
        report += f"\nk-means (k={p.k}, seed={p.seed}, {p.iterations} iterations):\n"
        for i, members in enumerate(p.clusters):
            report += f"  Cluster {i}: {', '.join(members)}\n"

    if bundle.sentiment is not None:
        s = bundle.sentiment
        report += _heading("AUDIENCE SENTIMENT")
        report += f"\nLemmas: {s.total_tokens} ({s.unique_words} unique)\n"
        report += "\nTop words:\n"
        for word in s.top_words:
            report += f"  {word.text:<14} {word.n}\n"
        report += f"\nCategory totals ({s.weighting} weighting):\n"
        for category in s.dominant:
            report += f"  {category:<14} {s.totals[category]}\n"
        if s.unscored:
            report += f"\nUnscored words: {', '.join(s.unscored)}\n"

    if bundle.warnings:
        report += _heading("WARNINGS")
        report += "\n" + "".join(f"  ⚠ {w}\n" for w in bundle.warnings)

    return report
