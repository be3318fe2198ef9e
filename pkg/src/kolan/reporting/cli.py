"""kolan command-line interface.

Usage:
    kolan metrics   [--config PATH] [--scale linear|log10] [--out DIR]
    kolan pca       [--config PATH] [--k N] [--seed N] [--out DIR]
    kolan sentiment [--config PATH] [--unique] [--out DIR]
    kolan report    [--config PATH] [options of all the above]
    kolan schema

Exit codes: 0 success, 1 validation error, 2 I/O error, 3 translation
provider unavailable, 64 usage error.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence

from .. import __version__
from ..errors import EXIT_OK, EXIT_USAGE, KolanError, ProviderUnavailable, UsageError
from ..metrics.engagement import (
    Scale,
    campaign_engagement_series,
    engagement_series,
    enthusiasm_series,
)
from ..model.loader import load_dataset
from ..model.profiles import Dataset
from ..pca.analysis import loading_vectors, run_pca
from ..pca.clustering import biplot_points, cluster_scores
from ..sentiment.lexicon import CATEGORIES, load_lexicon
from ..sentiment.providers import DictionaryProvider, HttpProvider, TranslationProvider
from ..sentiment.scoring import run_sentiment
from ..sentiment.translation import TranslationCache
from ..textprep.resources import TextResources
from .charts import bar_chart, biplot, series_chart
from .config import RunConfig, build_config
from .report import (
    MetricsSection,
    PcaSection,
    ReportBundle,
    SentimentSection,
    metrics_section,
    pca_section,
    render_summary,
    sentiment_section,
)
from .writers import ArtifactSet

logger = logging.getLogger(__name__)

REPORT_FILE = "report.json"


class KolanArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as UsageError (exit 64)."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value run configuration file")
    common.add_argument("--out", help="output directory (default: kolan-out)")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging"
    )

    parser = KolanArgumentParser(
        prog="kolan", description="Influencer campaign analytics: metrics, PCA and sentiment."
    )
    parser.add_argument("--version", action="version", version=f"kolan {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def scale_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--scale", choices=[s.value for s in Scale], help="chart value scale")

    def pca_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--k", type=int, help="number of clusters (default 3)")
        p.add_argument("--seed", type=int, help="k-means tie-break seed (default 7)")

    def sentiment_args(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--unique",
            action="store_true",
            default=None,
            help="count each word once in category totals",
        )

    metrics = sub.add_parser("metrics", parents=[common], help="engagement and enthusiasm")
    scale_arg(metrics)
    pca = sub.add_parser("pca", parents=[common], help="PCA loadings, scores and clusters")
    pca_args(pca)
    sentiment = sub.add_parser("sentiment", parents=[common], help="comment emotion scoring")
    sentiment_args(sentiment)
    report = sub.add_parser("report", parents=[common], help="all sections plus report.json")
    scale_arg(report)
    pca_args(report)
    sentiment_args(report)
    sub.add_parser("schema", help="print the report.json JSON schema")
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def make_provider(config: RunConfig) -> TranslationProvider:
    """Build the configured translation provider."""
    if config.provider == "http":
        assert config.endpoint is not None
        return HttpProvider.from_env(
            config.endpoint,
            batch_size=config.batch_size,
            max_retries=config.max_retries,
            timeout=config.timeout,
        )
    return DictionaryProvider.from_file(config.dictionary)


# ============================================================================
# SECTIONS
# ============================================================================


def run_metrics(config: RunConfig, dataset: Dataset, artifacts: ArtifactSet) -> MetricsSection:
    section = metrics_section(dataset, config.scale)
    charts = [
        ("engagement.svg", engagement_series(dataset, config.scale)),
        ("campaign_engagement.svg", campaign_engagement_series(dataset, config.scale)),
        ("enthusiasm.svg", enthusiasm_series(dataset, config.scale)),
    ]

    if config.wants("csv"):
        # CSVs always carry linear values; the scale column records the chart scale
        artifacts.csv(
            "engagement.csv",
            ["series", "kol_id", "value", "scale"],
            [
                (name, p.kol_id, p.linear_value, section.engagement.scale.value)
                for name, series in (
                    ("avg_likes_per_post", section.engagement),
                    ("campaign_likes", section.campaign_engagement),
                )
                for p in series.points
            ],
        )
        artifacts.csv(
            "enthusiasm.csv",
            ["kol_id", "campaign_likes", "baseline_avg", "rate"],
            [(r.kol_id, r.campaign_likes, r.baseline_avg, r.rate) for r in section.enthusiasm],
        )
        artifacts.csv(
            "format.csv",
            ["format", "mean_enthusiasm"],
            list(section.format_means.items()),
        )
    if config.wants("json"):
        artifacts.json("metrics.json", section.model_dump(mode="json"))
    if config.wants("svg"):
        for name, series in charts:
            artifacts.text(name, series_chart(series))
    return section


def run_pca_section(config: RunConfig, dataset: Dataset, artifacts: ArtifactSet) -> PcaSection:
    result = run_pca(dataset)
    assignment = cluster_scores(result, config.k, config.seed)
    section = pca_section(result, assignment)

    if config.wants("csv"):
        artifacts.csv(
            "loadings.csv",
            ["feature", *section.component_names],
            [(row.feature, *row.values) for row in section.loadings],
        )
        artifacts.csv(
            "scores.csv",
            ["kol_id", *section.component_names],
            [(row.kol_id, *row.values) for row in section.scores],
        )
        artifacts.csv(
            "clusters.csv",
            ["kol_id", "cluster", "pc1", "pc2"],
            [(p.kol_id, p.cluster, p.pc1, p.pc2) for p in section.biplot],
        )
    if config.wants("json"):
        artifacts.json("pca.json", section.model_dump(mode="json"))
    if config.wants("svg"):
        ratios = result.explained_ratio
        explained = (float(ratios[0]), float(ratios[1]) if len(ratios) > 1 else 0.0)
        artifacts.text(
            "biplot.svg",
            biplot(biplot_points(result, assignment), loading_vectors(result), explained),
        )
    return section


def run_sentiment_section(
    config: RunConfig, dataset: Dataset, artifacts: ArtifactSet
) -> SentimentSection:
    resources = TextResources.load(
        config.stopwords_id, config.stopwords_en, config.lemmas, config.slang
    )
    lexicon = load_lexicon(config.lexicon)
    provider = make_provider(config)
    cache = TranslationCache.load(config.cache_path)

    result = run_sentiment(dataset.corpora, resources, lexicon, provider, cache, config.unique)
    if cache.dirty:
        cache.save()
    section = sentiment_section(result)

    if config.wants("csv"):
        artifacts.csv("words.csv", ["text", "n"], list(result.frequencies))
        artifacts.csv(
            "scores.csv",
            ["text", "translated", *CATEGORIES, "n"],
            [(w.text, w.translated, *w.vector, w.n) for w in result.words],
        )
        artifacts.csv(
            "totals.csv",
            ["category", "total"],
            [(c, result.totals[c]) for c in result.dominant],
        )
    if config.wants("json"):
        artifacts.json("sentiment.json", section.model_dump(mode="json"))
    if config.wants("svg"):
        artifacts.text(
            "totals.svg",
            bar_chart(
                "Audience comment sentiment",
                [(c, float(result.totals[c])) for c in result.dominant],
                axis_label="total",
            ),
        )
    return section


# ============================================================================
# COMMANDS
# ============================================================================


def cmd_metrics(config: RunConfig) -> ReportBundle:
    """Engagement series, enthusiasm table and format means."""
    config.require("profiles")
    dataset = load_dataset(config.profiles)
    artifacts = ArtifactSet(config.out)
    return ReportBundle(metrics=run_metrics(config, dataset, artifacts))


def cmd_pca(config: RunConfig) -> ReportBundle:
    """PCA loadings, scores and k-means clusters."""
    config.require("profiles")
    dataset = load_dataset(config.profiles)
    artifacts = ArtifactSet(config.out)
    return ReportBundle(pca=run_pca_section(config, dataset, artifacts))


def cmd_sentiment(config: RunConfig) -> ReportBundle:
    """Comment preprocessing, translation, scoring and totals."""
    config.require("profiles", "corpora")
    dataset = load_dataset(config.profiles, config.corpora)
    artifacts = ArtifactSet(config.out)
    return ReportBundle(sentiment=run_sentiment_section(config, dataset, artifacts))


def cmd_report(config: RunConfig) -> ReportBundle:
    """All sections plus the report.json bundle.

    Section files go to metrics/, pca/ and sentiment/ under the output
    directory, report.json to its root. Missing corpora skip the sentiment
    section with a warning in the bundle; any other failure aborts the run.
    """
    config.require("profiles")
    warnings: List[str] = []
    has_corpora = config.corpora is not None and config.corpora.is_file()
    if not has_corpora:
        warnings.append("comment corpora not found; sentiment section skipped")
        logger.warning(warnings[-1])

    dataset = load_dataset(config.profiles, config.corpora if has_corpora else None)
    metrics = run_metrics(config, dataset, ArtifactSet(config.out / "metrics"))
    pca = run_pca_section(config, dataset, ArtifactSet(config.out / "pca"))
    sentiment: Optional[SentimentSection] = None
    if has_corpora:
        sentiment = run_sentiment_section(config, dataset, ArtifactSet(config.out / "sentiment"))

    bundle = ReportBundle(metrics=metrics, pca=pca, sentiment=sentiment, warnings=warnings)
    ArtifactSet(config.out).text(REPORT_FILE, bundle.to_json())
    return bundle


COMMANDS: Dict[str, Callable[[RunConfig], ReportBundle]] = {
    "metrics": cmd_metrics,
    "pca": cmd_pca,
    "sentiment": cmd_sentiment,
    "report": cmd_report,
}


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    keys = ("out", "scale", "k", "seed", "unique")
    return {key: getattr(args, key, None) for key in keys}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required (metrics, pca, sentiment, report, schema)")
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"kolan: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.command == "schema":
        print(json.dumps(ReportBundle.model_json_schema(), indent=2, sort_keys=True))
        return EXIT_OK

    configure_logging(args.verbose)
    try:
        config = build_config(args.config, _overrides(args))
        bundle = COMMANDS[args.command](config)
    except ProviderUnavailable as e:
        print(f"kolan: error: {e}", file=sys.stderr)
        print(
            "kolan: hint: retry when the endpoint is reachable; no totals were written",
            file=sys.stderr,
        )
        return e.exit_code
    except KolanError as e:
        print(f"kolan: error: {e}", file=sys.stderr)
        return e.exit_code

    print(render_summary(bundle), end="")
    print(f"\nOutputs written to {config.out}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
