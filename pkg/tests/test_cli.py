"""Tests for the kolan command line."""

import json
import math
from unittest.mock import patch

import pytest

from kolan.errors import (
    EXIT_IO,
    EXIT_OK,
    EXIT_PROVIDER,
    EXIT_USAGE,
    EXIT_VALIDATION,
    ProviderUnavailable,
)
from kolan.reporting.cli import build_parser, main


def run(*argv):
    return main(list(argv))


_JSON_TYPES = {
    "object": dict,
    "array": list,
    "string": str,
    "boolean": bool,
    "null": type(None),
}


def schema_violations(value, schema, defs, path="$"):
    """Paths in ``value`` that do not conform to a pydantic-generated JSON schema."""
    if "$ref" in schema:
        return schema_violations(value, defs[schema["$ref"].rsplit("/", 1)[-1]], defs, path)
    if "anyOf" in schema:
        options = [schema_violations(value, option, defs, path) for option in schema["anyOf"]]
        return [] if any(not o for o in options) else options[0]
    if "enum" in schema and value not in schema["enum"]:
        return [f"{path}: {value!r} not in {schema['enum']}"]

    kind = schema.get("type")
    if kind == "integer":
        ok = isinstance(value, int) and not isinstance(value, bool)
    elif kind == "number":
        ok = isinstance(value, (int, float)) and not isinstance(value, bool)
    elif kind in _JSON_TYPES:
        ok = isinstance(value, _JSON_TYPES[kind])
    else:
        ok = True
    if not ok:
        return [f"{path}: expected {kind}, got {type(value).__name__}"]

    errors = []
    if kind == "object":
        properties = schema.get("properties", {})
        extra = schema.get("additionalProperties", True)
        required = schema.get("required", [])
        errors += [f"{path}.{key}: missing" for key in required if key not in value]
        for key, item in value.items():
            if key in properties:
                errors += schema_violations(item, properties[key], defs, f"{path}.{key}")
            elif extra is False:
                errors.append(f"{path}.{key}: not allowed")
            elif isinstance(extra, dict):
                errors += schema_violations(item, extra, defs, f"{path}.{key}")
    elif kind == "array" and "items" in schema:
        for i, item in enumerate(value):
            errors += schema_violations(item, schema["items"], defs, f"{path}[{i}]")
    return errors


class TestParser:
    """Argument parsing."""

    def test_report_options(self):
        args = build_parser().parse_args(["report", "--k", "4", "--scale", "log10", "--unique"])
        assert (args.command, args.k, args.scale, args.unique) == ("report", 4, "log10", True)

    def test_unique_defaults_to_unset(self):
        assert build_parser().parse_args(["sentiment"]).unique is None


class TestExitCodes:
    """Documented exit codes."""

    def test_bad_flag(self, capsys):
        assert run("metrics", "--bogus") == EXIT_USAGE
        assert "usage:" in capsys.readouterr().err

    def test_no_command(self):
        assert run() == EXIT_USAGE

    def test_k_zero(self, config_file):
        assert run("pca", "--config", str(config_file), "--k", "0") == EXIT_USAGE

    def test_k_too_large(self, config_file):
        assert run("pca", "--config", str(config_file), "--k", "11") == EXIT_VALIDATION

    def test_missing_profiles(self, tmp_path, capsys):
        missing = tmp_path / "profiles.csv"
        config = tmp_path / "kolan.conf"
        config.write_text(f"profiles = {missing}\nout = {tmp_path / 'out'}\n", encoding="utf-8")
        assert run("metrics", "--config", str(config)) == EXIT_IO
        assert "profiles.csv" in capsys.readouterr().err

    def test_invalid_profile(self, tmp_path, profiles_csv, capsys):
        broken = tmp_path / "profiles.csv"
        broken.write_text(profiles_csv.replace("MidTier,490000", "Micro,490000"), encoding="utf-8")
        config = tmp_path / "kolan.conf"
        config.write_text(f"profiles = {broken}\nout = {tmp_path / 'out'}\n", encoding="utf-8")
        assert run("metrics", "--config", str(config)) == EXIT_VALIDATION
        err = capsys.readouterr().err
        assert "kolan: error: vina (row 5): follower_tier Micro is inconsistent" in err

    def test_provider_unavailable(self, config_file, capsys):
        """A failing provider aborts with exit 3 and writes no totals."""
        with patch(
            "kolan.sentiment.providers.dictionary_provider.DictionaryProvider.translate",
            side_effect=ProviderUnavailable("endpoint down"),
        ):
            code = run("sentiment", "--config", str(config_file))
        assert code == EXIT_PROVIDER
        assert "hint" in capsys.readouterr().err
        assert not (config_file.parent / "out" / "totals.csv").exists()


class TestCommands:
    """Files written by each command."""

    def test_metrics(self, config_file, capsys):
        assert run("metrics", "--config", str(config_file)) == EXIT_OK
        out = config_file.parent / "out"
        for name in ("engagement.csv", "enthusiasm.csv", "format.csv", "metrics.json"):
            assert (out / name).is_file()
        assert (out / "enthusiasm.svg").is_file()
        enthusiasm = (out / "enthusiasm.csv").read_text(encoding="utf-8").splitlines()
        assert enthusiasm[0] == "kol_id,campaign_likes,baseline_avg,rate"
        assert enthusiasm[1] == "chornella,1250,1000.0,1.25"
        assert "ENGAGEMENT & ENTHUSIASM" in capsys.readouterr().out

    def test_metrics_log10(self, config_file):
        """Charts and JSON use log10 while the CSV keeps linear values."""
        assert run("metrics", "--config", str(config_file), "--scale", "log10") == EXIT_OK
        out = config_file.parent / "out"
        engagement = (out / "engagement.csv").read_text(encoding="utf-8").splitlines()
        assert engagement[0] == "series,kol_id,value,scale"
        assert engagement[1] == "avg_likes_per_post,vina,20000.0,log10"

        metrics = json.loads((out / "metrics.json").read_text(encoding="utf-8"))
        series = metrics["engagement"]
        assert series["scale"] == "log10"
        for point in series["points"]:
            assert point["value"] == pytest.approx(math.log10(point["linear_value"]))
        assert [p["kol_id"] for p in series["points"]][:3] == ["vina", "morgan", "melvin"]

    def test_pca(self, config_file):
        assert run("pca", "--config", str(config_file)) == EXIT_OK
        out = config_file.parent / "out"
        clusters = (out / "clusters.csv").read_text(encoding="utf-8").splitlines()
        assert clusters[0] == "kol_id,cluster,pc1,pc2"
        assert len(clusters) == 11
        assert (out / "biplot.svg").is_file()

    def test_sentiment_writes_cache(self, config_file):
        assert run("sentiment", "--config", str(config_file)) == EXIT_OK
        out = config_file.parent / "out"
        totals = (out / "totals.csv").read_text(encoding="utf-8").splitlines()
        assert totals[:2] == ["category,total", "positive,10"]
        cache = json.loads((out / "translation-cache.json").read_text(encoding="utf-8"))
        assert cache["allah"] == "god"

    def test_warm_cache_matches_cold_run(self, config_file):
        """A second run answers from the cache and writes the same bytes."""
        out = config_file.parent / "out"
        names = ("words.csv", "scores.csv", "totals.csv", "sentiment.json")
        assert run("sentiment", "--config", str(config_file)) == EXIT_OK
        cold = {name: (out / name).read_bytes() for name in names if (out / name).exists()}
        assert "totals.csv" in cold

        with patch(
            "kolan.sentiment.providers.dictionary_provider.DictionaryProvider.translate"
        ) as translate:
            assert run("sentiment", "--config", str(config_file)) == EXIT_OK
        translate.assert_not_called()
        assert {name: (out / name).read_bytes() for name in cold} == cold

    def test_sentiment_unique(self, config_file):

        assert run("sentiment", "--config", str(config_file), "--unique") == EXIT_OK
        totals = (config_file.parent / "out" / "totals.csv").read_text(encoding="utf-8")
        assert "positive,7\n" in totals

    def test_formats_limit_outputs(self, config_file):
        config_file.write_text(
            config_file.read_text(encoding="utf-8") + "formats = json\n", encoding="utf-8"
        )
        assert run("metrics", "--config", str(config_file)) == EXIT_OK
        names = sorted(p.name for p in (config_file.parent / "out").iterdir())
        assert names == ["metrics.json"]


class TestReport:
    """The full report command."""

    def test_layout(self, config_file):
        assert run("report", "--config", str(config_file)) == EXIT_OK
        out = config_file.parent / "out"
        assert (out / "report.json").is_file()
        assert (out / "metrics" / "enthusiasm.csv").is_file()
        assert (out / "pca" / "scores.csv").is_file()
        assert (out / "sentiment" / "scores.csv").is_file()

        report = json.loads((out / "report.json").read_text(encoding="utf-8"))
        assert report["schema_version"] == "1.0"
        assert report["warnings"] == []
        assert report["sentiment"]["dominant"][0] == "positive"

    def test_rerun_is_byte_identical(self, config_file):
        report = config_file.parent / "out" / "report.json"
        assert run("report", "--config", str(config_file)) == EXIT_OK
        first = report.read_bytes()
        assert run("report", "--config", str(config_file)) == EXIT_OK
        assert report.read_bytes() == first

    def test_missing_corpora_warns(self, config_file, capsys):
        text = config_file.read_text(encoding="utf-8")
        lines = [line for line in text.splitlines() if not line.startswith("corpora")]
        config_file.write_text("\n".join(lines) + "\ncorpora =\n", encoding="utf-8")

        assert run("report", "--config", str(config_file)) == EXIT_OK
        report = json.loads((config_file.parent / "out" / "report.json").read_text("utf-8"))
        assert report["sentiment"] is None
        assert report["warnings"] == ["comment corpora not found; sentiment section skipped"]
        assert "⚠ comment corpora not found" in capsys.readouterr().out


class TestSchema:
    """kolan schema."""

    def test_prints_json_schema(self, capsys):
        assert run("schema") == EXIT_OK
        schema = json.loads(capsys.readouterr().out)
        assert schema["title"] == "ReportBundle"
        assert "sentiment" in schema["properties"]

    def test_report_conforms_to_schema(self, config_file, capsys):
        """report.json validates against the schema the CLI prints."""
        assert run("report", "--config", str(config_file)) == EXIT_OK
        capsys.readouterr()
        assert run("schema") == EXIT_OK
        schema = json.loads(capsys.readouterr().out)

        report = json.loads((config_file.parent / "out" / "report.json").read_text("utf-8"))
        assert report["metrics"] and report["pca"] and report["sentiment"]
        assert schema_violations(report, schema, schema.get("$defs", {})) == []

    def test_schema_catches_stray_fields(self, config_file, capsys):
        assert run("report", "--config", str(config_file)) == EXIT_OK
        capsys.readouterr()
        assert run("schema") == EXIT_OK
        schema = json.loads(capsys.readouterr().out)

        report = json.loads((config_file.parent / "out" / "report.json").read_text("utf-8"))
        report["pca"]["k"] = "three"
        report["extra"] = 1
        assert schema_violations(report, schema, schema.get("$defs", {})) == [
            "$.pca.k: expected integer, got str",
            "$.extra: not allowed",
        ]
