"""Run configuration.

Values come from three layers, later ones winning: model defaults (the
bundled data files), a ``key = value`` config file, then command-line flags.

Config file grammar::

    # comment
    profiles = profiles.csv
    k = 3

Relative paths in a config file resolve against the file's directory. An
empty value for ``corpora`` or ``cache`` unsets it.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic import ValidationError as PydanticValidationError

from .. import bundled
from ..errors import InputIOError, UsageError
from ..metrics.engagement import Scale

logger = logging.getLogger(__name__)

FORMATS: Tuple[str, ...] = ("csv", "json", "svg")
CACHE_FILENAME = "translation-cache.json"

PATH_KEYS = (
    "profiles",
    "corpora",
    "lexicon",
    "stopwords_id",
    "stopwords_en",
    "lemmas",
    "slang",
    "dictionary",
    "cache",
    "out",
)
OPTIONAL_KEYS = ("corpora", "cache", "endpoint")


def _bundled(name: str) -> Any:
    return lambda: bundled.bundled_path(name)


class RunConfig(BaseModel):
    """Everything a kolan command needs to run.

    Attributes:
        profiles: Profile CSV
        corpora: Comment corpus JSON; None skips sentiment in full reports
        lexicon: Emotion lexicon TSV
        stopwords_id: Indonesian stoplist
        stopwords_en: English stoplist
        lemmas: Lemma table TSV
        slang: Slang map TSV
        dictionary: Dictionary-provider TSV
        cache: Translation cache JSON; defaults to <out>/translation-cache.json
        provider: "dictionary" (offline) or "http"
        endpoint: URL for provider=http
        batch_size: Words per HTTP request
        max_retries: HTTP retries per batch
        timeout: HTTP timeout in seconds
        k: Number of clusters
        seed: k-means tie-break seed
        scale: Chart value scale
        out: Output directory
        formats: Artifact formats to write
        unique: Count each word once in sentiment totals
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    profiles: Path = Field(default_factory=_bundled(bundled.PROFILES))
    corpora: Optional[Path] = Field(default_factory=_bundled(bundled.CORPORA))
    lexicon: Path = Field(default_factory=_bundled(bundled.LEXICON))
    stopwords_id: Path = Field(default_factory=_bundled(bundled.STOPWORDS_ID))
    stopwords_en: Path = Field(default_factory=_bundled(bundled.STOPWORDS_EN))
    lemmas: Path = Field(default_factory=_bundled(bundled.LEMMAS))
    slang: Path = Field(default_factory=_bundled(bundled.SLANG))
    dictionary: Path = Field(default_factory=_bundled(bundled.DICTIONARY))
    cache: Optional[Path] = None

    provider: Literal["dictionary", "http"] = "dictionary"
    endpoint: Optional[str] = None
    batch_size: int = Field(default=128, ge=1)
    max_retries: int = Field(default=3, ge=0)
    timeout: float = Field(default=10.0, gt=0)

    k: int = Field(default=3, ge=1)
    seed: int = 7
    scale: Scale = Scale.LINEAR
    out: Path = Path("kolan-out")
    formats: Tuple[str, ...] = FORMATS
    unique: bool = False

    @field_validator("formats", mode="before")
    @classmethod
    def _split_formats(cls, value: Any) -> Any:
        if isinstance(value, str):
            value = [part.strip() for part in value.split(",") if part.strip()]
        return value

    @field_validator("formats")
    @classmethod
    def _known_formats(cls, value: Tuple[str, ...]) -> Tuple[str, ...]:
        unknown = [fmt for fmt in value if fmt not in FORMATS]
        if unknown:
            raise ValueError(f"unknown formats {unknown}; choose from {', '.join(FORMATS)}")
        # canonical order, no duplicates
        return tuple(fmt for fmt in FORMATS if fmt in value)

    @property
    def cache_path(self) -> Path:
        return self.cache if self.cache is not None else self.out / CACHE_FILENAME

    def wants(self, fmt: str) -> bool:
        return fmt in self.formats

    def require(self, *keys: str) -> None:
        """Check that the named input files exist.

        Raises:
            UsageError: If a key is unset
            InputIOError: Naming the first missing path
        """
        for key in keys:
            path = getattr(self, key)
            if path is None:
                raise UsageError(f"no {key} file configured")
            if not Path(path).is_file():
                raise InputIOError(path, f"{key} file not found")


def parse_config_text(text: str, base_dir: Union[str, Path, None] = None) -> Dict[str, Any]:
    """Parse ``key = value`` lines.

    Args:
        text: Config file contents
        base_dir: Directory relative paths resolve against

    Returns:
        Raw values keyed by setting name; path settings are Paths, unset
        optional settings are None

    Raises:
        UsageError: On a malformed line, unknown key or repeated key
    """
    known = set(RunConfig.model_fields)
    values: Dict[str, Any] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise UsageError(f"config line {lineno}: expected key = value, got {line.strip()!r}")
        key, value = (part.strip() for part in stripped.split("=", 1))
        if key not in known:
            raise UsageError(f"config line {lineno}: unknown key {key!r}")
        if key in values:
            raise UsageError(f"config line {lineno}: {key!r} given twice")

        if not value:
            if key not in OPTIONAL_KEYS:
                raise UsageError(f"config line {lineno}: {key!r} needs a value")
            values[key] = None
        elif key in PATH_KEYS:
            path = Path(value).expanduser()
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            values[key] = path
        else:
            values[key] = value
    return values


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """Read and parse a config file.

    Raises:
        InputIOError: If the file cannot be read
        UsageError: If the contents are invalid
    """
    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
    except OSError as e:
        raise InputIOError(source, str(e)) from e
    return parse_config_text(text, source.parent)


def _describe(error: PydanticValidationError) -> str:
    parts: List[str] = []
    for item in error.errors():
        where = ".".join(str(p) for p in item["loc"]) or "config"
        parts.append(f"{where}: {item['msg']}")
    return "; ".join(parts)


def build_config(
    config_path: Union[str, Path, None] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """Assemble a RunConfig from defaults, an optional file and overrides.

    Overrides whose value is None are ignored.

    Raises:
        InputIOError: If the config file cannot be read
        UsageError: If any value is invalid
    """
    values: Dict[str, Any] = {}
    if config_path is not None:
        values.update(load_config_file(config_path))
        logger.debug("config file %s sets %s", config_path, sorted(values))
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value
    try:
        config = RunConfig.model_validate(values)
    except PydanticValidationError as e:
        raise UsageError(f"invalid configuration: {_describe(e)}") from e
    if config.provider == "http" and not config.endpoint:
        raise UsageError("provider = http requires an endpoint")
    return config
