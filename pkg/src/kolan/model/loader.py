"""File-based ingestion and serialization of campaign datasets.

Profiles are read from a CSV file with a fixed header, corpora from a JSON
array. Every row is validated through the pydantic models in
:mod:`kolan.model.profiles`; pydantic failures are translated into kolan's
own ParseError / ValidationError carrying row numbers and profile ids.
"""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from pydantic import ValidationError as PydanticValidationError

from ..errors import InputIOError, ParseError, ValidationError
from .profiles import CommentCorpus, Dataset, KolProfile

logger = logging.getLogger(__name__)

PROFILE_COLUMNS: Tuple[str, ...] = (
    "id",
    "name",
    "kol_type",
    "platform",
    "follower_tier",
    "follower_count",
    "post_count",
    "avg_likes_per_post",
    "theme",
    "audience",
    "campaign_likes",
    "campaign_format",
)

PathLike = Union[str, Path]


def _read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8-sig")
    except (OSError, UnicodeDecodeError) as e:
        raise InputIOError(path, str(e)) from e


def _error_message(error: Mapping[str, Any], default: str) -> str:
    msg = str(error.get("msg", default))
    # pydantic prefixes messages raised from validators
    return msg.removeprefix("Value error, ")


def _translate_profile_error(
    error: PydanticValidationError, row: int, raw: Dict[str, str]
) -> Exception:
    """Map a pydantic failure on one CSV row to a kolan error."""
    first = error.errors()[0]
    loc = first.get("loc", ())
    if not loc:
        # model-level invariant (tier consistency, positive baseline)
        entity = raw.get("id") or "profile"
        return ValidationError(entity, _error_message(first, "invalid profile"), row=row)
    return ParseError(row, str(loc[0]), _error_message(first, "invalid value"))


def parse_profiles(text: str) -> Tuple[List[KolProfile], Dict[str, int]]:
    """Parse profile CSV text.

    Args:
        text: CSV content with the exact documented header

    Returns:
        Tuple of (profiles in file order, map of id -> source row)

    Raises:
        ParseError: On header mismatch, wrong field count or bad field value
        ValidationError: On a violated profile invariant
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        return [], {}

    if tuple(h.strip() for h in header) != PROFILE_COLUMNS:
        raise ParseError(1, "<header>", f"expected header {','.join(PROFILE_COLUMNS)}")

    profiles: List[KolProfile] = []
    rows: Dict[str, int] = {}
    for record in reader:
        row = reader.line_num
        if not record or all(not cell.strip() for cell in record):
            continue
        if len(record) != len(PROFILE_COLUMNS):
            raise ParseError(
                row, "<record>", f"expected {len(PROFILE_COLUMNS)} fields, got {len(record)}"
            )
        raw = dict(zip(PROFILE_COLUMNS, (cell.strip() for cell in record)))
        try:
            profile = KolProfile.model_validate(raw)
        except PydanticValidationError as e:
            raise _translate_profile_error(e, row, raw) from e
        if profile.id in rows:
            first = rows[profile.id]
            raise ValidationError(
                profile.id, f"duplicate profile id (first on row {first})", row=row
            )
        profiles.append(profile)
        rows[profile.id] = row

    return profiles, rows


def parse_corpora(text: str) -> List[CommentCorpus]:
    """Parse corpora JSON text.

    Args:
        text: JSON array of {"kol_id", "source_platform", "comments"} objects

    Returns:
        Corpora in file order

    Raises:
        ParseError: On malformed JSON or an invalid corpus object
    """
    try:
        data: Any = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, f"<json col {e.colno}>", e.msg) from e

    if not isinstance(data, list):
        raise ParseError(1, "<root>", "corpora file must contain a JSON array")

    corpora: List[CommentCorpus] = []
    for index, item in enumerate(data):
        try:
            corpora.append(CommentCorpus.model_validate(item))
        except PydanticValidationError as e:
            first = e.errors()[0]
            field = ".".join(str(part) for part in first.get("loc", ())) or "<object>"
            # JSON arrays have no stable line numbers; report the 1-based item index
            raise ParseError(index + 1, field, _error_message(first, "invalid corpus")) from e
    return corpora


def load_dataset(profiles_path: PathLike, corpora_path: Optional[PathLike] = None) -> Dataset:
    """Load and validate a campaign dataset from files.

    Args:
        profiles_path: Profiles CSV path
        corpora_path: Optional corpora JSON path

    Returns:
        Validated, immutable Dataset

    Raises:
        InputIOError: If a file cannot be read
        ParseError: On malformed input
        ValidationError: On violated invariants (including an empty dataset)
        DanglingReference: If a corpus references an unknown profile id
    """
    profiles, _ = parse_profiles(_read_text(profiles_path))
    corpora: List[CommentCorpus] = []
    if corpora_path is not None:
        corpora = parse_corpora(_read_text(corpora_path))

    dataset = Dataset(profiles=tuple(profiles), corpora=tuple(corpora))
    logger.info(
        "loaded %d profiles and %d corpora from %s",
        len(dataset.profiles),
        len(dataset.corpora),
        profiles_path,
    )
    return dataset


def _format_number(value: float) -> str:
    return repr(float(value))


def dump_profiles(dataset: Dataset) -> str:
    """Render the dataset's profiles in the documented CSV format."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(PROFILE_COLUMNS)
    for p in dataset.profiles:
        writer.writerow(
            [
                p.id,
                p.name,
                p.kol_type.value,
                p.platform.value,
                p.follower_tier.value,
                p.follower_count,
                p.post_count,
                _format_number(p.avg_likes_per_post),
                p.theme.value,
                p.audience.value,
                p.campaign_likes,
                p.campaign_format.value,
            ]
        )
    return buffer.getvalue()


def dump_corpora(dataset: Dataset) -> str:
    """Render the dataset's corpora in the documented JSON format."""
    payload = [
        {
            "kol_id": c.kol_id,
            "source_platform": c.source_platform.value,
            "comments": list(c.comments),
        }
        for c in dataset.corpora
    ]
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def save_dataset(
    dataset: Dataset, profiles_path: PathLike, corpora_path: Optional[PathLike] = None
) -> None:
    """Write a dataset back to disk in the documented formats.

    Raises:
        InputIOError: If a file cannot be written
    """
    targets: List[Tuple[PathLike, str]] = [(profiles_path, dump_profiles(dataset))]
    if corpora_path is not None:
        targets.append((corpora_path, dump_corpora(dataset)))
    for path, content in targets:
        try:
            Path(path).write_text(content, encoding="utf-8")
        except OSError as e:
            raise InputIOError(path, str(e)) from e
