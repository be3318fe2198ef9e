"""Artifact writers. Every file is UTF-8 with "\\n" line endings."""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Iterable, List, Sequence, Union

from ..errors import InputIOError

logger = logging.getLogger(__name__)

Cell = Union[str, int, float]


def format_cell(value: Cell) -> str:
    """Render a cell; floats use their shortest round-trip form."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value + 0.0)  # normalizes -0.0
    return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(cell) for cell in row])
    return buffer.getvalue()


def write_text(path: Path, text: str) -> Path:
    """Write a text artifact, creating parent directories.

    Raises:
        InputIOError: If the file cannot be written
    """
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as e:
        raise InputIOError(path, str(e)) from e
    logger.info("wrote %s", path)
    return path


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> Path:
    return write_text(path, render_csv(header, rows))


def write_json(path: Path, data: Any) -> Path:
    return write_text(path, json.dumps(data, ensure_ascii=False, indent=2) + "\n")


class ArtifactSet:
    """Collects the files one command writes, in write order."""

    def __init__(self, out: Path) -> None:
        self.out = out
        self.paths: List[Path] = []

    def text(self, name: str, text: str) -> None:
        self.paths.append(write_text(self.out / name, text))

    def csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> None:
        self.paths.append(write_csv(self.out / name, header, rows))

    def json(self, name: str, data: Any) -> None:
        self.paths.append(write_json(self.out / name, data))

    @property
    def names(self) -> List[str]:
        return [p.name for p in self.paths]
