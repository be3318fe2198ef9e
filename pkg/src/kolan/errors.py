"""Exception hierarchy for kolan.

Every error carries the process exit code the CLI reports for it:

    0   success
    1   validation / computation error
    2   I/O error
    3   translation provider unavailable
    64  usage error
"""

from pathlib import Path
from typing import Union

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_PROVIDER = 3
EXIT_USAGE = 64


class KolanError(Exception):
    """Base class for all kolan errors."""

    exit_code: int = EXIT_VALIDATION


# ============================================================================
# VALIDATION / COMPUTATION (exit 1)
# ============================================================================


class ValidationError(KolanError):
    """An entity violates a domain invariant.

    Attributes:
        entity: Id of the offending entity (profile id, "dataset", ...)
        invariant: Human-readable description of the violated invariant
        row: Source file row of the entity, 0 when unknown
    """

    def __init__(self, entity: str, invariant: str, row: int = 0) -> None:
        self.entity = entity
        self.invariant = invariant
        self.row = row
        where = f" (row {row})" if row else ""
        super().__init__(f"{entity}{where}: {invariant}")


class ParseError(KolanError):
    """An input record could not be parsed.

    Attributes:
        row: 1-based line number in the source file (header is row 1)
        column: Column or field name
        cause: What went wrong
    """

    def __init__(self, row: int, column: str, cause: str) -> None:
        self.row = row
        self.column = column
        self.cause = cause
        super().__init__(f"row {row}, column {column!r}: {cause}")


class DanglingReference(KolanError):
    """A comment corpus references a profile id that does not exist."""

    def __init__(self, kol_id: str) -> None:
        self.kol_id = kol_id
        super().__init__(f"corpus references unknown profile id {kol_id!r}")


class BelowNano(KolanError):
    """Follower count is below the smallest tier (1000)."""

    def __init__(self, follower_count: int) -> None:
        self.follower_count = follower_count
        super().__init__(f"follower count {follower_count} is below the Nano tier (1000)")


class ZeroBaseline(KolanError):
    """A ratio or log transform would divide by / take the log of a non-positive value."""


class ZeroVariance(KolanError):
    """A feature column is constant and cannot be standardized."""

    def __init__(self, column: str) -> None:
        self.column = column
        super().__init__(f"column {column!r} has zero variance")


class NotSymmetric(KolanError):
    """Matrix passed to the symmetric eigensolver is not symmetric."""


class NoConvergence(KolanError):
    """An iterative solver hit its iteration cap."""


class KTooLarge(KolanError):
    """More clusters were requested than there are points."""

    def __init__(self, k: int, n: int) -> None:
        self.k = k
        self.n = n
        super().__init__(f"k={k} exceeds the number of points ({n})")


class StageError(KolanError):
    """A token document is at the wrong pipeline stage."""


class BadCategory(KolanError):
    """Emotion lexicon line names a category outside the closed set."""

    def __init__(self, name: str, row: int = 0) -> None:
        self.name = name
        self.row = row
        where = f" (line {row})" if row else ""
        super().__init__(f"unknown emotion category {name!r}{where}")


class SlangCycle(KolanError):
    """A slang map value is also a key."""


# ============================================================================
# I/O (exit 2)
# ============================================================================


class InputIOError(KolanError):
    """An input or output path could not be read or written."""

    exit_code = EXIT_IO

    def __init__(self, path: Union[str, Path], cause: str = "") -> None:
        self.path = str(path)
        msg = f"cannot access {self.path}"
        if cause:
            msg += f": {cause}"
        super().__init__(msg)


class MissingStoplist(InputIOError):
    """A stopword list file is missing or unreadable."""


class CacheIOError(InputIOError):
    """The translation cache could not be read or written."""


# ============================================================================
# PROVIDER (exit 3) / USAGE (exit 64)
# ============================================================================


class ProviderUnavailable(KolanError):
    """The translation provider failed (network, auth or bad response)."""

    exit_code = EXIT_PROVIDER


class UsageError(KolanError):
    """Invalid command-line usage or configuration."""

    exit_code = EXIT_USAGE
