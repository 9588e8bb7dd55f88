"""
Reading series and code files, and rendering command output.
"""

from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union
import json
import logging
import re
import numpy as np
import pandas as pd
from pydantic import BaseModel, Field, validator

from ..analysis import PatternDistribution, PatternSequence
from ..encodings import CodeTableRow, EncodingScheme
from ..exceptions import (
    ConfigurationError,
    EmptyColumnError,
    InputError,
    ParseError,
    SeriesIOError,
)

logger = logging.getLogger('ordinal_patterns.cli.io')

_PARSER_LINE = re.compile(r"line (\d+)")


class SeriesFile(BaseModel):
    """
    A column of a CSV file holding a time series.

    Attributes:
        path (Path): The CSV file.
        column (Union[int, str]): Header name, or zero-based column index.
        header (bool): Whether the first line is a header.
    """
    path: Path = Field(..., description="CSV file holding the series.")
    column: Union[int, str] = Field(0, description="Header name or zero-based column index.")
    header: bool = Field(True, description="Whether the first line names the columns.")

    @validator('column')
    def validate_column(cls, v):
        if isinstance(v, int) and v < 0:
            raise ValueError(f"Column index must be non-negative, got {v}.")
        return v


def _resolve_column(frame: pd.DataFrame, f: SeriesFile) -> Any:
    column = f.column
    if f.header and isinstance(column, str) and column in frame.columns:
        return column
    if isinstance(column, str):
        if not column.strip().isdigit():
            error_msg = f"Column {column!r} not found in {f.path}; available: {list(frame.columns)}."
            logger.error(error_msg)
            raise ConfigurationError(error_msg)
        column = int(column)
    if column >= frame.shape[1]:
        error_msg = f"Column index {column} out of range; {f.path} has {frame.shape[1]} columns."
        logger.error(error_msg)
        raise ConfigurationError(error_msg)
    return frame.columns[column]


def _undecodable_line(path: Path) -> Optional[int]:
    try:
        raw = Path(path).read_bytes()
        raw.decode("utf-8")
    except UnicodeDecodeError as e:
        return raw.count(b"\n", 0, e.start) + 1
    except OSError:
        return None
    return None


def read_series(f: SeriesFile) -> np.ndarray:
    """
    Read one column of a CSV file as a series of finite reals.

    Every cell of the column must parse as a finite number; nothing is
    silently dropped.

    Args:
        f (SeriesFile): File, column and header flag.

    Returns:
        np.ndarray: The values in file order.

    Raises:
        SeriesIOError: If the file cannot be read.
        ParseError: If a cell is not a finite number or the CSV is malformed.
        EmptyColumnError: If the column holds no values.
        ConfigurationError: If the column does not exist.

    Example:
        >>> read_series(SeriesFile(path="open.csv", column="open")).tolist()
        [9.0, 5.0]
    """
    logger.debug(f"Reading series from {f.path} (column={f.column!r}, header={f.header}).")
    try:
        frame = pd.read_csv(
            f.path,
            header=0 if f.header else None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
        )
    except pd.errors.EmptyDataError as e:
        error_msg = f"{f.path} is empty."
        logger.error(error_msg)
        raise EmptyColumnError(error_msg) from e
    except pd.errors.ParserError as e:
        match = _PARSER_LINE.search(str(e))
        line = int(match.group(1)) if match else None
        error_msg = f"{f.path} is not valid CSV: {e}"
        logger.error(error_msg)
        raise ParseError(error_msg, line=line) from e
    except UnicodeDecodeError as e:
        line = _undecodable_line(f.path)
        error_msg = f"{f.path}, line {line}: not valid UTF-8 ({e.reason})."
        logger.error(error_msg)
        raise ParseError(error_msg, line=line) from e
    except OSError as e:
        error_msg = f"Cannot read {f.path}: {e}"
        logger.error(error_msg)
        raise SeriesIOError(error_msg) from e

    name = _resolve_column(frame, f)
    cells = frame[name]
    if cells.empty:
        error_msg = f"Column {name!r} of {f.path} holds no values."
        logger.error(error_msg)
        raise EmptyColumnError(error_msg)

    values = pd.to_numeric(cells.fillna("").str.strip(), errors="coerce").to_numpy(dtype=np.float64)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        row = int(bad[0])
        line = row + 1 + int(f.header)
        error_msg = f"{f.path}, line {line}, column {name!r}: {cells.iloc[row]!r} is not a finite number."
        logger.error(error_msg)
        raise ParseError(error_msg, line=line, column=str(name))

    logger.info(f"Read {values.size} values from {f.path}.")
    return values


def read_code_sequence(path: Union[str, Path]) -> PatternSequence:
    """
    Read a pattern sequence written by ``extract --format json``.

    Raises:
        SeriesIOError: If the file cannot be read.
        InputError: If the file is not a pattern sequence document.
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            document = json.load(handle)
    except OSError as e:
        error_msg = f"Cannot read {path}: {e}"
        logger.error(error_msg)
        raise SeriesIOError(error_msg) from e
    except json.JSONDecodeError as e:
        error_msg = f"{path} is not valid JSON: {e}"
        logger.error(error_msg)
        raise InputError(error_msg) from e
    if not isinstance(document, dict):
        error_msg = f"{path} does not hold a pattern sequence object."
        logger.error(error_msg)
        raise InputError(error_msg)
    return PatternSequence.from_json_dict(document)


def format_tuple(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


def render_table(rows: Sequence[CodeTableRow], fmt: str, scheme: Optional[EncodingScheme] = None) -> str:
    """
    Render a code table as text, CSV or JSON.

    Text rows read ``2,3,1 | 1,1,0 | kse 4 | lehmer 3``; a scheme keeps only its column.
    """
    schemes = [EncodingScheme.KSE, EncodingScheme.LEHMER] if scheme is None else [EncodingScheme.parse(scheme)]
    columns = ["rank", "inversion"] + [s.value for s in schemes]

    if fmt == "json":
        return json.dumps([
            dict(zip(columns, [list(row.rank.ranks), list(row.inversion.counts)] + [getattr(row, s.value) for s in schemes]))
            for row in rows
        ]) + "\n"

    records = [
        [format_tuple(row.rank.ranks), format_tuple(row.inversion.counts)] + [getattr(row, s.value) for s in schemes]
        for row in rows
    ]
    if fmt == "csv":
        return pd.DataFrame.from_records(records, columns=columns).to_csv(index=False)
    return "".join(
        " | ".join(record[:2] + [f"{s.value} {code}" for s, code in zip(schemes, record[2:])]) + "\n"
        for record in records
    )


def render_sequence(sequence: PatternSequence, fmt: str) -> str:
    """Newline-delimited codes (absent windows as empty lines) or a JSON document."""
    if fmt == "json":
        return json.dumps(sequence.to_json_dict()) + "\n"
    return "".join(("" if code is None else str(code)) + "\n" for code in sequence.to_list())


def render_distribution(dist: PatternDistribution, fmt: str, include_unobserved: bool = False) -> str:
    """
    Frequency report: code, pattern, count and relative frequency (6 decimals).

    The CSV form repeats the skipped count in its last column.
    """
    document = dist.to_json_dict(include_unobserved=include_unobserved)
    if fmt == "json":
        return json.dumps(document) + "\n"
    records = [
        {
            "code": row["code"],
            "pattern": format_tuple(row["pattern"]),
            "count": row["count"],
            "frequency": "" if row["frequency"] is None else f"{row['frequency']:.6f}",
            "skipped": dist.skipped,
        }
        for row in document["patterns"]
    ]
    frame = pd.DataFrame.from_records(records, columns=["code", "pattern", "count", "frequency", "skipped"])
    return frame.to_csv(index=False)
