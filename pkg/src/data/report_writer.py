"""
Deterministic CSV / JSON emission of report tables
"""
import logging
import sys
from pathlib import Path
from typing import Iterable, Optional, Union

import pandas as pd

from ..models.report import ReportFormat

logger = logging.getLogger(__name__)

JSON_PRECISION = 15
CSV_FLOAT_FORMAT = "%.10f"


def rows_to_frame(rows: Iterable, columns: Optional[list[str]] = None) -> pd.DataFrame:
    """DataFrame from models exposing to_dict(), keeping column order"""
    records = [row.to_dict() for row in rows]
    return pd.DataFrame.from_records(records, columns=columns)


def render_table(frame: pd.DataFrame, fmt: ReportFormat) -> str:
    """
    Render a table as text

    CSV: ',' separator, floats fixed at 10 decimals, header row, LF line
    endings, no index.
    JSON: a list of records.
    """
    if fmt is ReportFormat.JSON:
        return frame.to_json(orient="records", double_precision=JSON_PRECISION, indent=2) + "\n"
    return frame.to_csv(index=False, lineterminator="\n", float_format=CSV_FLOAT_FORMAT)


def write_table(
    frame: pd.DataFrame,
    fmt: ReportFormat,
    out: Optional[Union[str, Path]] = None,
) -> None:
    """
    Write a table to a file, or to stdout when out is None

    Raises:
        OSError: the destination cannot be written
    """
    text = render_table(frame, fmt)
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(out)
    path.write_text(text, encoding="utf-8", newline="\n")
    logger.info(f"Wrote {len(frame)} rows to {path}")
