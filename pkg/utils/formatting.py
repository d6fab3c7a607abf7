"""Rendering of result records as CSV, JSON or Markdown."""

import json
import logging
import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import pandas as pd

# Module logger
logger = logging.getLogger(__name__)

FORMATS = ("csv", "json", "markdown")

TABLE_COLUMNS = [
    "group", "class", "b2", "a2", "a3", "a4", "a6", "a8", "a12", "b4sing", "b6sing",
    "b4", "chi", "c4", "c2sq", "cbar", "verified",
]

_HALF = re.compile(r"^(-?\d+)/2$")


def markdown_cell(value) -> str:
    """Table-style cell: halves as decimals (261/2 -> 130.5), booleans lower-case."""
    if hasattr(value, "item"):
        # numpy scalar from the frame
        value = value.item()
    if isinstance(value, bool):
        return "true" if value else "false"
    text = str(value)
    match = _HALF.match(text)
    if match:
        return str(float(Fraction(int(match.group(1)), 2)))
    return text


def records_frame(records: Sequence[Dict], columns: Optional[List[str]] = None) -> pd.DataFrame:
    """DataFrame over the records, columns in the given (or first-seen) order."""
    if columns is None:
        columns = []
        for record in records:
            columns.extend(k for k in record if k not in columns)
    return pd.DataFrame(list(records), columns=columns)


def render_markdown(frame: pd.DataFrame) -> str:
    header = "| " + " | ".join(str(c) for c in frame.columns) + " |"
    rule = "|" + "|".join("---" for _ in frame.columns) + "|"
    lines = [header, rule]
    for row in frame.itertuples(index=False):
        lines.append("| " + " | ".join(markdown_cell(v) for v in row) + " |")
    return "\n".join(lines) + "\n"


def _ordered(frame: pd.DataFrame, records: Sequence[Dict]) -> List[Dict]:
    return [{c: record.get(c) for c in frame.columns} for record in records]


def render_json_document(sections: Dict[str, object], columns: Optional[Dict[str, List[str]]] = None) -> str:
    """
    One JSON object for a multi-part report. List-of-dict sections are
    column-ordered like ``render_records``; other values pass through.
    """
    columns = columns or {}
    document = {}
    for name, value in sections.items():
        if isinstance(value, list) and all(isinstance(v, dict) for v in value):
            value = _ordered(records_frame(value, columns.get(name)), value)
        document[name] = value
    return json.dumps(document, indent=2) + "\n"


def render_records(records: Sequence[Dict], fmt: str = "csv", columns: Optional[List[str]] = None) -> str:
    """
    Render records in one of FORMATS.

    CSV and JSON keep rationals as "p/q"; only Markdown rewrites halves.

    Raises:
        ValueError: On an unknown format
    """
    if fmt not in FORMATS:
        raise ValueError(f"Unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}")
    frame = records_frame(records, columns)
    if fmt == "json":
        return json.dumps(_ordered(frame, records), indent=2) + "\n"
    if fmt == "markdown":
        return render_markdown(frame)
    return frame.to_csv(index=False, lineterminator="\n")
