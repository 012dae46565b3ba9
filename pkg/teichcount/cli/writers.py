"""
CSV and JSON rendering of report rows
"""

import csv
import io
import json
from pathlib import Path
from typing import Optional, Sequence, TextIO, Type

from pydantic import BaseModel


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(rows: Sequence[BaseModel], model: Type[BaseModel]) -> str:
    """Header from the model's field order, one line per row, LF line endings"""
    buffer = io.StringIO()
    columns = list(model.model_fields)
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        data = row.model_dump()
        writer.writerow([_cell(data[column]) for column in columns])
    return buffer.getvalue()


def render_json(rows: Sequence[BaseModel]) -> str:
    return json.dumps([row.model_dump() for row in rows], indent=2) + "\n"


def emit(
    rows: Sequence[BaseModel],
    model: Type[BaseModel],
    as_json: bool = False,
    out: Optional[Path] = None,
    stream: Optional[TextIO] = None,
) -> str:
    """
    Render rows and write them to `out` or to `stream`.

    Returns:
        The rendered text
    """
    text = render_json(rows) if as_json else render_csv(rows, model)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
    elif stream is not None:
        stream.write(text)
    return text
