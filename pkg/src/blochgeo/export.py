"""Tabular export of CLI results.

CSV files carry a header row and data rows only (RFC-4180 style, LF line
endings, floats at 17 significant digits so values round-trip exactly);
run metadata travels in JSON exports and on stdout. JSON documents nest
{"metadata", "columns", "rows"} and never contain NaN: missing values
are serialized as null.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path


def format_float(value: float) -> str:
    return format(value, ".17g")


def _json_cell(value):
    if value is None:
        return None
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


@dataclass
class ExportRecord:
    """Labelled rows plus run metadata, serializable to CSV or JSON."""

    columns: list[str]
    rows: list[list]
    metadata: dict = field(default_factory=dict)

    def write(self, path: str | Path, fmt: str | None = None) -> Path:
        """Write to `path`. The suffix picks the format (.json or CSV)
        unless `fmt` ('csv' or 'json') overrides it."""
        path = Path(path)
        if fmt is None:
            fmt = "json" if path.suffix.lower() == ".json" else "csv"
        if fmt == "json":
            self._write_json(path)
        elif fmt == "csv":
            self._write_csv(path)
        else:
            raise ValueError(f"unknown export format {fmt!r}")
        return path

    def _write_csv(self, path: Path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(self.columns)
            for row in self.rows:
                writer.writerow(
                    [
                        ""
                        if cell is None or (isinstance(cell, float) and not math.isfinite(cell))
                        else (format_float(cell) if isinstance(cell, float) else cell)
                        for cell in row
                    ]
                )

    def _write_json(self, path: Path) -> None:
        document = {
            "metadata": self.metadata,
            "columns": self.columns,
            "rows": [[_json_cell(cell) for cell in row] for row in self.rows],
        }
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(document, handle, indent=2, allow_nan=False)
            handle.write("\n")


def read_export(path: str | Path) -> ExportRecord:
    """Read back a file produced by ExportRecord.write."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        with open(path, encoding="utf-8") as handle:
            document = json.load(handle)
        return ExportRecord(
            columns=document["columns"],
            rows=document["rows"],
            metadata=document.get("metadata", {}),
        )
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        columns = next(reader)
        rows = []
        for raw in reader:
            row = []
            for cell in raw:
                if cell == "":
                    row.append(None)
                else:
                    try:
                        row.append(float(cell))
                    except ValueError:
                        row.append(cell)
            rows.append(row)
    return ExportRecord(columns=columns, rows=rows)
