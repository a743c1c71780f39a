"""
Result rows and their CSV/JSON serialization.

This module provides the row dataclasses emitted by each command and
RowWriter, which renders them deterministically: big integers as decimal
strings, fixed column order, "\n" line endings.
"""

import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from typing import Sequence, TextIO


@dataclass
class TableRow:
    """One statistic value. Empty strings stand for "not applicable"."""
    stat: str
    n: str
    k: str
    param: str
    value: str
    source: str


@dataclass
class VerifyRow:
    """
    One three-way check.

    Attributes:
        status: agree, documented-discrepancy or discrepancy
        oracle: Enumeration value ("" if not computed)
        closedform: Closed-form value ("" outside the formula's range)
        series: Generating-function value
    """
    stat: str
    n: str
    k: str
    param: str
    status: str
    oracle: str
    closedform: str
    series: str


@dataclass
class AsymRow:
    """One asymptotic comparison; floats in repr form."""
    stat: str
    n: str
    xi: str
    estimate: str
    exact_ratio: str
    rel_err: str


def cell(value: object) -> str:
    """Decimal string for ints, "p/q" for fractions, "" for None."""
    return "" if value is None else str(value)


class RowWriter:
    """
    Writes rows of one dataclass type as CSV or JSON.

    CSV has a header line naming the dataclass fields. JSON is an array of
    objects with the same keys, indented by two spaces, with a trailing newline.
    """

    def __init__(self, output_format: str) -> None:
        """
        Initialize the writer.

        Args:
            output_format: "csv" or "json"
        """
        if output_format not in ("csv", "json"):
            raise ValueError(f"unsupported format {output_format!r}")
        self.output_format = output_format

    def render(self, rows: Sequence[object], row_type: type) -> str:
        """
        Render rows to a string.

        Args:
            rows: Dataclass instances of row_type
            row_type: Row dataclass, used for the column order

        Returns:
            The serialized document
        """
        columns = [f.name for f in fields(row_type)]
        if self.output_format == "json":
            return json.dumps([asdict(row) for row in rows], indent=2) + "\n"
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            data = asdict(row)
            writer.writerow([data[column] for column in columns])
        return buffer.getvalue()

    def write(self, stream: TextIO, rows: Sequence[object], row_type: type) -> None:
        stream.write(self.render(rows, row_type))
        stream.flush()
