"""Plot-ready table records and their CSV/JSON forms.

Counts travel as unpadded decimal strings because they outgrow doubles long
before they stop being interesting; probabilities are decimals with twelve
significant digits.  CSV output is UTF-8 with LF line endings under the
fixed header ``k,count,probability,class,source`` and parses back to the
identical values.  JSON output mirrors the rows and adds run metadata.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .closed_form import decimal_string

CSV_HEADER = ("k", "count", "probability", "class", "source")
SOURCES = ("closed", "enumerated", "simulated", "limit")


@dataclass(frozen=True)
class OutputRecord:
    """One table row: a sojourn cell or a grid point of a limit law.

    ``k`` is the half-sojourn index for counting tables and the decimal grid
    coordinate for limit-law tables; ``count`` and ``probability`` may each
    be absent.
    """

    k: int | str
    count: int | None
    probability: Fraction | float | None
    path_class: str
    source: str

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        if self.count is not None and self.count < 0:
            raise ValueError("count must be nonnegative")

    def fields(self) -> tuple[str, str, str, str, str]:
        """The five rendered CSV fields, in header order."""
        if self.probability is None:
            probability = ""
        elif isinstance(self.probability, float):
            probability = format(self.probability, ".12g")
        else:
            probability = decimal_string(self.probability)
        return (
            str(self.k),
            "" if self.count is None else str(self.count),
            probability,
            self.path_class,
            self.source,
        )


def records_to_csv(records) -> str:
    """Render records as canonical CSV text (header, LF endings, no quoting)."""
    lines = [",".join(CSV_HEADER)]
    for record in records:
        lines.append(",".join(record.fields()))
    return "\n".join(lines) + "\n"


def records_to_json(records, metadata: dict) -> str:
    """Render records as a JSON document with the metadata up front."""
    rows = []
    for record in records:
        k, count, probability, path_class, source = record.fields()
        rows.append({
            "k": k,
            "count": count or None,
            "probability": probability or None,
            "class": path_class or None,
            "source": source,
        })
    return json.dumps({**metadata, "rows": rows}, indent=2) + "\n"


def write_text(text: str, out_path: str | None) -> None:
    """Write to the given path, or stdout when no path is given."""
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_bytes(text.encode("utf-8"))


def read_table(path: str) -> tuple[dict, list[dict]]:
    """Load a table written by this package, CSV or JSON detected by content.

    Returns (metadata, rows); CSV tables carry empty metadata.  Row values
    stay strings (or None for empty fields) exactly as serialized.
    """
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        document = json.loads(text)
        rows = document.pop("rows", None)
        if not isinstance(rows, list):
            raise ValueError(f"{path}: JSON table has no rows list")
        return document, rows
    lines = [line for line in text.split("\n") if line]
    if not lines or tuple(lines[0].split(",")) != CSV_HEADER:
        raise ValueError(f"{path}: expected the header {','.join(CSV_HEADER)}")
    rows = []
    for line in lines[1:]:
        parts = line.split(",")
        if len(parts) != len(CSV_HEADER):
            raise ValueError(f"{path}: malformed row {line!r}")
        rows.append({name: value or None for name, value in zip(CSV_HEADER, parts)})
    return {}, rows


def sojourn_counts(metadata: dict, rows: list[dict]) -> tuple[int, list[int]]:
    """Interpret a loaded table as a sojourn histogram.

    Returns (half_steps, counts indexed by k).  The JSON metadata pins the
    even step count when present; otherwise the largest k defines the range.
    Rows without counts (limit-law tables) are rejected.
    """
    cells: dict[int, int] = {}
    for row in rows:
        if row.get("count") is None:
            raise ValueError("table has rows without counts; not a sojourn histogram")
        try:
            k = int(row["k"])
            count = int(row["count"])
        except (TypeError, ValueError) as exc:
            raise ValueError("table rows are not integer sojourn cells") from exc
        if k < 0 or count < 0:
            raise ValueError("table contains negative cells")
        if k in cells:
            raise ValueError(f"table lists k={k} twice")
        cells[k] = count
    if not cells:
        raise ValueError("table has no rows")
    steps = metadata.get("steps")
    if steps is not None:
        steps = int(steps)
        if steps < 2 or steps % 2:
            raise ValueError("sojourn histograms need a positive even step count")
        half_steps = steps // 2
    else:
        half_steps = max(cells)
    if max(cells) > half_steps:
        raise ValueError("table has cells beyond half the step count")
    return half_steps, [cells.get(k, 0) for k in range(half_steps + 1)]
