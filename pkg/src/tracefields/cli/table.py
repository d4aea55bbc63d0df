"""Plain-text field tables.

One record per line, ``label | c0,c1,...,cn | expected_disc``; the last
column is optional and ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class FieldTableRecord:
    label: str
    coefficients: tuple[int, ...]
    expected_disc: int | None = None
    line: int = 0

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def format(self) -> str:
        cols = [self.label, ",".join(map(str, self.coefficients))]
        if self.expected_disc is not None:
            cols.append(str(self.expected_disc))
        return " | ".join(cols)


def parse_record(text: str, line: int = 0) -> FieldTableRecord:
    cols = [c.strip() for c in text.split("|")]
    if len(cols) not in (2, 3) or not cols[0]:
        raise ValueError("expected 'label | c0,...,cn | [disc]'")
    try:
        coeffs = tuple(int(c) for c in cols[1].split(","))
    except ValueError:
        raise ValueError(f"bad coefficient list {cols[1]!r}") from None
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if len(coeffs) < 2:
        raise ValueError("degree must be at least 1")
    disc = None
    if len(cols) == 3 and cols[2]:
        try:
            disc = int(cols[2])
        except ValueError:
            raise ValueError(f"bad discriminant {cols[2]!r}") from None
    return FieldTableRecord(cols[0], coeffs, disc, line)


def read_table(path: str | Path) -> tuple[list[FieldTableRecord], list[tuple[int, str, str]]]:
    """Records and malformed lines as (line number, text, reason)."""
    records, malformed = [], []
    for no, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            records.append(parse_record(text, no))
        except ValueError as exc:
            malformed.append((no, text, str(exc)))
    return records, malformed


def write_table(path: str | Path, records, header: str = "") -> None:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [r.format() for r in records]
    Path(path).write_text("\n".join(lines) + "\n")
