"""Reader for the benchmark CSV contract.

One header line with the eight known columns, one data row per benchmark
case, and ``#`` comment lines of three kinds: ``key=value`` run metadata,
``checksum ...`` per-case result digests, and a trailing
``results-digest=...``.  Empty cells mean "not applicable to this motif"
(e.g. ``particles`` outside the counting motif) and parse to ``None``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

__all__ = ["COLUMNS", "BenchRow", "BenchData", "read_csv"]

COLUMNS = ("motif", "variant", "n", "m", "particles", "reps", "seconds", "rate")


@dataclass(frozen=True)
class BenchRow:
    motif: str
    variant: str
    n: int
    m: int | None
    particles: int | None
    reps: int
    seconds: float
    rate: float


@dataclass(frozen=True)
class BenchData:
    """Parsed rows plus the ``#`` metadata that came with them."""

    rows: tuple[BenchRow, ...]
    meta: dict[str, str]        # key=value comment lines, in file order
    checksums: tuple[str, ...]  # raw "checksum ..." comment bodies

    def motifs(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for r in self.rows:
            seen.setdefault(r.motif, None)
        return tuple(seen)


def _opt_int(cell: str) -> int | None:
    return None if cell == "" else int(cell)


def read_csv(path: str | Path) -> BenchData:
    """Parse a benchmark CSV; raises ValueError on contract violations."""
    text = Path(path).read_text(encoding="utf-8")
    meta: dict[str, str] = {}
    checksums: list[str] = []
    data_lines: list[str] = []
    header: list[str] | None = None

    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("checksum "):
                checksums.append(body)
            elif "=" in body:
                key, _, val = body.partition("=")
                meta[key.strip()] = val.strip()
            continue
        if header is None:
            header = next(csv.reader(io.StringIO(line)))
            missing = [c for c in COLUMNS if c not in header]
            if missing:
                raise ValueError(f"{path}: header is missing columns {missing}")
            if tuple(header) != COLUMNS:
                raise ValueError(f"{path}: expected header {','.join(COLUMNS)!r}, got {line!r}")
            continue
        data_lines.append(line)

    if header is None:
        raise ValueError(f"{path}: no header line found")

    rows: list[BenchRow] = []
    for lineno, line in enumerate(data_lines, start=1):
        cells = next(csv.reader(io.StringIO(line)))
        if len(cells) != len(COLUMNS):
            raise ValueError(
                f"{path}: data row {lineno} has {len(cells)} cells, expected {len(COLUMNS)}"
            )
        try:
            rows.append(
                BenchRow(
                    motif=cells[0],
                    variant=cells[1],
                    n=int(cells[2]),
                    m=_opt_int(cells[3]),
                    particles=_opt_int(cells[4]),
                    reps=int(cells[5]),
                    seconds=float(cells[6]),
                    rate=float(cells[7]),
                )
            )
        except ValueError as exc:
            raise ValueError(f"{path}: data row {lineno}: {exc}") from None
    return BenchData(rows=tuple(rows), meta=meta, checksums=tuple(checksums))
