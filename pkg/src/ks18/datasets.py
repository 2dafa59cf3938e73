"""Embedded measurement tables and their CSV loader.

Five fixtures ship with the package: two sigma tables (15 and 28 states),
one xi table, the 126 directed edge probabilities, and the 270 per-term
probabilities.  Values are stored verbatim, including one
duplicated edge key; loading preserves duplicates so they can be flagged
downstream.  The environment variable ``KS_FIXTURES_DIR`` redirects
fixture lookup to a directory of same-named CSV files.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence, Union

FIXTURE_FILES: dict[str, str] = {
    "sigma15": "sigma15.csv",
    "sigma28": "sigma28.csv",
    "xi15": "xi15.csv",
    "edges": "edges.csv",
    "terms": "terms.csv",
}

FIXTURE_QUANTITIES: dict[str, str] = {
    "sigma15": "sigma",
    "sigma28": "sigma",
    "xi15": "xi",
    "edges": "edge-probability",
    "terms": "term-probability",
}

ENV_FIXTURES_DIR = "KS_FIXTURES_DIR"

_HEADERS: dict[str, tuple[str, ...]] = {
    "state": ("state_code", "value", "uncertainty"),
    "edge": ("i", "j", "value"),
    "term": ("state_code", "context", "outcomes", "value", "uncertainty"),
}


@dataclass(frozen=True)
class MeasurementRecord:
    """One measurement table row, typed by quantity."""

    quantity: str  # "sigma" | "xi" | "edge-probability" | "term-probability"
    value: float
    uncertainty: float | None = None
    state_code: str | None = None
    edge: tuple[int, int] | None = None
    term: str | None = None
    line: int = 0
    raw_value: str = ""
    raw_uncertainty: str = ""

    @property
    def key(self) -> tuple:
        if self.quantity == "edge-probability":
            return ("edge", self.edge)
        if self.quantity == "term-probability":
            return ("term", self.state_code, self.term)
        return (self.quantity, self.state_code)


def fixture_text(fixture_id: str) -> str:
    """Raw CSV text of an embedded fixture, honoring KS_FIXTURES_DIR."""
    if fixture_id not in FIXTURE_FILES:
        raise KeyError(f"unknown fixture id: {fixture_id}")
    filename = FIXTURE_FILES[fixture_id]
    override = os.environ.get(ENV_FIXTURES_DIR)
    if override:
        return (Path(override) / filename).read_text()
    return resources.files("ks18.data").joinpath(filename).read_text()


def load_table(source: Union[str, Path], quantity: str | None = None) -> list[MeasurementRecord]:
    """Parse a fixture id or CSV path into typed measurement records.

    The header row selects the schema.  ``quantity`` overrides the
    sigma/xi distinction, which the state-table header cannot encode;
    fixture ids imply their quantity.  Malformed rows and out-of-range
    values raise with the offending line number.
    """
    if isinstance(source, str) and source in FIXTURE_FILES:
        text = fixture_text(source)
        quantity = quantity or FIXTURE_QUANTITIES[source]
        origin = source
    else:
        path = Path(source)
        text = path.read_text()
        origin = str(path)
    return parse_table_text(text, quantity=quantity, origin=origin)


def parse_table_text(text: str, quantity: str | None = None,
                     origin: str = "<string>") -> list[MeasurementRecord]:
    reader = csv.reader(io.StringIO(text))
    rows = [(idx + 1, row) for idx, row in enumerate(reader) if row and any(cell.strip() for cell in row)]
    if not rows:
        raise ValueError(f"{origin}: empty table")
    header_line, header = rows[0]
    header = tuple(h.strip() for h in header)
    if header == _HEADERS["edge"]:
        schema = "edge"
        quantity = quantity or "edge-probability"
    elif header == _HEADERS["term"]:
        schema = "term"
        quantity = quantity or "term-probability"
    elif header == _HEADERS["state"]:
        schema = "state"
        quantity = quantity or "sigma"
    else:
        raise ValueError(f"{origin}: line {header_line}: unrecognized header {header}")
    records = []
    for line, row in rows[1:]:
        records.append(_parse_row(schema, quantity, row, line, origin))
    return records


def _parse_float(raw: str, line: int, origin: str, what: str) -> float:
    try:
        return float(raw)
    except ValueError as exc:
        raise ValueError(f"{origin}: line {line}: bad {what} {raw!r}") from exc


def _parse_row(schema: str, quantity: str, row: Sequence[str], line: int,
               origin: str) -> MeasurementRecord:
    cells = [c.strip() for c in row]
    if schema == "edge":
        if len(cells) != 3:
            raise ValueError(f"{origin}: line {line}: expected 3 fields, got {len(cells)}")
        try:
            i, j = int(cells[0]), int(cells[1])
        except ValueError as exc:
            raise ValueError(f"{origin}: line {line}: bad vertex pair {cells[:2]}") from exc
        value = _parse_float(cells[2], line, origin, "value")
        if not 0.0 <= value <= 1.0:
            raise ValueError(
                f"{origin}: line {line}: edge ({i},{j}) probability {value} outside [0, 1]"
            )
        return MeasurementRecord(quantity="edge-probability", value=value,
                                 edge=(i, j), line=line, raw_value=cells[2])
    if schema == "term":
        if len(cells) != 5:
            raise ValueError(f"{origin}: line {line}: expected 5 fields, got {len(cells)}")
        code, ctx, outs = cells[0], cells[1], cells[2]
        if len(ctx) != 3 or not ctx.isdigit() or len(outs) != 3 or any(c not in "01" for c in outs):
            raise ValueError(f"{origin}: line {line}: bad term key {ctx!r}/{outs!r}")
        value = _parse_float(cells[3], line, origin, "value")
        unc = _parse_float(cells[4], line, origin, "uncertainty") if cells[4] else None
        if not 0.0 <= value <= 1.0:
            raise ValueError(
                f"{origin}: line {line}: term P({outs}|{ctx}) of {code} has value "
                f"{value} outside [0, 1]"
            )
        if unc is not None and unc < 0:
            raise ValueError(f"{origin}: line {line}: negative uncertainty")
        return MeasurementRecord(quantity="term-probability", value=value,
                                 uncertainty=unc, state_code=code,
                                 term=f"P({outs}|{ctx})", line=line,
                                 raw_value=cells[3], raw_uncertainty=cells[4])
    if len(cells) != 3:
        raise ValueError(f"{origin}: line {line}: expected 3 fields, got {len(cells)}")
    code = cells[0]
    if not code:
        raise ValueError(f"{origin}: line {line}: missing state code")
    value = _parse_float(cells[1], line, origin, "value")
    unc = _parse_float(cells[2], line, origin, "uncertainty") if cells[2] else None
    if not 0.0 <= value <= 18.0:
        raise ValueError(
            f"{origin}: line {line}: state {code} value {value} outside [0, 18]"
        )
    if unc is not None and unc < 0:
        raise ValueError(f"{origin}: line {line}: negative uncertainty")
    return MeasurementRecord(quantity=quantity, value=value, uncertainty=unc,
                             state_code=code, line=line,
                             raw_value=cells[1], raw_uncertainty=cells[2])


def export_table(records: Sequence[MeasurementRecord]) -> str:
    """CSV text reproducing the records with their original value strings."""
    if not records:
        raise ValueError("nothing to export")
    kinds = {r.quantity for r in records}
    if len(kinds) != 1:
        raise ValueError(f"mixed quantities: {sorted(kinds)}")
    kind = kinds.pop()
    lines = []
    if kind == "edge-probability":
        lines.append("i,j,value")
        for r in records:
            lines.append(f"{r.edge[0]},{r.edge[1]},{r.raw_value or _fmt(r.value)}")
    elif kind == "term-probability":
        lines.append("state_code,context,outcomes,value,uncertainty")
        for r in records:
            ctx = r.term[r.term.index("|") + 1:-1]
            outs = r.term[2:r.term.index("|")]
            lines.append(
                f"{r.state_code},{ctx},{outs},{r.raw_value or _fmt(r.value)},{r.raw_uncertainty}"
            )
    else:
        lines.append("state_code,value,uncertainty")
        for r in records:
            lines.append(f"{r.state_code},{r.raw_value or _fmt(r.value)},{r.raw_uncertainty}")
    return "\n".join(lines) + "\n"


def _fmt(x: float) -> str:
    return format(x, ".12g")


def duplicate_keys(records: Iterable[MeasurementRecord]) -> list[tuple]:
    """Keys appearing more than once, in first-appearance order."""
    seen: dict[tuple, int] = {}
    for r in records:
        seen[r.key] = seen.get(r.key, 0) + 1
    return [k for k, count in seen.items() if count > 1]


def dedupe_records(records: Iterable[MeasurementRecord],
                   mode: str = "keep-all") -> list[MeasurementRecord]:
    """Optional duplicate-key cleaning; the default keeps every row.

    ``keep-first`` retains only the earliest row per key, so downstream
    aggregates see each key once; ``keep-all`` returns the rows
    unchanged.  Cleaning is opt-in because embedded tables are stored
    verbatim and duplicates are meant to be flagged, not hidden.
    """
    rows = list(records)
    if mode == "keep-all":
        return rows
    if mode != "keep-first":
        raise ValueError(f"unknown dedupe mode: {mode!r}")
    seen: set[tuple] = set()
    kept = []
    for r in rows:
        if r.key in seen:
            continue
        seen.add(r.key)
        kept.append(r)
    return kept


def dump_fixtures(directory: Union[str, Path]) -> list[Path]:
    """Write every embedded fixture into ``directory``; returns the paths."""
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for fixture_id, filename in sorted(FIXTURE_FILES.items()):
        path = target / filename
        path.write_text(fixture_text(fixture_id))
        written.append(path)
    return written
