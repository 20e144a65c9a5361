"""CSV ingestion and JSON report emission.

Numbers are written with 17 significant digits, which round-trips every
double exactly. Decimal separators must be dots; comma decimals are
rejected rather than guessed.
"""

from __future__ import annotations

import csv
import json
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Any, Iterable, NamedTuple, Sequence

from .errors import IntegrityError, ParseError, SchemaError, ValidationError

PANEL_COLUMNS = ("year", "gdp", "investment", "labor")
CAPITAL_COLUMNS = ("year", "capital")
SCENARIO_COLUMNS = ("t", "capital", "labor")
SYNTH_PANEL_COLUMNS = ("year", "gdp", "capital", "labor")
PATH_COLUMNS = ("year", "capital", "labor")

_DECIMAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_INTEGER = re.compile(r"[+-]?\d+")


def fmt(x: float) -> str:
    """17-significant-digit decimal form of ``x``."""
    if not math.isfinite(x):
        raise ValidationError(f"cannot serialize non-finite number {x!r}")
    return format(x, ".17g")


def _parse_decimal(text: str, row: int, column: str) -> float:
    text = text.strip()
    if not _DECIMAL.fullmatch(text):
        raise ParseError(f"row {row}, column {column}: not a dot-decimal number: {text!r}")
    return float(text)


def _parse_int(text: str, row: int, column: str) -> int:
    text = text.strip()
    if not _INTEGER.fullmatch(text):
        raise ParseError(f"row {row}, column {column}: not an integer: {text!r}")
    return int(text)


def read_table(
    path: str | Path,
    required: Sequence[str],
    optional: Sequence[str] = (),
    int_columns: Sequence[str] = ("year",),
    key: str | None = "year",
) -> list[dict[str, float]]:
    """Read a headed CSV into dicts of the requested columns.

    Rows are numbered from 1 (first data row). When ``key`` is given, rows
    are sorted by it and duplicates are rejected. Parsing is all-or-nothing.
    """
    with open(path, newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise SchemaError(f"{path}: file is empty (no header)") from None
        for col in required:
            if col not in header:
                raise SchemaError(f"{path}: missing column {col!r}")
        wanted = [c for c in (*required, *optional) if c in header]
        index = {c: header.index(c) for c in wanted}

        rows = []
        for n, cells in enumerate(reader, start=1):
            if not cells or all(not c.strip() for c in cells):
                continue
            if len(cells) != len(header):
                raise ParseError(f"{path}: row {n} has {len(cells)} fields, header has {len(header)}")
            row = {}
            for col, j in index.items():
                parse = _parse_int if col in int_columns else _parse_decimal
                row[col] = parse(cells[j], n, col)
            rows.append(row)

    if key is not None:
        seen = set()
        for row in rows:
            if row[key] in seen:
                raise IntegrityError(f"{path}: duplicate {key} {row[key]}")
            seen.add(row[key])
        rows.sort(key=lambda r: r[key])
    return rows


class RawPanelRow(NamedTuple):
    year: int
    gdp: float
    investment: float
    labor: float


def read_panel_csv(path: str | Path) -> list[RawPanelRow]:
    """Read ``year,gdp,investment,labor``, sorted by year."""
    rows = read_table(path, PANEL_COLUMNS)
    return [RawPanelRow(r["year"], r["gdp"], r["investment"], r["labor"]) for r in rows]


def write_csv(out: IO[str], columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([v if isinstance(v, (int, str)) else fmt(v) for v in row])


def _emit(obj: Any, indent: int, level: int) -> str:
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt(obj)
    pad = " " * (indent * (level + 1))
    close = " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_emit(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}{_emit(v, indent, level + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    if hasattr(obj, "tolist"):
        return _emit(obj.tolist(), indent, level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any, indent: int = 2) -> str:
    """JSON text with floats at 17 significant digits; key order preserved."""
    return _emit(obj, indent, 0) + "\n"


def tool_version() -> str:
    from importlib.metadata import PackageNotFoundError, version

    from . import __version__

    try:
        return version("artifact")
    except PackageNotFoundError:
        return __version__


@dataclass
class RunConfig:
    input_path: str
    sigma: float | None = None
    initial_capital: float | None = None
    steady_state_growth: float | None = None
    capital_path: str | None = None
    time_origin: int | None = None
    detrend: str = "none"
    tolerances: dict | None = None
    seed: int | None = None
    output_path: str | None = None
    units: str = ""

    def as_dict(self) -> dict:
        return {
            "input_path": self.input_path,
            "sigma": self.sigma,
            "initial_capital": self.initial_capital,
            "steady_state_growth": self.steady_state_growth,
            "capital_path": self.capital_path,
            "time_origin": self.time_origin,
            "detrend": self.detrend,
            "tolerances": dict(self.tolerances or {}),
            "seed": self.seed,
            "output_path": self.output_path,
            "units": self.units,
        }


def build_report(fit, shares, table, config: RunConfig) -> dict:
    """Assemble the report document; ``fit`` is a FitReport, ``table`` a list of FittedRow."""
    return {
        "params": fit.params.as_dict(),
        "std_errors": fit.std_errors_dict(),
        "r_squared": fit.r_squared,
        "condition_number": fit.condition_number,
        "n_obs": fit.n_obs,
        "detrend": fit.detrend,
        "admissible": fit.admissible,
        "shares": shares.as_dict() if shares is not None else None,
        "fitted": [
            {"year": r.year, "actual": r.actual, "fitted": r.fitted, "log_residual": r.log_residual}
            for r in table
        ],
        "config": config.as_dict(),
        "tool_version": tool_version(),
    }


def write_report_json(report: dict, path: str | Path) -> None:
    """Write ``report`` (see `build_report`) as JSON; output is byte-stable."""
    text = dumps(report)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc.strerror}") from exc
