"""
CSV and JSON writers for command results.

Rows are dicts keyed by column name. A value may be a number, a string, a
bool, None (no such state: "…" in CSV, null in JSON) or a Flag carrying an
error marker (the marker in CSV, null plus an "errors" entry in JSON).
Output depends on the rows only, so identical runs give identical files.
"""
import csv
import json
import logging
import math
from dataclasses import dataclass

from eckart_nu import exc
from eckart_nu.config import CONFIG

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Flag:
    marker: str

    @classmethod
    def from_exception(cls, error):
        return cls(CONFIG["ERROR_MARKERS"].get(type(error).__name__, "!error"))


def format_energy(value):
    """Energies to the printed number of decimals."""
    return "{:.{}f}".format(value, CONFIG["ENERGY_DECIMALS"])


def format_full(value):
    return repr(float(value))


def _csv_cell(value, rounded):
    if value is None:
        return CONFIG["MISSING_MARKER"]
    if isinstance(value, Flag):
        return value.marker
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return format_energy(value) if rounded else format_full(value)
    return str(value)


def write_csv(path, columns, rows, rounded=()):
    """Write rows to CSV; columns listed in ``rounded`` get the energy format."""
    rounded = set(rounded)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row.get(col), col in rounded) for col in columns])
    logger.debug("Wrote {} rows to {}".format(len(rows), path))


def _json_rows(columns, rows):
    clean, errors = [], []
    for index, row in enumerate(rows):
        out = {}
        for col in columns:
            value = row.get(col)
            if isinstance(value, Flag):
                errors.append({"row": index, "column": col, "marker": value.marker})
                value = None
            elif isinstance(value, float) and not math.isfinite(value):
                value = None
            out[col] = value
        clean.append(out)
    return clean, errors


def write_json(path, columns, rows, meta=None):
    clean, errors = _json_rows(columns, rows)
    payload = {"meta": meta or {}, "columns": list(columns), "rows": clean, "errors": errors}
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, ensure_ascii=False)
        f.write("\n")
    logger.debug("Wrote {} rows to {}".format(len(rows), path))


def write_table(path, fmt, columns, rows, rounded=(), meta=None):
    if fmt == "csv":
        write_csv(path, columns, rows, rounded=rounded)
    elif fmt == "json":
        write_json(path, columns, rows, meta=meta)
    else:
        raise exc.ConfigError("Unknown output format {}".format(fmt))
