"""CSV and JSON serialization of result tables.

CSV layout (schema version 1)::

    # schema_version=1
    # kind=spectrum
    # <key>=<value>        one line per metadata entry
    k_par,k_perp,log_rate  header, fixed column order
    -1,0,-3.1415926535897931
    ...

Floats are written with 17 significant digits (``%.17g``) so they round-trip
exactly; booleans as ``true``/``false``; lines end in ``\\n``. JSON carries
the same content as ``{"schema_version", "kind", "metadata", "columns",
"rows"}``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

__all__ = ["SCHEMA_VERSION", "Table", "format_value", "parse_value", "to_csv", "from_csv", "to_json"]

SCHEMA_VERSION = 1


@dataclass
class Table:
    kind: str
    columns: list
    rows: list
    metadata: dict = dc_field(default_factory=dict)

    @classmethod
    def from_scan(cls, result, extra_metadata=None) -> Table:
        meta = dict(result.metadata)
        if extra_metadata:
            meta.update(extra_metadata)
        return cls(result.kind, result.columns, result.table().tolist(), meta)

    @classmethod
    def single(cls, kind: str, record: dict, metadata=None) -> Table:
        return cls(kind, list(record), [list(record.values())], dict(metadata or {}))


def format_value(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "%.17g" % float(value)
    return str(value)


def parse_value(text: str):
    if text == "true":
        return True
    if text == "false":
        return False
    try:
        return float(text)
    except ValueError:
        return text


def to_csv(table: Table) -> str:
    buf = io.StringIO()
    buf.write(f"# schema_version={SCHEMA_VERSION}\n")
    buf.write(f"# kind={table.kind}\n")
    for key, value in table.metadata.items():
        buf.write(f"# {key}={format_value(value)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def from_csv(text: str) -> Table:
    """Inverse of :func:`to_csv`; numeric cells come back as floats."""
    lines = text.split("\n")
    meta = {}
    i = 0
    while i < len(lines) and lines[i].startswith("# "):
        key, _, value = lines[i][2:].partition("=")
        meta[key] = parse_value(value)
        i += 1
    version = meta.pop("schema_version", None)
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {version!r}")
    kind = meta.pop("kind")
    reader = csv.reader(io.StringIO("\n".join(lines[i:])))
    columns = next(reader)
    rows = [[parse_value(c) for c in row] for row in reader if row]
    return Table(str(kind), columns, rows, meta)


def _json_safe(value):
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def to_json(table: Table) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": table.kind,
        "metadata": {k: _json_safe(v) for k, v in table.metadata.items()},
        "columns": list(table.columns),
        "rows": [[_json_safe(v) for v in row] for row in table.rows],
    }
    return json.dumps(doc, indent=None) + "\n"
