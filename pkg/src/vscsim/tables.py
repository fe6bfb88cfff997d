"""Result tables and their on-disk forms.

Every emitted file opens with a provenance comment carrying the artifact
version, a hash of the effective config, and the seed, so any output can
be traced back to the exact run that produced it.  CSV cells use the
shortest round-trip float representation; gnuplot data files use nine
significant digits.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

ARTIFACT_VERSION = "0.1.0"


def config_hash(doc: dict) -> str:
    """Short stable hash of a config document (key order independent)."""
    canonical = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:12]


@dataclass
class ResultTable:
    columns: list[str]
    rows: list[tuple]
    provenance: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.columns:
            raise ValueError("table needs at least one column")
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError(
                    f"row width {len(row)} does not match {len(self.columns)} columns"
                )

    def column(self, name: str) -> list:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]


def _provenance_line(prov: dict[str, str]) -> str:
    cfg = prov.get("config", "unknown")
    seed = prov.get("seed", "unknown")
    version = prov.get("version", ARTIFACT_VERSION)
    return f"# vscsim {version} config={cfg} seed={seed}"


def _parse_provenance(line: str) -> dict[str, str]:
    parts = line.lstrip("# ").split()
    prov: dict[str, str] = {}
    if len(parts) >= 2 and parts[0] == "vscsim":
        prov["version"] = parts[1]
    for part in parts[2:]:
        if "=" in part:
            key, value = part.split("=", 1)
            prov[key] = value
    return prov


def _format_cell(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        raise TypeError("boolean cells are not part of any table schema")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _parse_cell(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def write_csv(table: ResultTable, path: str | Path) -> None:
    """Comma-separated form: provenance comment, header row, data rows.
    LF line endings and UTF-8 regardless of platform."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(_provenance_line(table.provenance) + "\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([_format_cell(v) for v in row])


def read_csv(path: str | Path) -> ResultTable:
    with open(path, newline="", encoding="utf-8") as fh:
        first = fh.readline()
        if not first.startswith("#"):
            raise ValueError("missing provenance comment on line 1")
        prov = _parse_provenance(first.rstrip("\n"))
        reader = csv.reader(fh)
        header = next(reader, None)
        if not header:
            raise ValueError("missing header row")
        rows = [tuple(_parse_cell(cell) for cell in row) for row in reader if row]
    return ResultTable(list(header), rows, prov)


def emit_plot_data(table: ResultTable, path: str | Path) -> None:
    """Whitespace-delimited data block for gnuplot, `#` comment headers."""
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write(_provenance_line(table.provenance) + "\n")
        fh.write("# " + " ".join(table.columns) + "\n")
        for row in table.rows:
            cells = []
            for v in row:
                if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
                    cells.append(str(int(v)))
                elif isinstance(v, (float, np.floating)):
                    cells.append("%.9g" % float(v))
                else:
                    cells.append(str(v))
            fh.write(" ".join(cells) + "\n")


def read_plot_data(path: str | Path) -> ResultTable:
    prov: dict[str, str] = {}
    columns: list[str] = []
    rows: list[tuple] = []
    with open(path, encoding="utf-8") as fh:
        for i, line in enumerate(fh):
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                if i == 0:
                    prov = _parse_provenance(line)
                else:
                    columns = line.lstrip("# ").split()
                continue
            rows.append(tuple(_parse_cell(cell) for cell in line.split()))
    if not columns:
        raise ValueError("missing column header comment")
    return ResultTable(columns, rows, prov)
