"""ScalarCurve: (abscissa, value, error) samples with unit metadata — the
universal result and CSV currency of the CLI.

The CSV body (column header plus data rows) is a pure function of the data:
bit-identical for identical inputs.  Run provenance (tool version, config
echo, seed, timestamp) lives in ``#``-prefixed header lines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

TOOL_VERSION = "0.1.0"


@dataclass
class ScalarCurve:
    abscissa_name: str
    abscissa_unit: str
    value_name: str
    value_unit: str
    abscissa: np.ndarray
    values: np.ndarray
    errors: np.ndarray | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.abscissa = np.asarray(self.abscissa, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.errors is not None:
            self.errors = np.asarray(self.errors, dtype=float)
        if self.abscissa.shape != self.values.shape or self.abscissa.ndim != 1:
            raise ValueError("abscissa and values must be matching 1-D arrays")
        if self.errors is not None and self.errors.shape != self.values.shape:
            raise ValueError("errors must match values")
        if np.any(np.diff(self.abscissa) <= 0):
            raise ValueError("abscissa must be strictly increasing")
        cols = [self.abscissa, self.values] + \
            ([self.errors] if self.errors is not None else [])
        for c in cols:
            if not np.all(np.isfinite(c)):
                raise ValueError("curve contains non-finite values")

    def _columns_line(self) -> str:
        cols = [f"{self.abscissa_name}[{self.abscissa_unit}]",
                f"{self.value_name}[{self.value_unit}]"]
        if self.errors is not None:
            cols.append(f"error[{self.value_unit}]")
        return ",".join(cols)

    def body_text(self) -> str:
        """Column header plus rows; the bit-exact part of the file."""
        lines = [self._columns_line()]
        for i in range(self.abscissa.size):
            row = [f"{self.abscissa[i]:.16e}", f"{self.values[i]:.16e}"]
            if self.errors is not None:
                row.append(f"{self.errors[i]:.16e}")
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def write(self, path) -> None:
        header = [f"# fluctforce {TOOL_VERSION}"]
        for key, val in self.metadata.items():
            text = str(val)
            if "\n" in text:
                for sub in text.splitlines():
                    header.append(f"# {key}: {sub}")
            else:
                header.append(f"# {key}: {text}")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(header) + "\n")
            fh.write(self.body_text())


def read_curve(path) -> ScalarCurve:
    metadata = {}
    rows = []
    columns = None
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                text = line[1:].strip()
                if ":" in text:
                    key, _, val = text.partition(":")
                    metadata.setdefault(key.strip(), val.strip())
                continue
            if columns is None:
                columns = line.split(",")
                continue
            rows.append([float(tok) for tok in line.split(",")])
    if columns is None or not rows:
        raise ValueError(f"no curve data in {path}")
    data = np.asarray(rows, dtype=float)

    def split(label):
        name, _, unit = label.partition("[")
        return name, unit.rstrip("]")

    an, au = split(columns[0])
    vn, vu = split(columns[1])
    errors = data[:, 2] if data.shape[1] > 2 else None
    return ScalarCurve(an, au, vn, vu, data[:, 0], data[:, 1], errors,
                       metadata)


def body_of_file(path) -> str:
    """The bit-exact part of a curve file (drops the # header)."""
    with open(path, encoding="utf-8") as fh:
        return "".join(line for line in fh if not line.startswith("#"))
