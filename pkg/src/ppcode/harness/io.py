"""CSV and JSON file formats.

Code matrices are CSV files with ``m`` rows and ``n`` columns of serialized
field elements. Message polynomials are CSV grids whose row index is the
x-degree and column index the y-degree.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from ..gf.field import FieldCtx
from ..gf.poly import BiPoly


def matrix_to_csv(a: np.ndarray) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(np.asarray(a, dtype=np.int64).tolist())
    return buf.getvalue()


def matrix_from_csv(text: str) -> np.ndarray:
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise ValueError("empty CSV matrix")
    width = {len(r) for r in rows}
    if len(width) != 1:
        raise ValueError("ragged CSV matrix")
    return np.array([[int(v) for v in r] for r in rows], dtype=np.int64)


def write_matrix(path, a: np.ndarray) -> None:
    Path(path).write_text(matrix_to_csv(a))


def read_matrix(path, q: int | None = None) -> np.ndarray:
    a = matrix_from_csv(Path(path).read_text())
    if q is not None and (a.min() < 0 or a.max() >= q):
        raise ValueError(f"{path}: entries must be serialized elements in [0, {q})")
    return a


def write_poly(path, f: BiPoly) -> None:
    write_matrix(path, f.coeffs)


def read_poly(path, field: FieldCtx) -> BiPoly:
    return BiPoly(field, read_matrix(path, field.q))


def dumps(obj) -> str:
    """Canonical one-line JSON (sorted keys) so output files are byte-stable."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
