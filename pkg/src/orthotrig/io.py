"""CSV matrix/vector files, JSON sidecars and JSON reports.

Floats are written as fixed-point decimals with 17 digits after the point
("%.17f"), '.' separator regardless of locale. Entries of a transform
matrix are bounded by sqrt(2), so this keeps >= 17 significant digits for
every entry of order one; serialize -> parse -> serialize is byte-stable.
"""

from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path
from typing import Optional

import numpy as np

from .types import DwtParams, ParamsPQR, TransformFamily, TransformMatrix


class FormatError(ValueError):
    pass


def format_float(x: float) -> str:
    return "%.17f" % float(x)


def matrix_to_csv(a) -> str:
    a = np.asarray(getattr(a, "entries", a), dtype=np.float64)
    return "".join(",".join(format_float(v) for v in row) + "\n" for row in a)


def parse_matrix_csv(text: str) -> np.ndarray:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            rows.append([float(field) for field in line.split(",")])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if not rows:
        raise FormatError("empty matrix file")
    width = len(rows[0])
    for lineno, row in enumerate(rows, 1):
        if len(row) != width:
            raise FormatError(f"row {lineno} has {len(row)} fields, expected {width}")
    a = np.array(rows, dtype=np.float64)
    if not np.all(np.isfinite(a)):
        raise FormatError("matrix contains non-finite values")
    return a


def vector_to_csv(x) -> str:
    x = np.asarray(getattr(x, "values", x), dtype=np.float64)
    return "".join(format_float(v) + "\n" for v in x)


def parse_vector_csv(text: str) -> np.ndarray:
    a = parse_matrix_csv(text)
    if a.shape[1] != 1:
        raise FormatError(f"signal file must have one value per line, got {a.shape[1]} fields")
    return a[:, 0].copy()


def params_to_json(params) -> Optional[dict]:
    return None if params is None else params.as_dict()


def params_from_json(obj) -> Optional[object]:
    if obj is None:
        return None
    if {"p", "q", "r"} <= obj.keys():
        return ParamsPQR(int(obj["p"]), int(obj["q"]), int(obj["r"]))
    if {"alpha", "beta", "gamma"} <= obj.keys():
        return DwtParams(str(obj["alpha"]), str(obj["beta"]), int(obj["gamma"]))
    raise FormatError(f"unrecognised params object {obj!r}")


def sidecar_path(path) -> Path:
    return Path(path).with_suffix(".json")


def write_matrix(path, m: TransformMatrix, sidecar: bool = True) -> None:
    path = Path(path)
    path.write_text(matrix_to_csv(m), encoding="ascii", newline="\n")
    if sidecar and m.family is not None:
        meta = {"family": m.family.value, "n": m.n, "params": params_to_json(m.params)}
        sidecar_path(path).write_text(json.dumps(meta, indent=2) + "\n", encoding="ascii")


def read_matrix(path) -> TransformMatrix:
    """Load a CSV matrix, attaching sidecar metadata when one is present."""
    path = Path(path)
    a = parse_matrix_csv(path.read_text(encoding="ascii"))
    side = sidecar_path(path)
    if side.exists() and side != path:
        try:
            meta = json.loads(side.read_text(encoding="ascii"))
            family = TransformFamily.from_name(meta["family"])
            params = params_from_json(meta.get("params"))
            n = int(meta["n"])
        except (KeyError, ValueError, TypeError) as exc:
            raise FormatError(f"bad sidecar {side}: {exc}") from None
        return TransformMatrix(a, family, n, params)
    return TransformMatrix.from_array(a)


def make_report(m: TransformMatrix, gram, condition_satisfied, tol: float) -> dict:
    """ReportFile object; key order is fixed for byte-stable output."""
    return {
        "family": m.family.value if m.family is not None else "matrix",
        "n": m.n,
        "params": params_to_json(m.params),
        "condition_satisfied": condition_satisfied,
        "max_offdiag": gram.max_offdiag,
        "max_diag_dev": gram.max_diag_dev,
        "orthogonal": gram.orthogonal_at(tol),
        "tolerance": tol,
    }


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


SWEEP_HEADER = ("family", "n", "p", "q", "r", "condition_satisfied", "gram_max_dev")


def sweep_to_csv(report) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in report.rows:
        dev = row.error if row.gram_max_dev is None else repr(row.gram_max_dev)
        writer.writerow(
            [
                row.family.value,
                row.n,
                row.params.p,
                row.params.q,
                row.params.r,
                str(row.condition_satisfied).lower(),
                dev,
            ]
        )
    return buf.getvalue()
