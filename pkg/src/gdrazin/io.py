"""Matrix file format: JSON with exact string entries.

A matrix file is ``{"rows": n, "cols": m, "data": [[entry, ...], ...]}``.
Each entry is a string ``"R"``, ``"R+Ii"`` or ``"R-Ii"`` where ``R`` and
``I`` are rational literals (``"3"``, ``"-1/2"``).  Printing is canonical:
a real entry prints as ``"R"`` alone, anything else always carries both
parts, e.g. ``"0+1i"`` or ``"1/2-3/4i"``.  Bare JSON integers are accepted
on input.
"""

from __future__ import annotations

import json
import os
import re
from pathlib import Path

from gmpy2 import mpq

from .exact import GaussianRational, Matrix

__all__ = [
    "MatrixFormatError",
    "format_scalar",
    "parse_scalar",
    "matrix_to_obj",
    "matrix_from_obj",
    "dumps",
    "load_matrix",
    "save_matrix",
    "max_n",
]

_RAT = r"[+-]?\d+(?:/\d+)?"
_UNSIGNED = r"\d+(?:/\d+)?"
_ENTRY = re.compile(rf"^(?P<re>{_RAT})(?:(?P<sign>[+-])(?P<im>{_UNSIGNED})i)?$")


class MatrixFormatError(ValueError):
    pass


def _fmt_q(q: mpq) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(z: GaussianRational) -> str:
    if not z.im:
        return _fmt_q(z.re)
    sign = "-" if z.im < 0 else "+"
    return f"{_fmt_q(z.re)}{sign}{_fmt_q(abs(z.im))}i"


def _parse_q(text: str) -> mpq:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise MatrixFormatError(f"zero denominator in {text!r}")
    return mpq(int(num), int(den) if den else 1)


def parse_scalar(entry) -> GaussianRational:
    if isinstance(entry, bool):
        raise MatrixFormatError(f"invalid entry {entry!r}")
    if isinstance(entry, int):
        return GaussianRational(entry)
    if not isinstance(entry, str):
        raise MatrixFormatError(f"invalid entry {entry!r}; expected a string")
    m = _ENTRY.match(entry.strip())
    if m is None:
        raise MatrixFormatError(f"invalid entry {entry!r}")
    re_part = _parse_q(m["re"])
    im_part = mpq(0)
    if m["im"] is not None:
        im_part = _parse_q(m["im"])
        if m["sign"] == "-":
            im_part = -im_part
    return GaussianRational._raw(re_part, im_part)


def matrix_to_obj(M: Matrix) -> dict:
    return {
        "rows": M.rows,
        "cols": M.cols,
        "data": [[format_scalar(M[i, j]) for j in range(M.cols)] for i in range(M.rows)],
    }


def matrix_from_obj(obj) -> Matrix:
    if not isinstance(obj, dict) or not {"rows", "cols", "data"} <= obj.keys():
        raise MatrixFormatError("matrix object needs 'rows', 'cols' and 'data'")
    rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise MatrixFormatError("'rows' and 'cols' must be positive integers")
    if not isinstance(data, list) or len(data) != rows:
        raise MatrixFormatError(f"'data' must hold {rows} rows")
    for r in data:
        if not isinstance(r, list) or len(r) != cols:
            raise MatrixFormatError(f"every row must hold {cols} entries")
    return Matrix([[parse_scalar(x) for x in r] for r in data])


def _encode(obj, level: int) -> str:
    pad, inner = "  " * level, "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_encode(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            return json.dumps(obj)
        return "[\n" + ",\n".join(inner + _encode(x, level + 1) for x in obj) + "\n" + pad + "]"
    return json.dumps(obj)


def dumps(obj) -> str:
    """Deterministic JSON text: 2-space indent, flat lists (matrix rows) on one line."""
    return _encode(obj, 0) + "\n"


def max_n() -> int:
    return int(os.environ.get("DRAZIN_MAX_N", "16"))


def load_matrix(path: str | Path, *, square: bool = True) -> Matrix:
    """Read a matrix file; enforces squareness and the ``DRAZIN_MAX_N`` cap."""
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MatrixFormatError(f"{path}: {exc}") from exc
    try:
        M = matrix_from_obj(obj)
    except MatrixFormatError as exc:
        raise MatrixFormatError(f"{path}: {exc}") from exc
    if square and not M.is_square:
        raise MatrixFormatError(f"{path}: matrix is {M.rows}x{M.cols}, expected square")
    limit = max_n()
    if max(M.rows, M.cols) > limit:
        raise MatrixFormatError(f"{path}: size {M.rows}x{M.cols} exceeds DRAZIN_MAX_N={limit}")
    return M


def save_matrix(M: Matrix, path: str | Path) -> None:
    Path(path).write_text(dumps(matrix_to_obj(M)))
