"""Deterministic rendering and atomic writing of result records.

JSON is emitted with sorted keys and floats at 17 significant digits so that
identical runs produce byte-identical files; json.dumps has no float-format
hook, hence the hand-rolled walker.
"""

from __future__ import annotations

import dataclasses
import json
import math
import os
import tempfile
from typing import Any

import numpy as np

from .lattice import ZInterval

__all__ = ["to_plain", "render_json", "render_csv", "write_text"]


def to_plain(obj: Any) -> Any:
    """Recursively convert records, arrays, and intervals to JSON-ready data."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, ZInterval):
        return [obj.lo, obj.hi]
    if isinstance(obj, np.ndarray):
        return [to_plain(v) for v in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_plain(getattr(obj, f.name)) for f in dataclasses.fields(obj) if not f.name.startswith("_")}
    if isinstance(obj, dict):
        return {_key(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    raise TypeError(f"cannot render {type(obj).__name__}")


def _key(k: Any) -> str:
    if isinstance(k, str):
        return k
    if isinstance(k, (int, np.integer)):
        return str(int(k))
    if isinstance(k, tuple):
        return ",".join(_key(x) for x in k)
    raise TypeError(f"cannot use {type(k).__name__} as a key")


def _render_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError("non-finite float in report")
    return format(x, ".17g")


def _render(obj: Any, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        keys = sorted(obj)
        for i, k in enumerate(keys):
            out.append(f'{pad}  {json.dumps(k)}: ')
            _render(obj[k], indent + 1, out)
            out.append(",\n" if i < len(keys) - 1 else "\n")
        out.append(pad + "}")
        return
    if isinstance(obj, list):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for i, v in enumerate(obj):
            out.append(pad + "  ")
            _render(v, indent + 1, out)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "]")
        return
    if isinstance(obj, bool) or obj is None:
        out.append(json.dumps(obj))
        return
    if isinstance(obj, float):
        out.append(_render_float(obj))
        return
    if isinstance(obj, int):
        out.append(str(obj))
        return
    if isinstance(obj, str):
        out.append(json.dumps(obj))
        return
    raise TypeError(f"cannot render {type(obj).__name__}")


def render_json(obj: Any) -> str:
    """Canonical JSON text: sorted keys, 17-significant-digit floats."""
    out: list[str] = []
    _render(to_plain(obj), 0, out)
    out.append("\n")
    return "".join(out)


def render_csv(header: list[str], rows: list[list[Any]]) -> str:
    """Small deterministic CSV: floats at 17 significant digits, no quoting."""
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for v in row:
            if isinstance(v, float):
                cells.append(_render_float(v))
            else:
                cells.append(str(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def write_text(path: str | None, text: str) -> None:
    """Write atomically via a sibling temp file; None writes to stdout."""
    if path is None:
        print(text, end="")
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".varseq-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
