"""
Instance files and report serialization.

An instance file is a single JSON object::

    {
      "space_dim": 2,
      "index_origin": 1,
      "operators": [{"rows": 1, "cols": 2, "re": [1, 0], "im": [0, 0]}, ...],
      "metadata": {"name": "...", "catalog_id": "...", "truncation_note": "..."}
    }

Floats are written with 17 significant digits, which round-trips every
double exactly. Reports use the same writer, so output is byte-stable for
fixed input and tolerances.
"""
from __future__ import annotations

import hashlib
import io as _io
import json
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, ParseError, ValidationError
from .frames import GFrame


@dataclass(frozen=True, eq=False)
class InstanceFile:
    frame: GFrame
    metadata: dict = field(default_factory=dict)


def _format_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(x, ".17g")


def dumps(obj, indent: int = 2) -> str:
    """Deterministic JSON: insertion-ordered keys, 17-digit floats, non-finite as strings."""
    out = _io.StringIO()
    _write(obj, out, indent, 0)
    return out.getvalue()


def _write(obj, out, indent: int, level: int):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, (bool, np.bool_)):
        out.write("true" if obj else "false")
    elif obj is None:
        out.write("null")
    elif isinstance(obj, (int, np.integer)):
        out.write(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.write(_format_float(float(obj)))
    elif isinstance(obj, str):
        out.write(json.dumps(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.write("{}")
            return
        out.write("{\n")
        items = list(obj.items())
        for j, (k, v) in enumerate(items):
            out.write(f"{pad}{json.dumps(str(k))}: ")
            _write(v, out, indent, level + 1)
            out.write(",\n" if j < len(items) - 1 else "\n")
        out.write(end + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.write("[]")
            return
        if all(isinstance(v, (int, float, bool, np.number)) for v in obj):
            out.write("[" + ", ".join(_scalar(v) for v in obj) + "]")
            return
        out.write("[\n")
        for j, v in enumerate(obj):
            out.write(pad)
            _write(v, out, indent, level + 1)
            out.write(",\n" if j < len(obj) - 1 else "\n")
        out.write(end + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def _scalar(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return _format_float(float(v))


def matrix_to_dict(m) -> dict:
    m = np.asarray(m, dtype=complex)
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "re": [float(x) for x in m.real.ravel()],
        "im": [float(x) for x in m.imag.ravel()],
    }


def instance_to_dict(g: GFrame, metadata: dict | None = None) -> dict:
    doc = {
        "space_dim": g.space_dim,
        "index_origin": g.index_origin,
        "operators": [matrix_to_dict(b) for b in g.blocks],
    }
    if metadata:
        doc["metadata"] = dict(metadata)
    return doc


def emit_instance(g: GFrame, metadata: dict | None = None) -> str:
    return dumps(instance_to_dict(g, metadata)) + "\n"


def fingerprint(g: GFrame) -> str:
    """SHA-256 of the metadata-free emission, truncated to 16 hex digits."""
    return hashlib.sha256(emit_instance(g).encode()).hexdigest()[:16]


def _require_int(value, where: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{where}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ValidationError(f"{where}: must be >= {minimum}, got {value}")
    return value


def _real_list(values, n: int, where: str) -> np.ndarray:
    if not isinstance(values, list):
        raise ValidationError(f"{where}: expected a list of numbers")
    if len(values) != n:
        raise ValidationError(f"{where}: expected {n} entries, got {len(values)}")
    for j, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ValidationError(f"{where}[{j}]: expected a number, got {v!r}")
        if not math.isfinite(v):
            raise ValidationError(f"{where}[{j}]: non-finite value {v!r}")
    return np.array(values, dtype=float)


def instance_from_dict(doc) -> InstanceFile:
    if not isinstance(doc, dict):
        raise ValidationError("document root must be an object")
    for key in ("space_dim", "operators"):
        if key not in doc:
            raise ValidationError(f"missing field {key!r}")
    dim = _require_int(doc["space_dim"], "space_dim", 1)
    origin = _require_int(doc.get("index_origin", 1), "index_origin")
    ops = doc["operators"]
    if not isinstance(ops, list) or not ops:
        raise ValidationError("operators: expected a non-empty list")
    blocks = []
    for i, op in enumerate(ops):
        where = f"operators[{i}]"
        if not isinstance(op, dict):
            raise ValidationError(f"{where}: expected an object")
        missing = [k for k in ("rows", "cols", "re", "im") if k not in op]
        if missing:
            raise ValidationError(f"{where}: missing {', '.join(missing)}")
        rows = _require_int(op["rows"], f"{where}.rows", 1)
        cols = _require_int(op["cols"], f"{where}.cols", 1)
        if cols != dim:
            raise ValidationError(f"{where}.cols: block {i} has {cols} columns, space_dim is {dim}")
        re = _real_list(op["re"], rows * cols, f"{where}.re")
        im = _real_list(op["im"], rows * cols, f"{where}.im")
        blocks.append((re + 1j * im).reshape(rows, cols))
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ValidationError("metadata: expected an object")
    try:
        frame = GFrame(dim, tuple(blocks), origin)
    except DimensionMismatch as exc:
        raise ValidationError(str(exc)) from None
    return InstanceFile(frame, metadata)


def _reject_constant(name):
    raise ValueError(f"non-finite literal {name}")


def loads_instance(text: str) -> InstanceFile:
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    return instance_from_dict(doc)


def load_instance(source) -> InstanceFile:
    """Read an instance from a path or a text stream."""
    if hasattr(source, "read"):
        return loads_instance(source.read())
    with open(os.fspath(source), encoding="utf-8") as fh:
        return loads_instance(fh.read())


def parse_instance(source) -> GFrame:
    return load_instance(source).frame
