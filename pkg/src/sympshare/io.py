"""Scheme files.

A scheme file is a JSON object::

    {"field": {"p": 3, "m": 1, "modulus": []}, "n": 4,
     "c_s": [[...2n ints...], ...], "c_r": [...],
     "secret_reps": [...], "c_max": [...], "meta": {...}}

``secret_reps``, ``c_max`` and ``meta`` are optional.  Rows are in ``(a|b)``
layout with field elements in their integer encoding.  Written files always
carry the canonical (echelon) bases, so writing, reading and writing again
gives identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import ParseError, SympShareError
from .field import FieldSpec, field_make
from .linalg import rref_basis
from .scheme import Scheme, scheme_build


def _rows(obj: Any, name: str, two_n: int) -> list[list[int]]:
    if not isinstance(obj, list):
        raise ParseError(f"{name} must be a list of rows")
    out = []
    for row in obj:
        if not isinstance(row, list) or len(row) != two_n or not all(isinstance(x, int) for x in row):
            raise ParseError(f"{name}: every row must be {two_n} integers")
        out.append(row)
    return out


def field_from_json(obj: Any) -> FieldSpec:
    if not isinstance(obj, dict) or "p" not in obj:
        raise ParseError("field must be an object with at least 'p'")
    m = obj.get("m", 1)
    modulus = obj.get("modulus") or None
    return field_make(int(obj["p"]), int(m), modulus)


def scheme_from_json(obj: Any) -> Scheme:
    if not isinstance(obj, dict):
        raise ParseError("scheme file must hold a JSON object")
    for key in ("field", "n", "c_s", "c_r"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}")
    F = field_from_json(obj["field"])
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("n must be a positive integer")
    two_n = 2 * n
    c_s = rref_basis(_rows(obj["c_s"], "c_s", two_n), F, two_n, symplectic=True)
    c_r = rref_basis(_rows(obj["c_r"], "c_r", two_n), F, two_n, symplectic=True)
    reps = _rows(obj["secret_reps"], "secret_reps", two_n) if obj.get("secret_reps") is not None else None
    c_max = None
    if obj.get("c_max") is not None:
        c_max = rref_basis(_rows(obj["c_max"], "c_max", two_n), F, two_n, symplectic=True)
    meta = obj.get("meta") or {}
    if not isinstance(meta, dict):
        raise ParseError("meta must be an object")
    return scheme_build(c_s, c_r, reps, c_max=c_max, meta=meta)


def scheme_to_json(scheme: Scheme) -> dict:
    out = {
        "field": scheme.field.to_json(),
        "n": scheme.n,
        "c_s": [list(r) for r in scheme.c_s.basis],
        "c_r": [list(r) for r in scheme.c_r.basis],
        "secret_reps": [list(r) for r in scheme.secret_reps],
        "c_max": [list(r) for r in scheme.c_max.basis],
    }
    if scheme.meta:
        out["meta"] = scheme.meta
    return out


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_scheme(path: str | Path) -> Scheme:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    try:
        return scheme_from_json(obj)
    except ParseError:
        raise
    except SympShareError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from exc


def save_scheme(scheme: Scheme, path: str | Path) -> None:
    Path(path).write_text(dumps(scheme_to_json(scheme)))
