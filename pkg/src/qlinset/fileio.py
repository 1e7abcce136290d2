"""JSON system files.

Layout::

    {
      "m": 1, "n": 1,
      "A": [[{"lo": 2, "hi": 4, "q": "exists"}]],
      "b": [{"lo": "2", "hi": "6", "q": "exists"}],
      "sigma": ["eq"],
      "prefix": ["a_1_1", "b_1"]        # optional, quantification order
    }

Numbers may be JSON numbers or strings holding integers, decimals or
fractions ``"p/q"``; all are read exactly.  Written files use integers and
exact decimals where possible and ``"p/q"`` strings otherwise, so reading a
written file gives back the same system.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .interval import Interval, format_number, parse_number
from .system import ParamRef, QuantIntervalSystem

__all__ = ["SystemFileError", "system_from_dict", "system_to_dict", "load_system",
           "loads_system", "dumps_system", "parse_point"]


class SystemFileError(ValueError):
    pass


def _number(v: Any):
    try:
        q = parse_number(v)
    except ValueError as exc:
        raise SystemFileError(str(exc)) from exc
    if isinstance(q, float):
        raise SystemFileError(f"system data must be finite, got {v!r}")
    return q


def _entry(e: Any, where: str):
    if not isinstance(e, dict) or not {"lo", "hi", "q"} <= set(e):
        raise SystemFileError(f"{where}: expected an object with lo, hi, q")
    lo, hi = _number(e["lo"]), _number(e["hi"])
    if lo > hi:
        raise SystemFileError(f"{where}: improper interval [{lo}, {hi}]")
    return Interval(lo, hi), e["q"]


def system_from_dict(doc: Any) -> QuantIntervalSystem:
    if not isinstance(doc, dict):
        raise SystemFileError("system file must hold a JSON object")
    for key in ("A", "b", "sigma"):
        if key not in doc:
            raise SystemFileError(f"missing key {key!r}")
    A_doc, b_doc, sigma = doc["A"], doc["b"], doc["sigma"]
    if not isinstance(A_doc, list) or not A_doc or not all(isinstance(r, list) for r in A_doc):
        raise SystemFileError("A must be a non-empty array of arrays")
    m = len(A_doc)
    n = len(A_doc[0])
    if doc.get("m", m) != m or doc.get("n", n) != n:
        raise SystemFileError("declared m/n do not match A")
    if any(len(r) != n for r in A_doc):
        raise SystemFileError("rows of A have unequal lengths")
    if not isinstance(b_doc, list) or len(b_doc) != m:
        raise SystemFileError("b must have m entries")
    if not isinstance(sigma, list) or len(sigma) != m:
        raise SystemFileError("sigma must have m entries")
    A, qa = [], []
    for i, row in enumerate(A_doc):
        cells = [_entry(e, f"A[{i + 1}][{j + 1}]") for j, e in enumerate(row)]
        A.append([c[0] for c in cells])
        qa.append([c[1] for c in cells])
    bcells = [_entry(e, f"b[{i + 1}]") for i, e in enumerate(b_doc)]
    prefix = doc.get("prefix")
    try:
        if prefix is not None:
            if not isinstance(prefix, list):
                raise SystemFileError("prefix must be an array of parameter names")
            prefix = [ParamRef.parse(p) for p in prefix]
        return QuantIntervalSystem(A, [c[0] for c in bcells], qa, [c[1] for c in bcells],
                                   sigma, prefix)
    except SystemFileError:
        raise
    except ValueError as exc:
        raise SystemFileError(str(exc)) from exc


def _num_out(x):
    s = format_number(x)
    if "/" in s:
        return s
    q = Fraction(x)
    return int(q) if q.denominator == 1 else float(q)


def system_to_dict(sys: QuantIntervalSystem) -> dict:
    def cell(iv: Interval, q) -> dict:
        return {"lo": _num_out(iv.lo), "hi": _num_out(iv.hi), "q": q.value}

    return {
        "m": sys.m,
        "n": sys.n,
        "A": [[cell(e, q) for e, q in zip(r, qr)] for r, qr in zip(sys.A, sys.quant_a)],
        "b": [cell(e, q) for e, q in zip(sys.b, sys.quant_b)],
        "sigma": [s.value for s in sys.sigma],
        "prefix": [p.name for p in sys.prefix],
    }


def loads_system(text: str) -> QuantIntervalSystem:
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise SystemFileError(f"malformed JSON: {exc}") from exc
    return system_from_dict(doc)


def load_system(path) -> QuantIntervalSystem:
    with open(path, encoding="utf-8") as fh:
        return loads_system(fh.read())


def dumps_system(sys: QuantIntervalSystem, indent=None) -> str:
    return json.dumps(system_to_dict(sys), indent=indent)


def parse_point(text: str) -> list:
    """``"1,-0.5,1/3"`` to exact numbers."""
    try:
        vals = [parse_number(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise SystemFileError(str(exc)) from exc
    if any(isinstance(v, float) for v in vals):
        raise SystemFileError("point coordinates must be finite")
    return vals
