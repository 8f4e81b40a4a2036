"""Versioned JSON report payloads.

Numbers carry their arithmetic mode through the JSON type itself: values
computed in floating point serialize as JSON numbers, values computed in
exact rational arithmetic serialize as "p/q" strings.  Decoding inverts both
losslessly, so Report -> JSON -> Report is the identity.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

SCHEMA = "polyclass.report.v1"

_FRACTION_RE = re.compile(r"^-?\d+/\d+$")


def _encode(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return obj


def _decode(obj):
    if isinstance(obj, str) and _FRACTION_RE.match(obj):
        return Fraction(obj)
    if isinstance(obj, dict):
        return {k: _decode(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_decode(v) for v in obj]
    return obj


@dataclass(frozen=True)
class Report:
    """Nested payload of plain values, Fractions, lists and dicts."""

    data: dict

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(_encode(self.data), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(data=_decode(json.loads(text)))


def error_report(command: str, exc: Exception) -> Report:
    return Report(data={
        "schema": SCHEMA,
        "command": command,
        "error": {"type": type(exc).__name__, "message": str(exc)},
    })
