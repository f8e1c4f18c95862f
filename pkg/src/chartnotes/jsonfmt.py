"""Canonical JSON text: sorted keys, two-space indent, JS number formatting.

Chart specs must serialize byte-identically whether they come from the CLI
or from the web UI's exporter, so both sides write this exact dialect.
The number rules follow how JavaScript stringifies IEEE doubles (shortest
round-trip digits, "4" rather than "4.0", decimal notation between 1e-6
and 1e21, exponent style "1e+21" / "1e-7" outside).
"""

from __future__ import annotations

import json
import math
import re
from typing import Union

_REPR_RE = re.compile(
    r"^(?P<sign>-?)(?P<int>\d+)(?:\.(?P<frac>\d+))?(?:[eE](?P<exp>[+-]?\d+))?$"
)

JsonValue = Union[None, bool, int, float, str, list, tuple, dict]


def format_number(value: Union[int, float]) -> str:
    """Format a number exactly as JavaScript's String(Number) would."""
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers")
    if isinstance(value, int):
        if abs(value) >= 2**53:
            raise ValueError(f"{value} exceeds exact double range")
        return str(value)
    if not math.isfinite(value):
        raise ValueError(f"non-finite number {value!r} has no JSON form")
    if value == 0:
        return "0"

    match = _REPR_RE.match(repr(value))
    if match is None:  # repr of a finite float always matches
        raise ValueError(f"unexpected float repr {value!r}")
    sign = match.group("sign")
    digits = match.group("int") + (match.group("frac") or "")
    # Exponent n: value = 0.digits * 10^n once digits are stripped to the
    # significant span.
    point = len(match.group("int"))
    exponent = int(match.group("exp") or 0)
    stripped = digits.lstrip("0")
    n = point + exponent - (len(digits) - len(stripped))
    stripped = stripped.rstrip("0")
    k = len(stripped)

    if k <= n <= 21:
        body = stripped + "0" * (n - k)
    elif 0 < n <= 21:
        body = stripped[:n] + "." + stripped[n:]
    elif -6 < n <= 0:
        body = "0." + "0" * (-n) + stripped
    else:
        mantissa = stripped[0] if k == 1 else stripped[0] + "." + stripped[1:]
        exp10 = n - 1
        body = f"{mantissa}e{'+' if exp10 >= 0 else '-'}{abs(exp10)}"
    return sign + body


def _write(value: JsonValue, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if value is None:
        out.append("null")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, (int, float)):
        out.append(format_number(value))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for position, item in enumerate(value):
            out.append(inner)
            _write(item, indent + 1, out)
            out.append(",\n" if position < len(value) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        keys = sorted(value)
        for position, key in enumerate(keys):
            if not isinstance(key, str):
                raise TypeError(f"object keys must be strings, got {key!r}")
            out.append(inner + json.dumps(key, ensure_ascii=False) + ": ")
            _write(value[key], indent + 1, out)
            out.append(",\n" if position < len(keys) - 1 else "\n")
        out.append(pad + "}")
    else:
        raise TypeError(f"{type(value).__name__} is not JSON-serializable")


def to_canonical_json(value: JsonValue) -> str:
    """Serialize to the canonical text form (ends with a newline)."""
    out: list[str] = []
    _write(value, 0, out)
    out.append("\n")
    return "".join(out)
