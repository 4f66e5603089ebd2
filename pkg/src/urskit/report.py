"""Report serialization: byte-stable JSON, exact-plus-display log rendering,
and a plain-text table for the console."""

from __future__ import annotations

import json

from .arith import UrskitError
from .heights import DEFAULT_DISPLAY_DIGITS, Magnitude, ScaledLog


class SchemaError(UrskitError):
    """An input file or flag violated its schema; names the offending field."""

    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


def magnitude_json(m: Magnitude, digits: int = DEFAULT_DISPLAY_DIGITS) -> dict:
    """Exact integer plus display-only log approximation."""
    return {"exact": str(m.value), "log": m.log_display(digits)}


def scaled_log_json(s: ScaledLog, digits: int = DEFAULT_DISPLAY_DIGITS) -> dict:
    from .arith import rational_str

    return {
        "coefficient": rational_str(s.coefficient),
        "base": magnitude_json(s.base, digits),
        "log": s.log_display(digits),
    }


def stable_json(obj) -> str:
    """Deterministic rendering: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_table(headers: list[str], rows: list[list[str]]) -> str:
    """Minimal aligned text table."""
    cells = [[str(c) for c in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, c in enumerate(row):
            widths[i] = max(widths[i], len(c))
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)
