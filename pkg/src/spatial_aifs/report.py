"""Presentation helpers: printed-precision rounding, text tables, JSON output."""

from __future__ import annotations

import json
from decimal import ROUND_HALF_UP, Decimal


def round_half_up(value: float, decimals: int = 4) -> float:
    """Round like a printed table does (ties away from zero).

    The value is first cut to 12 decimals so that binary noise such as
    ``0.95624999999999993`` is read as the intended ``0.95625``.
    """
    d = Decimal(f"{value:.12f}").quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_UP)
    return float(d)


def fmt(value: float | None, decimals: int = 4) -> str:
    if value is None:
        return "-"
    return f"{round_half_up(value, decimals):.{decimals}f}"


def text_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in header]
    for r in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]
    line = "  ".join("-" * w for w in widths)
    out = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(), line]
    out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(out)


def dumps(obj) -> str:
    """Deterministic JSON rendering used for every structured output."""
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"
