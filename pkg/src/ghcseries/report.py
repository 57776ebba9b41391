"""Lossless serialization of result documents to JSON or aligned text.

All numbers stay exact: integers as JSON integers, non-integral
rationals as "p/q" strings.  Rendering is deterministic, so identical
inputs produce byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction


def rational(x):
    """Exact JSON value for a rational: int when integral, else 'p/q'."""
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def weight_coords(w) -> list:
    return [rational(c) for c in w.coords]


def character_pairs(mults: dict) -> list:
    """Sorted [weight, multiplicity] pairs of a character map."""
    return [[k, v] for k, v in sorted(mults.items())]


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_table(doc: dict) -> str:
    lines: list[str] = []
    _walk(doc, 0, lines)
    return "\n".join(lines) + "\n"


def _scalar(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    return str(value)


def _walk(node: dict, depth: int, lines: list[str]) -> None:
    pad = "  " * depth
    for key, value in node.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            _walk(value, depth + 1, lines)
        elif _is_matrix(value):
            lines.append(f"{pad}{key}:")
            lines.extend(_aligned_rows(value, depth + 1))
        elif _is_record_list(value):
            lines.append(f"{pad}{key}:")
            lines.extend(_aligned_records(value, depth + 1))
        else:
            lines.append(f"{pad}{key}: {_scalar(value)}")


def _is_matrix(value) -> bool:
    return (
        isinstance(value, list)
        and bool(value)
        and all(isinstance(row, list) for row in value)
    )


def _is_record_list(value) -> bool:
    return (
        isinstance(value, list)
        and bool(value)
        and all(isinstance(row, dict) for row in value)
    )


def _aligned_rows(rows: list, depth: int) -> list[str]:
    pad = "  " * depth
    cells = [[_scalar(v) for v in row] for row in rows]
    widths = [
        max(len(row[i]) for row in cells if i < len(row))
        for i in range(max(len(row) for row in cells))
    ]
    return [
        pad + "  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row))
        for row in cells
    ]


def _aligned_records(records: list, depth: int) -> list[str]:
    pad = "  " * depth
    keys = list(records[0].keys())
    rows = [[_scalar(rec.get(k)) for k in keys] for rec in records]
    widths = [
        max(len(keys[i]), max(len(row[i]) for row in rows)) for i in range(len(keys))
    ]
    lines = [(pad + "  ".join(k.ljust(widths[i]) for i, k in enumerate(keys))).rstrip()]
    for row in rows:
        line = pad + "  ".join(row[i].ljust(widths[i]) for i in range(len(keys)))
        lines.append(line.rstrip())
    return lines
