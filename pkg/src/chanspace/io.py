"""Channel files.

JSON: ``{"n": 3, "m": 3, "entries": [["5/8", "1/8", "2/8"], ...]}``.  String
entries are parsed as exact rationals ("5/8", "0.25"); bare JSON numbers
keep their JSON meaning (integers exact, decimals as floats).

CSV: one row per input, every cell parsed as a rational.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

from .channel import Channel, DEFAULT_TOLERANCE, _as_grid, validate_channel
from .errors import NegativeEntry, ParseError


def _entry_json(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


def channel_to_json(ch: Channel) -> dict:
    return {"n": ch.n, "m": ch.m, "entries": [[_entry_json(v) for v in row] for row in ch.entries]}


def channel_from_json(obj, tolerance: float = DEFAULT_TOLERANCE, normalize: bool = False) -> Channel:
    return validate_channel(_rows_from_json(obj), tolerance, normalize)


def channel_to_csv(ch: Channel) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in ch.entries:
        w.writerow([str(v) if isinstance(v, Fraction) else repr(v) for v in row])
    return buf.getvalue()


def channel_from_csv(text: str, tolerance: float = DEFAULT_TOLERANCE, normalize: bool = False) -> Channel:
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    return validate_channel(rows, tolerance, normalize)


def _load_rows(path) -> list:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None
    if path.suffix.lower() == ".csv":
        return [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON ({e})") from None
    return _rows_from_json(obj)


def _rows_from_json(obj) -> list:
    if not isinstance(obj, dict) or not isinstance(obj.get("entries"), list):
        raise ParseError('channel JSON must be an object with an "entries" list')
    rows = obj["entries"]
    if not all(isinstance(r, list) for r in rows):
        raise ParseError('"entries" must be a list of rows')
    width = len(rows[0]) if rows else 0
    for key, actual in (("n", len(rows)), ("m", width)):
        if key in obj and obj[key] != actual:
            raise ParseError(f"declared {key}={obj[key]} but entries give {actual}")
    return rows


def read_channel(path, tolerance: float = DEFAULT_TOLERANCE, normalize: bool = False) -> Channel:
    return validate_channel(_load_rows(path), tolerance, normalize)


def read_matrix(path) -> Channel:
    """Any non-negative grid, rows not required to sum to 1."""
    ch = Channel(_as_grid(_load_rows(path)))
    for i, row in enumerate(ch.entries, 1):
        for j, v in enumerate(row, 1):
            if v < 0:
                raise NegativeEntry(i, j, v)
    return ch


def write_channel(ch: Channel, path):
    path = Path(path)
    if path.suffix.lower() == ".csv":
        path.write_text(channel_to_csv(ch))
    else:
        path.write_text(json.dumps(channel_to_json(ch)) + "\n")


def parse_ranking_text(text: str) -> tuple[int, ...]:
    """'3,1,2' -> (3, 1, 2)."""
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise ParseError(f"cannot parse ranking {text!r}") from None


def parse_prior(text):
    if text is None or text == "uniform":
        return None
    try:
        return [Fraction(t) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot parse prior {text!r}") from None
