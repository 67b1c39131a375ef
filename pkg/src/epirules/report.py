"""Number formatting and CSV/JSON writers for experiment outputs."""
from __future__ import annotations

import csv
import json
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from pathlib import Path

DIGITS = 6


def _terminates(den: int) -> bool:
    for p in (2, 5):
        while den % p == 0:
            den //= p
    return den == 1


def fmt(x) -> str:
    """Decimal string for a rational: exact when it terminates, otherwise
    rounded half-even to six places. ``None`` (undefined) prints empty."""
    if x is None:
        return ""
    if isinstance(x, (int, str)):
        return str(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    d = Decimal(x.numerator) / Decimal(x.denominator)
    if _terminates(x.denominator):
        return format(d.normalize(), "f")
    return format(d.quantize(Decimal(1).scaleb(-DIGITS), ROUND_HALF_EVEN), "f")


def write_csv(path, columns, rows):
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(columns)
        for row in rows:
            w.writerow([fmt(row.get(c)) for c in columns])


def write_json(path, obj):
    with Path(path).open("w") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")
