"""Exact belief values, restricted value sets and the nearest-value map.

Every value lives on a fixed grid of ``1/DENOMINATOR`` steps inside [0, 1]
and is stored as an integer numerator, so comparisons are exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (ClosureViolation, HalfNotInSet, MissingOne, OutOfRange,
                     ValueDomainError)

DENOMINATOR = 100


@dataclass(frozen=True, order=True)
class Value:
    """A rational in [0, 1] held as ``num / DENOMINATOR``."""

    num: int

    def __post_init__(self):
        if not isinstance(self.num, int) or isinstance(self.num, bool):
            raise TypeError(f"numerator must be int, got {self.num!r}")
        if not 0 <= self.num <= DENOMINATOR:
            raise OutOfRange(f"value {self.num}/{DENOMINATOR} outside [0, 1]")

    @classmethod
    def of(cls, x) -> "Value":
        """Coerce a Value, decimal string, int (0 or 1) or Fraction.

        Floats are refused: "0.1" is exact, 0.1 is not.
        """
        if isinstance(x, Value):
            return x
        if isinstance(x, float):
            raise TypeError("floats are not accepted; pass a decimal string")
        try:
            f = Fraction(x.strip()) if isinstance(x, str) else Fraction(x)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ValueDomainError(f"cannot read {x!r} as a value") from exc
        scaled = f * DENOMINATOR
        if scaled.denominator != 1:
            raise ValueDomainError(
                f"{x!r} is not a multiple of 1/{DENOMINATOR}")
        return cls(int(scaled))

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, DENOMINATOR)

    def __add__(self, other: "Value") -> "Value":
        return Value(self.num + other.num)

    def __sub__(self, other: "Value") -> "Value":
        return Value(self.num - other.num)

    def __str__(self):
        whole, frac = divmod(self.num, DENOMINATOR)
        if frac == 0:
            return str(whole)
        width = len(str(DENOMINATOR)) - 1
        return f"{whole}.{frac:0{width}d}".rstrip("0")

    def __repr__(self):
        return f"Value({self})"


ZERO = Value(0)
HALF = Value(DENOMINATOR // 2)
ONE = Value(DENOMINATOR)

# 11-point data grid {0, 0.1, ..., 1}
GRID = tuple(Value(DENOMINATOR * i // 10) for i in range(11))
GRID_SET = frozenset(GRID)


class RestrictedValueSet:
    """Sorted, closure-checked set of values. Build with validate_value_set."""

    __slots__ = ("_values", "_members")

    def __init__(self, values: Iterable[Value]):
        self._values = tuple(sorted(set(values)))
        self._members = frozenset(self._values)

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __contains__(self, v):
        return v in self._members

    def __eq__(self, other):
        if isinstance(other, RestrictedValueSet):
            return self._values == other._values
        return NotImplemented

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        return "RestrictedValueSet({%s})" % ", ".join(map(str, self._values))

    @property
    def values(self) -> tuple[Value, ...]:
        return self._values

    def to_json(self) -> list[str]:
        return [str(v) for v in self._values]


def validate_value_set(values) -> RestrictedValueSet:
    """Check 1 membership and closure under bounded + and -.

    Raises MissingOne or ClosureViolation naming the offending pair.
    """
    vals = sorted({Value.of(v) for v in values})
    if not vals:
        raise ValueDomainError("value set is empty")
    members = set(vals)
    if ONE not in members:
        raise MissingOne("a restricted value set must contain 1")
    for x in vals:
        for y in vals:
            if x.num + y.num <= DENOMINATOR and Value(x.num + y.num) not in members:
                raise ClosureViolation(x, y, Value(x.num + y.num), "+")
            if x.num >= y.num and Value(x.num - y.num) not in members:
                raise ClosureViolation(x, y, Value(x.num - y.num), "-")
    return RestrictedValueSet(vals)


def value_set_of_size(n: int) -> RestrictedValueSet:
    """The evenly spaced set {0, 1/(n-1), ..., 1}."""
    if n < 2 or DENOMINATOR % (n - 1):
        raise ValueDomainError(f"no evenly spaced value set of size {n}")
    step = DENOMINATOR // (n - 1)
    return validate_value_set(Value(i * step) for i in range(n))


PI_3 = value_set_of_size(3)
PI_5 = value_set_of_size(5)
PI_11 = value_set_of_size(11)


def nearest(v: Value, pi: RestrictedValueSet, interior: bool = False) -> Value:
    """Closest element of ``pi`` lying between ``v`` and 0.5 (inclusive).

    With ``interior=True`` the endpoints 0 and 1 are not eligible targets.
    """
    if HALF not in pi:
        raise HalfNotInSet(f"0.5 is not in {pi!r}")
    pool = [p for p in pi if not interior or ZERO < p < ONE]
    if v <= HALF:
        candidates = [p for p in pool if v <= p <= HALF]
    else:
        candidates = [p for p in pool if HALF <= p <= v]
    best = min(candidates, key=lambda p: abs(v.num - p.num))
    # candidates sit on one side of v, so distances are distinct
    assert sum(abs(v.num - p.num) == abs(v.num - best.num) for p in candidates) == 1
    return best


def map_likert(raw: int, scale_points: int) -> Value:
    """Map a 1-based Likert answer onto the 11-point grid, rounding half up."""
    if scale_points < 2:
        raise OutOfRange(f"scale needs at least 2 points, got {scale_points}")
    if not 1 <= raw <= scale_points:
        raise OutOfRange(f"answer {raw} outside 1..{scale_points}")
    span = scale_points - 1
    tenths = ((raw - 1) * 20 + span) // (2 * span)
    return GRID[tenths]
