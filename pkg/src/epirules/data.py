"""Survey rows as belief values on the 11-point grid."""
from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (DatasetTooSmall, EmptyDataset, MissingValue, OutOfRange, SchemaError,
                     ValueDomainError, ValueOffGrid, LikertOutOfRange)
from .values import GRID_SET, Value, map_likert

ID_HEADERS = {"", "id", "row", "row_id", "rowid"}


@dataclass(frozen=True)
class DataItem:
    row_id: str
    values: Mapping[str, Value]

    def __getitem__(self, arg: str) -> Value:
        try:
            return self.values[arg]
        except KeyError:
            raise MissingValue(f"row {self.row_id} has no value for {arg}") from None

    def __contains__(self, arg):
        return arg in self.values

    def __hash__(self):
        return hash((self.row_id, tuple(sorted(self.values.items()))))


def item(row_id, **values) -> DataItem:
    """Shorthand: ``item("004", Dw6="0.2", Dw2="0.3")``."""
    return DataItem(str(row_id), {k: Value.of(v) for k, v in values.items()})


class Dataset(Sequence[DataItem]):
    """Ordered rows sharing one argument schema."""

    def __init__(self, items: Iterable[DataItem], arguments: Sequence[str] | None = None):
        self.items = list(items)
        if arguments is None:
            arguments = list(self.items[0].values) if self.items else []
        self.arguments = tuple(arguments)
        schema = set(self.arguments)
        for d in self.items:
            if set(d.values) != schema:
                raise SchemaError(f"row {d.row_id} does not match the schema {self.arguments}")
            off = [a for a, v in d.values.items() if v not in GRID_SET]
            if off:
                raise ValueOffGrid(f"row {d.row_id}: {off[0]}={d.values[off[0]]} is off the 11-point grid")

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Dataset(self.items[i], self.arguments)
        return self.items[i]

    def __iter__(self) -> Iterator[DataItem]:
        return iter(self.items)

    def __eq__(self, other):
        if isinstance(other, Dataset):
            return self.arguments == other.arguments and self.items == other.items
        return NotImplemented

    def __repr__(self):
        return f"Dataset({len(self.items)} rows, arguments={list(self.arguments)})"

    def column(self, arg: str) -> list[Value]:
        return [d[arg] for d in self.items]

    def require(self, arguments: Iterable[str]):
        missing = [a for a in arguments if a not in self.arguments]
        if missing:
            raise SchemaError(f"dataset has no column for {missing}")


def _parse_cell(cell: str, scale_points: int | None, where: str) -> Value:
    cell = cell.strip()
    if not cell:
        raise SchemaError(f"{where}: empty cell")
    if scale_points is not None:
        try:
            raw = int(cell)
        except ValueError:
            raise SchemaError(f"{where}: {cell!r} is not an integer answer") from None
        try:
            return map_likert(raw, scale_points)
        except OutOfRange as exc:
            raise LikertOutOfRange(f"{where}: {exc}") from None
    try:
        Fraction(cell)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"{where}: {cell!r} is not a number") from None
    try:
        v = Value.of(cell)
    except (ValueDomainError, TypeError):
        raise ValueOffGrid(f"{where}: {cell!r} is not a value on the 11-point grid") from None
    if v not in GRID_SET:
        raise ValueOffGrid(f"{where}: {cell} is not on the 11-point grid")
    return v


def read_csv(lines: Iterable[str], scale_points: int | None = None, source="<csv>") -> Dataset:
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise SchemaError(f"{source}: no header row") from None
    header = [h.strip() for h in header]
    has_id = header[0].lower() in ID_HEADERS
    args = header[1:] if has_id else header
    if not args or len(set(args)) != len(args) or any(not a for a in args):
        raise SchemaError(f"{source}: bad argument header {header}")
    items = []
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(header):
            raise SchemaError(f"{source}:{lineno}: expected {len(header)} cells, got {len(row)}")
        row_id = row[0].strip() if has_id else f"{lineno - 1:03d}"
        cells = row[1:] if has_id else row
        values = {a: _parse_cell(c, scale_points, f"{source}:{lineno} column {a}")
                  for a, c in zip(args, cells)}
        items.append(DataItem(row_id, values))
    return Dataset(items, args)


def ingest_csv(path, scale_points: int | None = None) -> Dataset:
    """Load a survey CSV.

    Cells are grid decimals, or raw Likert answers when ``scale_points`` is
    given. A first column headed ``id``/``row`` (or blank) holds row ids.
    """
    path = Path(path)
    with path.open(newline="") as fh:
        return read_csv(fh, scale_points, source=str(path))


def write_csv(dataset: Dataset, path):
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["id", *dataset.arguments])
        for d in dataset:
            w.writerow([d.row_id, *(str(d[a]) for a in dataset.arguments)])


def _round_half_up(x: Fraction) -> int:
    return int((x * 2 + 1) // 2)


def split(dataset: Dataset, ratio=Fraction(4, 5), seed: int = 0) -> tuple[Dataset, Dataset]:
    """Random train/test split; both halves keep the original row order."""
    ratio = Fraction(ratio)
    n = len(dataset)
    if n < 2:
        raise DatasetTooSmall(f"need at least 2 rows to split, got {n}")
    n_train = _round_half_up(ratio * n)
    if not 0 < n_train < n:
        raise DatasetTooSmall(f"ratio {ratio} on {n} rows leaves an empty split")
    chosen = set(random.Random(seed).sample(range(n), n_train))
    train = [d for i, d in enumerate(dataset) if i in chosen]
    test = [d for i, d in enumerate(dataset) if i not in chosen]
    return Dataset(train, dataset.arguments), Dataset(test, dataset.arguments)


def require_nonempty(dataset: Dataset):
    if len(dataset) == 0:
        raise EmptyDataset("dataset is empty")
