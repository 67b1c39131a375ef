import pytest

from epirules.data import Dataset, item, read_csv, split, write_csv, ingest_csv
from epirules.errors import (DatasetTooSmall, LikertOutOfRange, MissingValue, SchemaError,
                             ValueOffGrid)
from epirules.values import Value

V = Value.of


def test_read_rows(dw6_data):
    assert len(dw6_data) == 3
    assert dw6_data[0].row_id == "004" and dw6_data[0]["Dw6"] == V("0.2")
    assert tuple(dw6_data.arguments) == ("Dw6", "Dw2", "Dw5", "Dw3")


def test_off_grid_and_likert():
    with pytest.raises(ValueOffGrid):
        read_csv(["A,B", "0.35,0.5"])
    ds = read_csv(["A,B", "3,5"], scale_points=5)
    assert ds[0]["A"] == V("0.5") and ds[0]["B"] == V("1")
    with pytest.raises(LikertOutOfRange):
        read_csv(["A,B", "6,1"], scale_points=5)


def test_schema_errors():
    with pytest.raises(SchemaError):
        read_csv(["A,B", "0.5"])
    with pytest.raises(SchemaError):
        read_csv(["A,A", "0.5,0.5"])
    with pytest.raises(SchemaError):
        read_csv(["A,B", "0.5,"])
    with pytest.raises(SchemaError) as ei:
        read_csv(["A,B", "0.5,0.5", "x,0.5"])
    assert "3" in str(ei.value)  # row-level diagnostic names the line


def test_default_ids():
    ds = read_csv(["A", "0.1", "0.2"])
    assert [d.row_id for d in ds] == ["001", "002"]


def test_missing_argument():
    with pytest.raises(MissingValue):
        item("x", A="0.1")["B"]
    with pytest.raises(SchemaError):
        read_csv(["A", "0.1"]).require(["A", "B"])


def test_split():
    ds = Dataset([item(str(i), A="0.1") for i in range(10)])
    tr, te = split(ds, "0.8", seed=3)
    assert (len(tr), len(te)) == (8, 2)
    assert split(ds, "0.8", seed=3) == (tr, te)
    ids = [d.row_id for d in tr] + [d.row_id for d in te]
    assert sorted(ids) == sorted(d.row_id for d in ds) and len(set(ids)) == 10
    with pytest.raises(DatasetTooSmall):
        split(ds, 1, seed=0)
    with pytest.raises(DatasetTooSmall):
        split(Dataset([item("a", A="0.1")]), "0.5", seed=0)


def test_csv_roundtrip(tmp_path, dw6_data):
    p = tmp_path / "t.csv"
    write_csv(dw6_data, p)
    assert ingest_csv(p) == dw6_data
