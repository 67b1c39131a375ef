import pytest

from epirules.data import read_csv
from epirules.model import InfluenceTuple, RelationSet, TupleSpec


@pytest.fixture
def dw6_data():
    # Italian study excerpt: Dw2, Dw3 support Dw6; Dw5 attacks it
    return read_csv(["id,Dw6,Dw2,Dw5,Dw3",
                     "004,0.2,0.3,0.3,0.3",
                     "026,0.4,0.6,0.3,0.6",
                     "111,0.6,0.1,0.6,0.2"])


@pytest.fixture
def sys4_data():
    return read_csv(["id,Sys4,Sys7,Dw6",
                     "000,0.2,0.3,0.3",
                     "001,0.6,0.3,0.6"])


@pytest.fixture
def qu1_data():
    return read_csv(["id,Qu1,Im1,Im2",
                     "001,0.7,0.1,0.2",
                     "002,0.3,0.3,0.7"])


@pytest.fixture
def dw6_spec():
    return TupleSpec(InfluenceTuple(("Dw2", "Dw3", "Dw5"), "Dw6"), RelationSet((1, 1, 0)))


@pytest.fixture
def sys4_spec():
    return TupleSpec(InfluenceTuple(("Sys7", "Dw6"), "Sys4"), RelationSet((0, 0)))


@pytest.fixture
def qu1_spec():
    return TupleSpec(InfluenceTuple(("Im1", "Im2"), "Qu1"), RelationSet((1, 1)))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
