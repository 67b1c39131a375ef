import pytest
from hypothesis import given, strategies as st

from epirules.errors import ConflictingRelation, LengthMismatch, ModelError
from epirules.model import (BipolarGraph, InfluenceTuple, RelationSet, TupleSpec, attackers,
                            supporters, to_graph)

DW5 = InfluenceTuple(("Dw2", "Dw3", "Dw4"), "Dw5")


def test_attackers_supporters_example():
    rel = RelationSet((0, 0, 1))
    assert attackers(DW5, rel) == {"Dw2", "Dw3"}
    assert supporters(DW5, rel) == {"Dw4"}
    assert attackers(DW5, RelationSet((1, 1, 1))) == frozenset()
    assert supporters(DW5, RelationSet((0, 0, 0))) == frozenset()
    qu = InfluenceTuple(("Im1", "Im2"), "Qu1")
    assert supporters(qu, RelationSet((1, 1))) == {"Im1", "Im2"}


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        attackers(DW5, RelationSet((0, 1)))


def test_tuple_validation():
    with pytest.raises(ModelError):
        InfluenceTuple((), "T")
    with pytest.raises(ModelError):
        InfluenceTuple(("A", "A"), "T")
    with pytest.raises(ModelError):
        InfluenceTuple(("A", "T"), "T")
    with pytest.raises(ModelError):
        RelationSet((0, 2))


def test_to_graph():
    g = to_graph([(DW5, RelationSet((0, 0, 1)))])
    assert g.attacks == {("Dw2", "Dw5"), ("Dw3", "Dw5")}
    assert g.supports == {("Dw4", "Dw5")}
    empty = to_graph([])
    assert not empty.arguments and not empty.attacks and not empty.supports
    with pytest.raises(ConflictingRelation):
        to_graph([(InfluenceTuple(("A",), "B"), RelationSet((0,))),
                  (InfluenceTuple(("A", "C"), "B"), RelationSet((1, 1)))])


def test_graph_rejects_unknown_endpoint():
    with pytest.raises(ModelError):
        BipolarGraph(frozenset({"A"}), frozenset({("A", "B")}), frozenset())


def test_spec_profiles_and_config():
    spec = TupleSpec.from_config({"target": "Dw6", "influencers": ["Dw2", "Dw3", "Dw5"],
                                  "relations": {"Dw2": 1, "Dw3": 1, "Dw5": 0}})
    assert spec.profile == "mixed"
    assert spec.relations.tags == (1, 1, 0)
    assert TupleSpec.from_config(spec.to_config()) == spec
    assert TupleSpec(DW5, RelationSet((0, 0, 0))).profile == "attack"
    assert TupleSpec(DW5, RelationSet((1, 1, 1))).profile == "support"


@given(st.lists(st.integers(0, 1), min_size=1, max_size=9))
def test_partition(tags):
    I = InfluenceTuple(tuple(f"A{i}" for i in range(len(tags))), "T")
    rel = RelationSet(tuple(tags))
    att, sup = attackers(I, rel), supporters(I, rel)
    assert att | sup == set(I.influencers) and not att & sup
    g = to_graph([(I, rel)])
    assert g.arguments == set(I.arguments)
