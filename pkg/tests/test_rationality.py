
import pytest
from hypothesis import given, settings, strategies as st

from epirules.data import item
from epirules.errors import EmptyRelationSet
from epirules.generalize import pre_gen
from epirules.language import Atom, Comparator, parse_atom, parse_rule
from epirules.model import InfluenceTuple, RelationSet, TupleSpec
from epirules.rationality import (Principle, Stance, audit, audit_irrational, check_principles,
                                  exact_violation, rational_filter, stance_of_atom, stance_of_value)
from epirules.values import GRID, Value
from oracles import exact_irrational

V = Value.of


def test_stance_of_value():
    assert stance_of_value(V("0.6")) is Stance.BELIEVED
    assert stance_of_value(V("0.5")) is Stance.NEUTRAL
    assert stance_of_value(V("0.3")) is Stance.DISBELIEVED


@pytest.mark.parametrize("text,st_", [("p(A) >= 0.75", Stance.BELIEVED),
                                      ("p(A) <= 0.5", Stance.DISBELIEVED),
                                      ("p(A) >= 0.25", Stance.INDETERMINATE),
                                      ("p(A) > 0.5", Stance.BELIEVED),
                                      ("p(A) < 0.5", Stance.DISBELIEVED),
                                      ("p(A) != 0.5", Stance.INDETERMINATE),
                                      ("p(A) >= 0.5", Stance.INDETERMINATE)])
def test_stance_of_atom(text, st_):
    assert stance_of_atom(parse_atom(text)) is st_


def test_equality_atom_matches_value():
    for v in GRID:
        assert stance_of_atom(Atom("A", Comparator.EQ, v)) is stance_of_value(v)


def test_attack_principles(sys4_data, sys4_spec):
    I = sys4_spec.influence
    assert exact_violation(pre_gen(sys4_data[1], I), sys4_spec) is Principle.C1
    assert exact_violation(pre_gen(sys4_data[0], I), sys4_spec) is Principle.C2


def test_support_principles(qu1_data, qu1_spec):
    I = qu1_spec.influence
    assert exact_violation(pre_gen(qu1_data[1], I), qu1_spec) is Principle.C3
    assert exact_violation(pre_gen(qu1_data[0], I), qu1_spec) is Principle.C4


def test_mixed_principles(dw6_data, dw6_spec):
    I = dw6_spec.influence
    got = [exact_violation(pre_gen(d, I), dw6_spec) for d in dw6_data]
    assert got == [None, Principle.C5, Principle.C6]


def test_filter(dw6_data, dw6_spec):
    I = dw6_spec.influence
    r004, r026 = pre_gen(dw6_data[0], I), pre_gen(dw6_data[1], I)
    assert rational_filter({r004, r026}, I, dw6_spec.relations) == {r004}
    assert rational_filter(set(), dw6_spec) == set()
    neutral = pre_gen(item("x", Dw2="0.5", Dw3="0.5", Dw5="0.5", Dw6="0.5"), I)
    assert rational_filter([neutral], dw6_spec) == {neutral}


def test_audit_examples(dw6_spec):
    r = parse_rule("p(Dw5) <= 0.5 & p(Dw2) > 0.5 & p(Dw3) > 0.5 -> p(Dw6) < 0.5")
    assert audit_irrational([r], dw6_spec) == 1
    assert audit([r], dw6_spec)["by_principle"]["C5"] == 1
    # Dw5 unmentioned: the universal over attackers cannot be established
    short = parse_rule("p(Dw2) > 0.5 -> p(Dw6) < 0.5")
    assert audit_irrational([short], dw6_spec) == 0


def test_empty_relation_set():
    with pytest.raises(EmptyRelationSet):
        check_principles({}, "T", [], [])


TAGS = st.lists(st.integers(0, 1), min_size=1, max_size=5)
VAL = st.sampled_from(GRID)


@settings(max_examples=400, deadline=None)
@given(TAGS, st.data())
def test_exact_principles_match_oracle(tags, data):
    names = tuple(f"A{i}" for i in range(len(tags)))
    spec = TupleSpec(InfluenceTuple(names, "T"), RelationSet(tuple(tags)))
    vals = {a: data.draw(VAL) for a in (*names, "T")}
    r = pre_gen(item("x", **{k: str(v) for k, v in vals.items()}), spec.influence)
    p = exact_violation(r, spec)
    assert (p is not None) == exact_irrational({k: v.as_fraction() for k, v in vals.items()},
                                               "T", spec.attackers, spec.supporters)
    allowed = {"attack": {None, Principle.C1, Principle.C2},
               "support": {None, Principle.C3, Principle.C4},
               "mixed": {None, Principle.C5, Principle.C6}}[spec.profile]
    assert p in allowed
    kept = rational_filter([r], spec)
    assert (r in kept) == (p is None)
