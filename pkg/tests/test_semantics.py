from itertools import product

import pytest

from epirules.errors import CapExceeded, InvalidDistribution, UnknownArgument
from epirules.language import parse_atom
from epirules.model import BipolarGraph
from epirules.semantics import (And, BeliefDistribution, Implies, Not, Or, all_worlds,
                                enumerate_restricted, is_coherent, marginal, satisfies)
from epirules.values import PI_3, PI_5, Value

V = Value.of
ABC = ("A", "B", "C")
P1 = BeliefDistribution(ABC, {(): V("0.2"), ("A", "B"): V("0.3"), ("A",): V("0.5")})
P2 = BeliefDistribution(ABC, {(): V("1")})
P3 = BeliefDistribution(ABC, {("A",): V("0.2"), ("A", "B"): V("0.4"), ("C",): V("0.4")})
P4 = BeliefDistribution(ABC, {("A",): V("0.2"), ("B",): V("0.4"), ("A", "B"): V("0.4")})
ATOM = parse_atom("p(A) > 0.5")
FORMULA = Implies(ATOM, Not(parse_atom("p(B) > 0.5")))


def test_marginals_example():
    assert marginal(P1, "A") == V("0.8")
    assert marginal(P2, "A") == V("0")
    assert (marginal(P3, "A"), marginal(P3, "B")) == (V("0.6"), V("0.4"))
    assert (marginal(P4, "A"), marginal(P4, "B")) == (V("0.6"), V("0.8"))


def test_satisfaction_example():
    assert satisfies(P1, ATOM)
    assert not satisfies(P2, ATOM)
    assert satisfies(P3, FORMULA)
    assert not satisfies(P4, FORMULA)


def test_distribution_validation():
    with pytest.raises(InvalidDistribution):
        BeliefDistribution(ABC, {(): V("0.5")})
    with pytest.raises(UnknownArgument):
        BeliefDistribution(ABC, {("Z",): V("1")})
    with pytest.raises(UnknownArgument):
        marginal(P1, "Z")
    with pytest.raises(UnknownArgument):
        satisfies(P1, parse_atom("p(Z) > 0.5"))


def test_json_roundtrip():
    assert BeliefDistribution.from_json(ABC, P3.to_json()) == P3


def test_total_probability():
    for P in (P1, P2, P3, P4):
        for a in ABC:
            rest = sum(v.num for w, v in P.support().items() if a not in w)
            assert marginal(P, a).num + rest == 100


def test_enumeration_counts():
    assert len(list(enumerate_restricted(["A"], PI_3))) == 3
    only = list(enumerate_restricted([], PI_3))
    assert len(only) == 1 and only[0][()] == V("1")
    with pytest.raises(CapExceeded):
        list(enumerate_restricted(list("ABCDE"), PI_3))
    with pytest.raises(CapExceeded):
        list(enumerate_restricted(["A"], PI_5, max_values=3))


def _compositions(parts, total_halves):
    # independent count: solutions of x_1+..+x_k = 2 with x_i in {0,1,2}
    return sum(1 for xs in product(range(total_halves + 1), repeat=parts) if sum(xs) == total_halves)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_complete(n):
    args = ABC[:n]
    dists = list(enumerate_restricted(args, PI_3))
    assert len(dists) == len(set(dists)) == _compositions(2 ** n, 2)
    for P in dists:
        assert all(v in PI_3 for v in P.support().values())


def test_coherence():
    g0 = BipolarGraph(frozenset({"a", "b"}), frozenset(), frozenset())
    g = BipolarGraph(frozenset({"a", "b"}), frozenset({("a", "b")}), frozenset())
    P = BeliefDistribution("ab", {("a",): V("0.6"), ("a", "b"): V("0.1"), ("b",): V("0.3")})
    assert is_coherent(P, g0)
    assert not is_coherent(P, g)  # 0.7 > 1 - 0.4
    Q = BeliefDistribution("ab", {("a",): V("0.5"), ("b",): V("0.5")})
    assert is_coherent(Q, g)


def test_worlds():
    assert len(all_worlds(ABC)) == 8


def test_operators_compose():
    a, b = parse_atom("p(A) > 0.5"), parse_atom("p(B) > 0.5")
    assert satisfies(P4, And(a, b))
    assert satisfies(P3, Or(a, b)) and not satisfies(P3, And(a, b))
