"""From data rows to candidate rules."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .data import DataItem
from .errors import InvalidRule
from .language import Atom, Comparator, Rule
from .model import InfluenceTuple
from .values import HALF, PI_3, RestrictedValueSet, Value, nearest


def two_way_atom(arg: str, v: Value) -> Atom:
    return Atom(arg, Comparator.GT if v > HALF else Comparator.LE, HALF)


def two_way_gen(d: DataItem, I: InfluenceTuple) -> Rule:
    """Each value becomes ``> 0.5`` or ``<= 0.5``."""
    return Rule(tuple(two_way_atom(a, d[a]) for a in I.influencers),
                two_way_atom(I.target, d[I.target]))


def pre_gen(d: DataItem, I: InfluenceTuple) -> Rule:
    """The exact rule ``p(a1) = v1 & ... -> p(target) = v``."""
    return Rule(tuple(Atom(a, Comparator.EQ, d[a]) for a in I.influencers),
                Atom(I.target, Comparator.EQ, d[I.target]))


def multi_way_atom(arg: str, v: Value, pi: RestrictedValueSet) -> Atom:
    """Re-express ``p(arg) = v`` against the nearest interior value of ``pi``.

    Targets exclude 0 and 1, so atoms never pin a belief to an endpoint. An
    atom that lands on 0.5 from below (or at 0.5) reads "not believed",
    ``<= 0.5``, exactly as the 2-way step does; with pi = {0, 0.5, 1} the two
    steps coincide.
    """
    n = nearest(v, pi, interior=True)
    if v > n:
        op = Comparator.GT
    elif n == HALF:
        op = Comparator.LE
    elif v < n:
        op = Comparator.LT
    elif v > HALF:
        op = Comparator.GE
    else:
        op = Comparator.LE
    return Atom(arg, op, n)


def multi_way_gen(r: Rule, pi: RestrictedValueSet) -> Rule:
    for a in (*r.conditions, r.head):
        if a.op is not Comparator.EQ:
            raise InvalidRule(f"expected an exact rule, found {a}")
    return Rule(tuple(multi_way_atom(a.arg, a.value, pi) for a in r.conditions),
                multi_way_atom(r.head.arg, r.head.value, pi))


def expand_subrules(r: Rule, max_conditions: int) -> set[Rule]:
    """Every rule with r's head and a nonempty subset of at most
    ``max_conditions`` of r's conditions."""
    if max_conditions < 1:
        raise ValueError("max_conditions must be at least 1")
    out = set()
    for k in range(1, min(len(r.conditions), max_conditions) + 1):
        for conds in combinations(r.conditions, k):
            out.add(Rule(conds, r.head))
    return out


def expand_all(rules: Iterable[Rule], max_conditions: int) -> set[Rule]:
    out: set[Rule] = set()
    for r in rules:
        out |= expand_subrules(r, max_conditions)
    return out


def two_way_matches_multi_way(v: Value) -> bool:
    """Sanity hook: the multi-way step at {0, 0.5, 1} reproduces the 2-way step."""
    return multi_way_atom("x", v, PI_3) == two_way_atom("x", v)
