"""Belief stances and the six rationality principles.

The principles are read per influence tuple. Which pair applies depends only
on the tuple's relation profile:

    attack-only   C1 incoherent         some attacker believed, target believed
                  C2 non-reinstated     all attackers disbelieved, target disbelieved
    support-only  C3 non-conclusive     some supporter believed, target disbelieved
                  C4 non-grounded       all supporters disbelieved, target believed
    mixed         C5 gen-nonconclusive  all attackers disbelieved, some supporter
                                        believed, target disbelieved
                  C6 gen-nongrounded    all supporters disbelieved, some attacker
                                        believed, target believed
"""
from __future__ import annotations

import enum
from collections import Counter
from typing import Iterable, Mapping

from .errors import EmptyRelationSet
from .language import Atom, Comparator, Rule
from .model import InfluenceTuple, RelationSet, TupleSpec
from .values import HALF, Value


class Stance(enum.Enum):
    BELIEVED = "believed"
    DISBELIEVED = "disbelieved"
    NEUTRAL = "neutral"
    INDETERMINATE = "indeterminate"


class Principle(enum.Enum):
    C1 = "incoherent"
    C2 = "non-reinstated"
    C3 = "non-conclusive"
    C4 = "non-grounded"
    C5 = "gen-nonconclusive"
    C6 = "gen-nongrounded"


B, D = Stance.BELIEVED, Stance.DISBELIEVED


def stance_of_value(v: Value) -> Stance:
    if v > HALF:
        return B
    if v < HALF:
        return D
    return Stance.NEUTRAL


def stance_of_atom(atom: Atom) -> Stance:
    """The stance every value satisfying ``atom`` shares, if there is one.

    ``<= 0.5`` is taken as disbelief although it admits 0.5: it is how the
    generalization steps write "not believed".
    """
    op, x = atom.op, atom.value
    if op is Comparator.EQ:
        return stance_of_value(x)
    if op is Comparator.GT and x >= HALF or op is Comparator.GE and x > HALF:
        return B
    if op is Comparator.LT and x <= HALF or op is Comparator.LE and x <= HALF:
        return D
    return Stance.INDETERMINATE


def check_principles(stances: Mapping[str, Stance], target: str,
                     att: Iterable[str], sup: Iterable[str]) -> Principle | None:
    """The principle whose premise the stances meet, or None.

    Universal premises need every member strictly disbelieved; a missing,
    neutral or indeterminate stance breaks them. Existentials need a believed
    member.
    """
    att, sup = frozenset(att), frozenset(sup)
    if not att and not sup:
        raise EmptyRelationSet("no attackers and no supporters")
    get = lambda a: stances.get(a, Stance.INDETERMINATE)  # noqa: E731
    t = get(target)

    def all_dis(args):
        return all(get(a) is D for a in args)

    def some_bel(args):
        return any(get(a) is B for a in args)

    if not sup:
        if t is B and some_bel(att):
            return Principle.C1
        if t is D and all_dis(att):
            return Principle.C2
    elif not att:
        if t is D and some_bel(sup):
            return Principle.C3
        if t is B and all_dis(sup):
            return Principle.C4
    else:
        if t is D and all_dis(att) and some_bel(sup):
            return Principle.C5
        if t is B and all_dis(sup) and some_bel(att):
            return Principle.C6
    return None


def _spec(I, rel) -> TupleSpec:
    return I if isinstance(I, TupleSpec) else TupleSpec(I, rel)


def exact_violation(rule: Rule, spec: TupleSpec) -> Principle | None:
    stances = {a.arg: stance_of_value(a.value) for a in (*rule.conditions, rule.head)}
    return check_principles(stances, spec.target, spec.attackers, spec.supporters)


def rational_filter(rules: Iterable[Rule], I: InfluenceTuple | TupleSpec,
                    rel: RelationSet | None = None) -> set[Rule]:
    """Keep the exact rules that meet no principle."""
    spec = _spec(I, rel)
    return {r for r in rules if exact_violation(r, spec) is None}


def atom_violation(rule: Rule, spec: TupleSpec) -> Principle | None:
    stances = {a.arg: stance_of_atom(a) for a in (*rule.conditions, rule.head)}
    return check_principles(stances, spec.target, spec.attackers, spec.supporters)


def audit(rules: Iterable[Rule], I: InfluenceTuple | TupleSpec,
          rel: RelationSet | None = None) -> dict:
    """Irrationality report for generalized rules.

    A rule counts when the stances its atoms entail meet a principle's
    premise. Influencers a rule does not mention are indeterminate.
    """
    spec = _spec(I, rel)
    counts = Counter()
    for r in rules:
        p = atom_violation(r, spec)
        if p is not None:
            counts[p.name] += 1
    return {"irrational": sum(counts.values()),
            "by_principle": {p.name: counts[p.name] for p in Principle}}


def audit_irrational(rules: Iterable[Rule], I: InfluenceTuple | TupleSpec,
                     rel: RelationSet | None = None) -> int:
    return audit(rules, I, rel)["irrational"]
