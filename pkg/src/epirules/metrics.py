"""Rule quality: fired / agrees / correct counts, support, confidence, lift,
and the Best and Simplest selections.

Atoms are tested directly against a row's value. Membership in a value set
would reject most 11-point data against a coarse set, so it is not used.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple

from .data import DataItem
from .errors import EmptyDataset
from .language import Rule


class ConfidenceMode(enum.Enum):
    FIRED = "fired"       # correct / fired
    DATASET = "dataset"   # correct / |D|


class Classification(NamedTuple):
    fired: bool
    agrees: bool
    correct: bool


def classify(rule: Rule, d: DataItem) -> Classification:
    fired = all(c.holds(d[c.arg]) for c in rule.conditions)
    agrees = rule.head.holds(d[rule.head.arg])
    return Classification(fired, agrees, fired and agrees)


@dataclass(frozen=True)
class RuleStats:
    fired_count: int
    agrees_count: int
    correct_count: int
    dataset_size: int
    mode: ConfidenceMode = ConfidenceMode.FIRED

    @property
    def support(self) -> Fraction:
        return Fraction(self.fired_count, self.dataset_size)

    @property
    def confidence(self) -> Fraction | None:
        if self.mode is ConfidenceMode.DATASET:
            return Fraction(self.correct_count, self.dataset_size)
        if self.fired_count == 0:
            return None
        return Fraction(self.correct_count, self.fired_count)

    @property
    def lift(self) -> Fraction | None:
        if self.fired_count == 0 or self.agrees_count == 0:
            return None
        return Fraction(self.correct_count * self.dataset_size,
                        self.fired_count * self.agrees_count)


def stats(rule: Rule, dataset, mode=ConfidenceMode.FIRED) -> RuleStats:
    if len(dataset) == 0:
        raise EmptyDataset("cannot score a rule on an empty dataset")
    fired = agrees = correct = 0
    for d in dataset:
        c = classify(rule, d)
        fired += c.fired
        agrees += c.agrees
        correct += c.correct
    return RuleStats(fired, agrees, correct, len(dataset), ConfidenceMode(mode))


def is_best(s: RuleStats, tau_support, tau_confidence) -> bool:
    conf, lift = s.confidence, s.lift
    return (s.support > Fraction(tau_support)
            and conf is not None and conf > Fraction(tau_confidence)
            and lift is not None and lift > 1)


def best(rules: Iterable[Rule], dataset, tau_support, tau_confidence,
         mode=ConfidenceMode.FIRED) -> set[Rule]:
    """Rules strictly above both thresholds with lift above 1."""
    return {r for r in rules
            if is_best(stats(r, dataset, mode), tau_support, tau_confidence)}


def simplest(rules: Iterable[Rule]) -> set[Rule]:
    """Drop every rule that has a same-head rule with strictly fewer conditions
    contained in its own."""
    rules = set(rules)
    present = {(r.head, r.conditions) for r in rules}
    keep = set()
    for r in rules:
        conds = r.conditions
        dominated = any((r.head, sub) in present
                        for k in range(1, len(conds))
                        for sub in combinations(conds, k))
        if not dominated:
            keep.add(r)
    return keep
