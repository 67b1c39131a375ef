"""Epistemic atoms ``p(arg) # v`` and conjunctive rules built from them."""
from __future__ import annotations

import enum
import operator
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import DuplicateConditionArgument, HeadInConditions, InvalidRule, RuleSyntaxError
from .values import RestrictedValueSet, Value


class Comparator(enum.Enum):
    EQ = "="
    NE = "!="
    GE = ">="
    LE = "<="
    GT = ">"
    LT = "<"

    def __call__(self, a, b) -> bool:
        return _PY_OPS[self](a, b)

    @classmethod
    def parse(cls, text: str) -> "Comparator":
        return cls(_ALIASES.get(text, text))


_PY_OPS = {
    Comparator.EQ: operator.eq,
    Comparator.NE: operator.ne,
    Comparator.GE: operator.ge,
    Comparator.LE: operator.le,
    Comparator.GT: operator.gt,
    Comparator.LT: operator.lt,
}

_ALIASES = {"≠": "!=", "≥": ">=", "≤": "<=", "==": "="}


@dataclass(frozen=True)
class Atom:
    arg: str
    op: Comparator
    value: Value

    def __post_init__(self):
        if not isinstance(self.value, Value):
            object.__setattr__(self, "value", Value.of(self.value))
        if not isinstance(self.op, Comparator):
            object.__setattr__(self, "op", Comparator.parse(self.op))

    def holds(self, v: Value) -> bool:
        return self.op(v.num, self.value.num)

    def __str__(self):
        return f"p({self.arg}) {self.op.value} {self.value}"

    def to_dict(self) -> dict:
        return {"arg": self.arg, "op": self.op.value, "val": str(self.value)}

    @classmethod
    def from_dict(cls, d: dict) -> "Atom":
        return cls(d["arg"], Comparator.parse(d["op"]), Value.of(d["val"]))


def _atom_key(a: Atom):
    return (a.arg, a.op.value, a.value.num)


def atom_holds(atom: Atom, v: Value) -> bool:
    return atom.holds(v)


def values_of(atom: Atom, pi: RestrictedValueSet) -> frozenset[Value]:
    return frozenset(x for x in pi if atom.holds(x))


@dataclass(frozen=True)
class Rule:
    """Conjunction of condition atoms implying a head atom.

    Conditions are kept sorted by argument name, so equal condition sets give
    equal (and identically printed) rules.
    """

    conditions: tuple[Atom, ...]
    head: Atom

    def __post_init__(self):
        conds = tuple(sorted(self.conditions, key=_atom_key))
        if not conds:
            raise InvalidRule("a rule needs at least one condition")
        args = [c.arg for c in conds]
        if len(set(args)) != len(args):
            dup = next(a for a in args if args.count(a) > 1)
            raise DuplicateConditionArgument(f"argument {dup} appears twice in the conditions")
        if self.head.arg in args:
            raise HeadInConditions(f"head argument {self.head.arg} also appears in the conditions")
        object.__setattr__(self, "conditions", conds)

    @property
    def arguments(self) -> tuple[str, ...]:
        return tuple(c.arg for c in self.conditions)

    def condition_set(self) -> frozenset[Atom]:
        return frozenset(self.conditions)

    def __len__(self):
        return len(self.conditions)

    def __str__(self):
        return format_rule(self)

    def sort_key(self):
        return (_atom_key(self.head), len(self.conditions), [_atom_key(c) for c in self.conditions])

    def to_dict(self) -> dict:
        return {"conditions": [c.to_dict() for c in self.conditions],
                "head": self.head.to_dict()}

    @classmethod
    def from_dict(cls, d: dict) -> "Rule":
        return cls(tuple(Atom.from_dict(c) for c in d["conditions"]), Atom.from_dict(d["head"]))


def make_rule(conditions: Iterable[Atom], head: Atom) -> Rule:
    return Rule(tuple(conditions), head)


def format_rule(rule: Rule) -> str:
    return " & ".join(map(str, rule.conditions)) + " -> " + str(rule.head)


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<p>p\()
  | (?P<name>[A-Za-z_][A-Za-z0-9_.]*)
  | (?P<rparen>\))
  | (?P<arrow>->|→)
  | (?P<and>&|∧)
  | (?P<op>!=|>=|<=|==|=|>|<|≠|≥|≤)
  | (?P<num>\d+(?:\.\d+)?|\.\d+)
""", re.VERBOSE)


def _tokenize(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise RuleSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        if m.lastgroup != "ws":
            yield m.lastgroup, m.group(), pos
        pos = m.end()
    yield "end", "", len(text)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = list(_tokenize(text))
        self.i = 0

    def expect(self, kind):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = tok[1] or "end of input"
            raise RuleSyntaxError(f"expected {kind}, found {found!r}", self.text, tok[2])
        self.i += 1
        return tok

    def peek(self):
        return self.tokens[self.i][0]

    def atom(self) -> Atom:
        self.expect("p")
        name = self.expect("name")[1]
        self.expect("rparen")
        op = self.expect("op")[1]
        kind, num, pos = self.expect("num")
        try:
            value = Value.of(num)
        except ValueError as exc:
            raise RuleSyntaxError(str(exc), self.text, pos) from exc
        return Atom(name, Comparator.parse(op), value)

    def rule(self) -> Rule:
        conds = [self.atom()]
        while self.peek() == "and":
            self.i += 1
            conds.append(self.atom())
        self.expect("arrow")
        head = self.atom()
        self.expect("end")
        return Rule(tuple(conds), head)


def parse_rule(text: str) -> Rule:
    """Read ``p(A) > 0.5 & p(B) <= 0.25 -> p(C) < 0.5``.

    Unicode forms (∧, →, ≤, ≥, ≠) are accepted as well.
    """
    return _Parser(text).rule()


def parse_atom(text: str) -> Atom:
    p = _Parser(text)
    a = p.atom()
    p.expect("end")
    return a
