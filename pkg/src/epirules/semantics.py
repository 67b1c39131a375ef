"""Belief distributions over possible worlds and satisfaction of epistemic formulae.

This is the model theory the learnt rules are read against. It is only ever
exercised on tiny graphs, so clarity wins over speed here.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from typing import Iterable, Iterator, Mapping, Union

from .errors import CapExceeded, InvalidDistribution, UnknownArgument
from .language import Atom
from .model import BipolarGraph
from .values import DENOMINATOR, RestrictedValueSet, Value

World = frozenset


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class Implies:
    antecedent: "Formula"
    consequent: "Formula"


Formula = Union[Atom, And, Or, Not, Implies]


def conj(*formulae: Formula) -> Formula:
    out = formulae[0]
    for f in formulae[1:]:
        out = And(out, f)
    return out


def formula_arguments(phi: Formula) -> set[str]:
    if isinstance(phi, Atom):
        return {phi.arg}
    if isinstance(phi, Not):
        return formula_arguments(phi.operand)
    if isinstance(phi, Implies):
        return formula_arguments(phi.antecedent) | formula_arguments(phi.consequent)
    return formula_arguments(phi.left) | formula_arguments(phi.right)


class BeliefDistribution:
    """Probability over subsets of ``arguments``; unlisted worlds get 0."""

    __slots__ = ("arguments", "_p")

    def __init__(self, arguments: Iterable[str], worlds: Mapping[Iterable[str], Value]):
        self.arguments = frozenset(arguments)
        p: dict[World, Value] = {}
        for w, v in worlds.items():
            w = World(w)
            if not w <= self.arguments:
                raise UnknownArgument(f"world {sorted(w)} mentions unknown arguments")
            v = Value.of(v)
            if w in p:
                raise InvalidDistribution(f"world {sorted(w)} listed twice")
            if v.num:
                p[w] = v
        total = sum(v.num for v in p.values())
        if total != DENOMINATOR:
            raise InvalidDistribution(f"probabilities sum to {total}/{DENOMINATOR}, not 1")
        self._p = p

    def __getitem__(self, world) -> Value:
        return self._p.get(World(world), Value(0))

    def support(self) -> dict[World, Value]:
        return dict(self._p)

    def __eq__(self, other):
        if isinstance(other, BeliefDistribution):
            return self.arguments == other.arguments and self._p == other._p
        return NotImplemented

    def __hash__(self):
        return hash((self.arguments, frozenset(self._p.items())))

    def __repr__(self):
        body = ", ".join(f"{{{','.join(sorted(w))}}}: {v}" for w, v in
                         sorted(self._p.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))))
        return f"BeliefDistribution({body})"

    def to_json(self) -> dict:
        return {"worlds": [{"set": sorted(w), "p": str(v)} for w, v in
                           sorted(self._p.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))]}

    @classmethod
    def from_json(cls, arguments: Iterable[str], d: Mapping) -> "BeliefDistribution":
        return cls(arguments, {World(w["set"]): Value.of(w["p"]) for w in d["worlds"]})


def marginal(P: BeliefDistribution, arg: str) -> Value:
    if arg not in P.arguments:
        raise UnknownArgument(arg)
    return Value(sum(v.num for w, v in P.support().items() if arg in w))


def satisfies(P: BeliefDistribution, phi: Formula) -> bool:
    unknown = formula_arguments(phi) - P.arguments
    if unknown:
        raise UnknownArgument(f"formula mentions {sorted(unknown)}")
    return _sat(P, phi)


def _sat(P, phi) -> bool:
    if isinstance(phi, Atom):
        return phi.holds(marginal(P, phi.arg))
    if isinstance(phi, And):
        return _sat(P, phi.left) and _sat(P, phi.right)
    if isinstance(phi, Or):
        return _sat(P, phi.left) or _sat(P, phi.right)
    if isinstance(phi, Not):
        return not _sat(P, phi.operand)
    if isinstance(phi, Implies):
        # sugar for (not antecedent) or consequent
        return _sat(P, Or(Not(phi.antecedent), phi.consequent))
    raise TypeError(f"not a formula: {phi!r}")


def all_worlds(arguments: Iterable[str]) -> list[World]:
    args = sorted(arguments)
    return [World(c) for c in chain.from_iterable(
        combinations(args, k) for k in range(len(args) + 1))]


def enumerate_restricted(graph: BipolarGraph | Iterable[str], pi: RestrictedValueSet,
                         max_arguments: int = 4, max_values: int = 5
                         ) -> Iterator[BeliefDistribution]:
    """Yield every distribution whose world probabilities all lie in ``pi``."""
    args = graph.arguments if isinstance(graph, BipolarGraph) else frozenset(graph)
    if len(args) > max_arguments:
        raise CapExceeded(f"{len(args)} arguments exceeds max_arguments={max_arguments}")
    if len(pi) > max_values:
        raise CapExceeded(f"{len(pi)} values exceeds max_values={max_values}")
    worlds = all_worlds(args)
    nums = [v.num for v in pi]

    def compose(i, remaining):
        if i == len(worlds) - 1:
            if remaining in nums:
                yield (remaining,)
            return
        for n in nums:
            if n <= remaining:
                for rest in compose(i + 1, remaining - n):
                    yield (n,) + rest

    for parts in compose(0, DENOMINATOR):
        yield BeliefDistribution(args, {w: Value(n) for w, n in zip(worlds, parts) if n})


def is_coherent(P: BeliefDistribution, graph: BipolarGraph) -> bool:
    return all(marginal(P, a).num <= DENOMINATOR - marginal(P, b).num
               for a, b in graph.attacks)
