"""Hand-built domain model: influence tuples, attack/support tags, bipolar graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ConflictingRelation, LengthMismatch, ModelError

ATTACK = 0
SUPPORT = 1


@dataclass(frozen=True)
class InfluenceTuple:
    influencers: tuple[str, ...]
    target: str

    def __post_init__(self):
        infl = tuple(self.influencers)
        object.__setattr__(self, "influencers", infl)
        if not infl:
            raise ModelError("an influence tuple needs at least one influencer")
        if len(set(infl)) != len(infl):
            raise ModelError(f"duplicate influencers in {infl}")
        if self.target in infl:
            raise ModelError(f"target {self.target} is listed as its own influencer")

    @property
    def arguments(self) -> tuple[str, ...]:
        return self.influencers + (self.target,)


@dataclass(frozen=True)
class RelationSet:
    """Attack (0) / support (1) tag per influencer, in influencer order."""

    tags: tuple[int, ...]

    def __post_init__(self):
        tags = tuple(self.tags)
        object.__setattr__(self, "tags", tags)
        if not tags:
            raise ModelError("relation set is empty")
        if any(t not in (ATTACK, SUPPORT) for t in tags):
            raise ModelError(f"relation tags must be 0 or 1, got {tags}")

    def __len__(self):
        return len(self.tags)


def _aligned(I: InfluenceTuple, rel: RelationSet):
    if len(rel.tags) != len(I.influencers):
        raise LengthMismatch(
            f"{len(rel.tags)} relation tags for {len(I.influencers)} influencers")
    return zip(I.influencers, rel.tags)


def attackers(I: InfluenceTuple, rel: RelationSet) -> frozenset[str]:
    return frozenset(a for a, t in _aligned(I, rel) if t == ATTACK)


def supporters(I: InfluenceTuple, rel: RelationSet) -> frozenset[str]:
    return frozenset(a for a, t in _aligned(I, rel) if t == SUPPORT)


@dataclass(frozen=True)
class BipolarGraph:
    arguments: frozenset[str] = frozenset()
    attacks: frozenset[tuple[str, str]] = frozenset()
    supports: frozenset[tuple[str, str]] = frozenset()

    def __post_init__(self):
        for name in ("arguments", "attacks", "supports"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        for a, b in self.attacks | self.supports:
            if a not in self.arguments or b not in self.arguments:
                raise ModelError(f"edge ({a}, {b}) uses an unknown argument")
        both = self.attacks & self.supports
        if both:
            raise ConflictingRelation(f"edges tagged as attack and support: {sorted(both)}")


def to_graph(tuples: Iterable[tuple[InfluenceTuple, RelationSet]]) -> BipolarGraph:
    args: set[str] = set()
    tag_of: dict[tuple[str, str], int] = {}
    for I, rel in tuples:
        args.update(I.arguments)
        for a, t in _aligned(I, rel):
            edge = (a, I.target)
            if tag_of.setdefault(edge, t) != t:
                raise ConflictingRelation(f"edge {edge} tagged both attack and support")
    return BipolarGraph(
        frozenset(args),
        frozenset(e for e, t in tag_of.items() if t == ATTACK),
        frozenset(e for e, t in tag_of.items() if t == SUPPORT),
    )


@dataclass(frozen=True)
class TupleSpec:
    """An influence tuple paired with its relation set."""

    influence: InfluenceTuple
    relations: RelationSet
    attackers: frozenset[str] = field(init=False, compare=False)
    supporters: frozenset[str] = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "attackers", attackers(self.influence, self.relations))
        object.__setattr__(self, "supporters", supporters(self.influence, self.relations))

    @property
    def target(self) -> str:
        return self.influence.target

    @property
    def influencers(self) -> tuple[str, ...]:
        return self.influence.influencers

    @property
    def profile(self) -> str:
        if not self.supporters:
            return "attack"
        if not self.attackers:
            return "support"
        return "mixed"

    @classmethod
    def from_config(cls, d: Mapping) -> "TupleSpec":
        """Read ``{"target": .., "influencers": [..], "relations": [..]}``.

        ``relations`` may also be a name -> tag map; it is normalised to the
        influencer order.
        """
        try:
            influencers = tuple(d["influencers"])
            target = d["target"]
            raw = d["relations"]
        except KeyError as exc:
            raise ModelError(f"tuple config missing key {exc}") from None
        I = InfluenceTuple(influencers, target)
        if isinstance(raw, Mapping):
            if set(raw) != set(influencers):
                raise LengthMismatch("relation map keys differ from the influencers")
            tags: Sequence = [raw[a] for a in influencers]
        else:
            tags = raw
        rel = RelationSet(tuple(int(t) for t in tags))
        return cls(I, rel)

    def to_config(self) -> dict:
        return {"target": self.target, "influencers": list(self.influencers),
                "relations": list(self.relations.tags)}
