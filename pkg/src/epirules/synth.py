"""Synthetic survey data with a controllable share of irrational rows.

Each row draws a latent attitude towards the target. Influencers follow it
(believed if they push the target the same way, disbelieved otherwise) with
probability ``coherence``. The target stance is then chosen so that no
rationality principle fires, except on a ``noise`` share of rows where it is
chosen so that one does. Values are drawn from the side of 0.5 their stance
requires; exact 0.5 is never produced.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .data import DataItem, Dataset
from .model import ATTACK, SUPPORT, InfluenceTuple, RelationSet, TupleSpec
from .rationality import B, D, Principle, check_principles
from .values import GRID

BELIEVED_VALUES = GRID[6:]
DISBELIEVED_VALUES = GRID[:5]
PROFILES = ("attack", "support", "mixed")


def relation_tags(profile, n_influencers: int) -> tuple[int, ...]:
    """Tags for a named profile, or the given tag sequence unchanged."""
    if not isinstance(profile, str):
        tags = tuple(int(t) for t in profile)
        if len(tags) != n_influencers:
            raise ValueError(f"{len(tags)} tags for {n_influencers} influencers")
        return tags
    if profile == "attack":
        return (ATTACK,) * n_influencers
    if profile == "support":
        return (SUPPORT,) * n_influencers
    if profile == "mixed":
        if n_influencers < 2:
            raise ValueError("a mixed profile needs at least two influencers")
        return tuple(SUPPORT if i % 2 == 0 else ATTACK for i in range(n_influencers))
    raise ValueError(f"unknown relation profile {profile!r}")


def synthetic_tuple(n_influencers: int, profile="mixed") -> TupleSpec:
    names = tuple(f"A{i + 1:02d}" for i in range(n_influencers))
    return TupleSpec(InfluenceTuple(names, "T"), RelationSet(relation_tags(profile, n_influencers)))


def _forbidden(stances, spec):
    out = []
    for s in (B, D):
        if check_principles({**stances, spec.target: s}, spec.target,
                            spec.attackers, spec.supporters) is not None:
            out.append(s)
    return out


def _force_premise(stances, spec, rng):
    """Rewrite influencer stances so that some principle's premise holds."""
    if spec.profile == "mixed":
        principle = rng.choice((Principle.C5, Principle.C6))
    else:
        return
    universal, existential = ((spec.attackers, spec.supporters) if principle is Principle.C5
                              else (spec.supporters, spec.attackers))
    for a in universal:
        stances[a] = D
    stances[rng.choice(sorted(existential))] = B


def gen_synthetic(n_rows: int, n_influencers: int, rel_profile="mixed", noise=Fraction(1, 10),
                  seed: int = 0, coherence=Fraction(9, 10)) -> Dataset:
    noise, coherence = Fraction(noise), Fraction(coherence)
    if n_rows < 1 or n_influencers < 1:
        raise ValueError("n_rows and n_influencers must be positive")
    if not 0 <= noise <= 1 or not 0 <= coherence <= 1:
        raise ValueError("noise and coherence must lie in [0, 1]")
    spec = synthetic_tuple(n_influencers, rel_profile)
    rng = random.Random(seed)

    def chance(p: Fraction) -> bool:
        return rng.random() < p

    items = []
    for r in range(n_rows):
        pro = chance(Fraction(1, 2))
        stances = {}
        for a, tag in zip(spec.influencers, spec.relations.tags):
            aligned = B if (tag == SUPPORT) == pro else D
            stances[a] = aligned if chance(coherence) else (D if aligned is B else B)
        if chance(noise):
            bad = _forbidden(stances, spec)
            if not bad:
                _force_premise(stances, spec, rng)
                bad = _forbidden(stances, spec)
            target = rng.choice(bad)
        else:
            allowed = [s for s in (B, D) if s not in _forbidden(stances, spec)]
            preferred = B if pro else D
            target = preferred if preferred in allowed else allowed[0]
        stances[spec.target] = target
        values = {a: rng.choice(BELIEVED_VALUES if s is B else DISBELIEVED_VALUES)
                  for a, s in stances.items()}
        items.append(DataItem(f"{r + 1:04d}", values))
    return Dataset(items, spec.influence.arguments)
