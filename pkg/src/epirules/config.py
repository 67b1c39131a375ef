"""Experiment configuration (JSON)."""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path

from .errors import ConfigError, EpirulesError
from .metrics import ConfidenceMode
from .model import TupleSpec
from .report import fmt
from .values import PI_5, RestrictedValueSet, validate_value_set

PIPELINES = ("two_way", "multi_way")


@dataclass(frozen=True)
class ExperimentConfig:
    value_set: RestrictedValueSet = PI_5
    tuples: tuple[TupleSpec, ...] = ()
    tau_support: Fraction = Fraction(2, 5)
    tau_confidence: Fraction = Fraction(4, 5)
    max_conditions: int = 4
    split_ratio: Fraction = Fraction(4, 5)
    repetitions: int = 10
    seed: int = 1
    confidence_mode: ConfidenceMode = ConfidenceMode.FIRED
    pipeline: str = "multi_way"
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tau_support", Fraction(self.tau_support))
        object.__setattr__(self, "tau_confidence", Fraction(self.tau_confidence))
        object.__setattr__(self, "split_ratio", Fraction(self.split_ratio))
        object.__setattr__(self, "confidence_mode", ConfidenceMode(self.confidence_mode))
        object.__setattr__(self, "tuples", tuple(self.tuples))
        for name in ("tau_support", "tau_confidence"):
            if not 0 <= getattr(self, name) <= 1:
                raise ConfigError(f"{name} must lie in [0, 1]")
        if not 0 < self.split_ratio <= 1:
            raise ConfigError("split_ratio must lie in (0, 1]")
        if self.max_conditions < 1:
            raise ConfigError("max_conditions must be at least 1")
        if self.repetitions < 1:
            raise ConfigError("repetitions must be at least 1")
        if self.pipeline not in PIPELINES:
            raise ConfigError(f"pipeline must be one of {PIPELINES}")

    def with_(self, **changes) -> "ExperimentConfig":
        return replace(self, **changes)

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        known = {"value_set", "tuples", "tau_support", "tau_confidence", "max_conditions",
                 "split_ratio", "repetitions", "seed", "confidence_mode", "pipeline"}
        kw = {}
        try:
            if "value_set" in d:
                kw["value_set"] = validate_value_set(_exact(v, "value_set") for v in d["value_set"])
            if "tuples" in d:
                kw["tuples"] = tuple(TupleSpec.from_config(t) for t in d["tuples"])
            for k in ("tau_support", "tau_confidence", "split_ratio"):
                if k in d:
                    kw[k] = _exact(d[k], k)
            for k in ("max_conditions", "repetitions", "seed"):
                if k in d:
                    kw[k] = int(d[k])
            if "confidence_mode" in d:
                kw["confidence_mode"] = ConfidenceMode(d["confidence_mode"])
            if "pipeline" in d:
                kw["pipeline"] = d["pipeline"]
        except EpirulesError:
            raise
        except (ValueError, TypeError, KeyError) as exc:
            raise ConfigError(str(exc)) from exc
        kw["extra"] = {k: v for k, v in d.items() if k not in known}
        return cls(**kw)

    def to_dict(self) -> dict:
        return {
            "value_set": self.value_set.to_json(),
            "tuples": [t.to_config() for t in self.tuples],
            "tau_support": fmt(self.tau_support),
            "tau_confidence": fmt(self.tau_confidence),
            "max_conditions": self.max_conditions,
            "repetitions": self.repetitions,
            "split_ratio": fmt(self.split_ratio),
            "seed": self.seed,
            "confidence_mode": self.confidence_mode.value,
            "pipeline": self.pipeline,
        }


def _exact(x, name) -> Fraction:
    if isinstance(x, float):
        # JSON numbers arrive as floats; go through their shortest repr
        x = repr(x)
    try:
        return Fraction(x)
    except (ValueError, TypeError):
        raise ConfigError(f"{name}: cannot read {x!r} as a rational") from None


def load_config(path) -> ExperimentConfig:
    with Path(path).open() as fh:
        return ExperimentConfig.from_dict(json.load(fh))
