"""Learning and evaluation: generalize, filter, select Best, then Simplest."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable

from . import engine
from .config import ExperimentConfig
from .data import Dataset, ingest_csv, require_nonempty, split
from .errors import EmptyDataset
from .generalize import multi_way_gen, pre_gen, two_way_gen
from .language import Rule
from .metrics import ConfidenceMode, RuleStats, stats
from .model import TupleSpec
from .rationality import audit, exact_violation
from .values import RestrictedValueSet

log = logging.getLogger(__name__)


def _spec(I, rel) -> TupleSpec:
    return I if isinstance(I, TupleSpec) else TupleSpec(I, rel)


def generate(train: Dataset, spec: TupleSpec, pipeline: str,
             value_set: RestrictedValueSet) -> list[tuple[int, Rule]]:
    """Per training row, the full-length rule it generates (if any)."""
    out = []
    for i, d in enumerate(train):
        if pipeline == "two_way":
            out.append((i, two_way_gen(d, spec.influence)))
            continue
        exact = pre_gen(d, spec.influence)
        if exact_violation(exact, spec) is None:
            out.append((i, multi_way_gen(exact, value_set)))
    return out


@dataclass
class LearnResult:
    rules: list[Rule]
    train_stats: dict[Rule, RuleStats]
    generated: int
    visited: int
    kernel: str


def learn_detailed(train: Dataset, I, rel=None, cfg: ExperimentConfig | None = None,
                   kernel: str | None = None) -> LearnResult:
    cfg = cfg or ExperimentConfig()
    spec = _spec(I, rel)
    if len(train) == 0:
        raise EmptyDataset("cannot learn from an empty training set")
    train.require(spec.influence.arguments)
    generated = generate(train, spec, cfg.pipeline, cfg.value_set)
    found = engine.mine(train, generated, spec.influencers, cfg.max_conditions,
                        cfg.tau_support, cfg.tau_confidence, cfg.confidence_mode, kernel,
                        minimal_only=True)
    # Best first, then Simplest over the Best set (done on atom ids in the engine)
    chosen = sorted(found.best, key=Rule.sort_key)
    return LearnResult(chosen, {r: found.best[r] for r in chosen}, len(generated),
                       found.visited, found.kernel)


def learn(train: Dataset, I, rel=None, cfg: ExperimentConfig | None = None,
          kernel: str | None = None) -> list[Rule]:
    """Learn the simplest best rules for one influence tuple.

    multi_way: exact rule per row, drop irrational ones, generalize against
    the value set, expand to sub-rules of at most ``max_conditions``
    conditions. two_way: the 2-way rule per row, no filtering. Both then keep
    Best (scored on ``train``) and finally Simplest.
    """
    return learn_detailed(train, I, rel, cfg, kernel).rules


def _mean(xs) -> Fraction | None:
    xs = [x for x in xs if x is not None]
    return sum(xs, Fraction(0)) / len(xs) if xs else None


def evaluate(rules: Iterable[Rule], test: Dataset, I, rel=None,
             mode=ConfidenceMode.FIRED) -> dict:
    """Test-split metrics for a learnt rule set.

    Means skip rules whose confidence or lift is undefined on ``test``.
    """
    spec = _spec(I, rel)
    if len(test) == 0:
        raise EmptyDataset("cannot evaluate on an empty test set")
    rules = list(rules)
    per_rule = {r: stats(r, test, mode) for r in rules}
    report = audit(rules, spec)
    return {
        "rule_count": len(rules),
        "avg_conditions": Fraction(sum(len(r) for r in rules), len(rules)) if rules else Fraction(0),
        "support": _mean(s.support for s in per_rule.values()) if rules else Fraction(0),
        "confidence": _mean(s.confidence for s in per_rule.values()) if rules else Fraction(0),
        "lift": _mean(s.lift for s in per_rule.values()) if rules else Fraction(0),
        "irrational": report["irrational"],
        "by_principle": report["by_principle"],
        "rule_stats": per_rule,
    }


REPORT_COLUMNS = ["target", "repetition", "pipeline", "value_set_size", "rule_count",
                  "avg_conditions", "support", "confidence", "lift", "irrational",
                  "wall_time_s"]


@dataclass
class ExperimentReport:
    rows: list[dict] = field(default_factory=list)
    rules: dict[tuple[str, int], list[Rule]] = field(default_factory=dict)
    test_stats: dict[tuple[str, int], dict[Rule, RuleStats]] = field(default_factory=dict)

    def averages(self) -> list[dict]:
        out = []
        targets = []
        for r in self.rows:
            if r["target"] not in targets:
                targets.append(r["target"])
        for t in targets:
            rows = [r for r in self.rows if r["target"] == t]
            avg = {"target": t, "repetition": "avg", "pipeline": rows[0]["pipeline"],
                   "value_set_size": rows[0]["value_set_size"]}
            for col in ("rule_count", "avg_conditions", "support", "confidence", "lift",
                        "irrational", "wall_time_s"):
                avg[col] = _mean(r[col] for r in rows)
            out.append(avg)
        return out

    def table(self) -> list[dict]:
        return self.rows + self.averages()


def run_experiment(cfg: ExperimentConfig, dataset, kernel: str | None = None) -> ExperimentReport:
    """Repeat split/learn/evaluate; repetition r splits with seed + r."""
    if not isinstance(dataset, Dataset):
        dataset = ingest_csv(dataset, cfg.extra.get("scale_points"))
    require_nonempty(dataset)
    report = ExperimentReport()
    for spec in cfg.tuples:
        dataset.require(spec.influence.arguments)
    for rep in range(1, cfg.repetitions + 1):
        train, test = split(dataset, cfg.split_ratio, cfg.seed + rep)
        for spec in cfg.tuples:
            t0 = time.perf_counter()
            rules = learn(train, spec, cfg=cfg, kernel=kernel)
            wall = time.perf_counter() - t0
            ev = evaluate(rules, test, spec, mode=cfg.confidence_mode)
            log.info("rep %d target %s: %d rules in %.3fs", rep, spec.target, len(rules), wall)
            report.rows.append({
                "target": spec.target, "repetition": rep, "pipeline": cfg.pipeline,
                "value_set_size": len(cfg.value_set),
                **{k: ev[k] for k in ("rule_count", "avg_conditions", "support",
                                      "confidence", "lift", "irrational")},
                "wall_time_s": Fraction(round(wall * 1e6), 10**6),
            })
            report.rules[(spec.target, rep)] = rules
            report.test_stats[(spec.target, rep)] = ev["rule_stats"]
    return report


def baseline_instantiations(n_rows: int, n_influencers: int, value_set: RestrictedValueSet,
                            max_conditions: int) -> int:
    """Rules an exhaustive 2-way-style generalization over ``value_set`` would
    instantiate: every candidate atom (<, >, <=, >= against an interior value)
    that a row satisfies, in every condition subset up to the cap.

    For each interior value x a row value satisfies exactly one of {< x, >= x}
    and one of {<= x, > x}, so each argument contributes 2m atoms.
    """
    m = sum(1 for v in value_set if 0 < v.num < value_set.values[-1].num)
    per_arg = 2 * m
    bodies = sum(comb(n_influencers, k) * per_arg ** k
                 for k in range(1, min(n_influencers, max_conditions) + 1))
    return n_rows * bodies * per_arg


TIMING_COLUMNS = ["target", "pipeline", "value_set_size", "rows", "influencers",
                  "rule_count", "candidates_visited", "instantiations", "wall_time_s", "kernel"]


def benchmark(cfg_grid: Iterable[ExperimentConfig], dataset, kernel: str | None = None) -> list[dict]:
    """Wall time of one learn per (config, tuple), on the seed+1 training split.

    ``instantiations`` is the exhaustive baseline count for the config's value
    set; the multi-way engine never materializes those candidates.
    """
    rows = []
    for cfg in cfg_grid:
        data = dataset if isinstance(dataset, Dataset) else ingest_csv(dataset, cfg.extra.get("scale_points"))
        if not cfg.tuples:
            continue
        train, _ = split(data, cfg.split_ratio, cfg.seed + 1)
        for spec in cfg.tuples:
            t0 = time.perf_counter()
            res = learn_detailed(train, spec, cfg=cfg, kernel=kernel)
            wall = time.perf_counter() - t0
            rows.append({
                "target": spec.target, "pipeline": cfg.pipeline,
                "value_set_size": len(cfg.value_set), "rows": len(train),
                "influencers": len(spec.influencers), "rule_count": len(res.rules),
                "candidates_visited": res.visited,
                "instantiations": baseline_instantiations(len(train), len(spec.influencers),
                                                          cfg.value_set, cfg.max_conditions),
                "wall_time_s": Fraction(round(wall * 1e6), 10**6), "kernel": res.kernel,
            })
    return rows


def grid_from_json(base: ExperimentConfig, entries: list[dict]) -> list[ExperimentConfig]:
    """Expand grid entries (partial config dicts) over ``base``."""
    out = []
    merged_base = base.to_dict()
    for e in entries:
        d = dict(merged_base)
        d.update(e)
        out.append(ExperimentConfig.from_dict(d))
    return out
