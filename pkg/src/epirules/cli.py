"""Command-line entry point: mine, bench, synth, check."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import pipeline
from .config import PIPELINES, ExperimentConfig, load_config
from .data import ingest_csv, write_csv as write_dataset
from .errors import EpirulesError
from .language import Rule
from .rationality import audit
from .report import write_csv, write_json
from .synth import gen_synthetic, synthetic_tuple

STATS_COLUMNS = ["target", "repetition", "rule", "support", "confidence", "lift",
                 "fired", "agrees", "correct"]


def _cmd_mine(ns) -> int:
    cfg = load_config(ns.config)
    changes = {}
    if ns.pipeline:
        changes["pipeline"] = ns.pipeline
    if ns.seed is not None:
        changes["seed"] = ns.seed
    cfg = cfg.with_(**changes)
    data = ingest_csv(ns.dataset, ns.scale)
    out = Path(ns.out)
    out.mkdir(parents=True, exist_ok=True)

    rep = pipeline.run_experiment(cfg, data)
    rules_doc = {"config": cfg.to_dict(), "rules": []}
    stat_rows = []
    for (target, r), rules in rep.rules.items():
        rules_doc["rules"].append({"target": target, "repetition": r,
                                   "rules": [x.to_dict() for x in rules]})
        for rule in rules:
            s = rep.test_stats[(target, r)][rule]
            stat_rows.append({"target": target, "repetition": r, "rule": str(rule),
                              "support": s.support, "confidence": s.confidence, "lift": s.lift,
                              "fired": s.fired_count, "agrees": s.agrees_count,
                              "correct": s.correct_count})
    write_json(out / "rules.json", rules_doc)
    write_csv(out / "stats.csv", STATS_COLUMNS, stat_rows)
    write_csv(out / "report.csv", pipeline.REPORT_COLUMNS, rep.table())
    timings = [{k: row[k] for k in ("target", "repetition", "pipeline", "value_set_size",
                                    "wall_time_s")} for row in rep.rows]
    write_csv(out / "timings.csv", ["target", "repetition", "pipeline", "value_set_size",
                                    "wall_time_s"], timings)
    print(f"wrote {len(stat_rows)} rule rows to {out}")
    return 0


def _cmd_bench(ns) -> int:
    cfg = load_config(ns.config)
    with open(ns.grid) as fh:
        entries = json.load(fh)
    grid = pipeline.grid_from_json(cfg, entries)
    data = ingest_csv(ns.dataset, ns.scale)
    rows = pipeline.benchmark(grid, data)
    out = Path(ns.out)
    out.mkdir(parents=True, exist_ok=True)
    write_csv(out / "timings.csv", pipeline.TIMING_COLUMNS, rows)
    print(f"wrote {len(rows)} timing rows to {out / 'timings.csv'}")
    return 0


def _cmd_synth(ns) -> int:
    rel = ns.relations
    if "," in rel or rel.isdigit():
        rel = [int(x) for x in rel.split(",")]
    ds = gen_synthetic(ns.rows, ns.influencers, rel, Fraction(ns.noise), ns.seed)
    write_dataset(ds, ns.out)
    print(f"wrote {len(ds)} rows to {ns.out}")
    if ns.config_out:
        spec = synthetic_tuple(ns.influencers, rel)
        write_json(ns.config_out, ExperimentConfig(tuples=(spec,)).to_dict())
        print(f"wrote matching config to {ns.config_out}")
    return 0


def _cmd_check(ns) -> int:
    cfg = load_config(ns.config)
    with open(ns.rules) as fh:
        doc = json.load(fh)
    # accepts the mine output layout or a flat list of rules
    groups = doc["rules"] if isinstance(doc, dict) else [{"rules": doc}]
    total = 0
    result = []
    for g in groups:
        rules = [Rule.from_dict(r) for r in g["rules"]]
        for spec in cfg.tuples:
            if "target" in g and g["target"] != spec.target:
                continue
            mine = [r for r in rules if r.head.arg == spec.target]
            a = audit(mine, spec)
            total += a["irrational"]
            result.append({"target": spec.target, "repetition": g.get("repetition"),
                           "rules": len(mine), **a})
    print(json.dumps({"irrational": total, "groups": result}, indent=2))
    return 1 if total else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="epirules", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("mine", help="learn rules with repeated train/test splits")
    m.add_argument("--dataset", required=True)
    m.add_argument("--scale", type=int, default=None, help="Likert scale points of raw cells")
    m.add_argument("--config", required=True)
    m.add_argument("--pipeline", choices=PIPELINES)
    m.add_argument("--seed", type=int)
    m.add_argument("--out", default="out")
    m.set_defaults(func=_cmd_mine)

    b = sub.add_parser("bench", help="time learning over a grid of configs")
    b.add_argument("--dataset", required=True)
    b.add_argument("--scale", type=int, default=None)
    b.add_argument("--config", required=True)
    b.add_argument("--grid", required=True, help="JSON list of config overrides")
    b.add_argument("--out", default="out")
    b.set_defaults(func=_cmd_bench)

    s = sub.add_parser("synth", help="write a synthetic dataset")
    s.add_argument("--rows", type=int, required=True)
    s.add_argument("--influencers", type=int, required=True)
    s.add_argument("--relations", default="mixed",
                   help="attack, support, mixed, or tags like 1,1,0")
    s.add_argument("--noise", default="0.1")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True)
    s.add_argument("--config-out", help="also write a config JSON for the generated tuple")
    s.set_defaults(func=_cmd_synth)

    c = sub.add_parser("check", help="audit a rules file for irrational rules")
    c.add_argument("--rules", required=True)
    c.add_argument("--config", required=True)
    c.set_defaults(func=_cmd_check)
    return p


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return ns.func(ns)
    except (EpirulesError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
