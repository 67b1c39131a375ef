"""Learning epistemic graph constraints from belief data."""
from .config import ExperimentConfig, load_config
from .data import DataItem, Dataset, ingest_csv, item, read_csv, split
from .engine import available_kernels, default_kernel
from .errors import EpirulesError
from .generalize import expand_subrules, multi_way_gen, pre_gen, two_way_gen
from .language import Atom, Comparator, Rule, format_rule, parse_atom, parse_rule
from .metrics import ConfidenceMode, RuleStats, best, classify, simplest, stats
from .model import ATTACK, SUPPORT, BipolarGraph, InfluenceTuple, RelationSet, TupleSpec, to_graph
from .pipeline import benchmark, evaluate, learn, run_experiment
from .rationality import Principle, Stance, audit, audit_irrational, check_principles, rational_filter
from .semantics import BeliefDistribution, enumerate_restricted, is_coherent, marginal, satisfies
from .synth import gen_synthetic
from .values import (GRID, PI_3, PI_5, PI_11, RestrictedValueSet, Value, map_likert, nearest,
                     validate_value_set, value_set_of_size)

__version__ = "0.1.0"
