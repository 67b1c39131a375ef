import json
from fractions import Fraction

import pytest

from epirules.config import ExperimentConfig, load_config
from epirules.errors import ConfigError, ValueDomainError
from epirules.metrics import ConfidenceMode
from epirules.report import fmt
from epirules.values import PI_5, PI_3

CFG = {"value_set": ["0", "0.5", "1"],
       "tuples": [{"target": "Dw6", "influencers": ["Dw2", "Dw3", "Dw5"], "relations": [1, 1, 0]}],
       "tau_support": "0.4", "tau_confidence": "0.8", "max_conditions": 4, "repetitions": 10,
       "split_ratio": "0.8", "seed": 1, "confidence_mode": "fired"}


def test_defaults():
    c = ExperimentConfig()
    assert c.tau_support == Fraction(2, 5) and c.tau_confidence == Fraction(4, 5)
    assert c.max_conditions == 4 and c.repetitions == 10 and c.split_ratio == Fraction(4, 5)
    assert c.value_set == PI_5 and c.confidence_mode is ConfidenceMode.FIRED


def test_from_dict_roundtrip(tmp_path):
    c = ExperimentConfig.from_dict(CFG)
    assert c.value_set == PI_3 and c.tuples[0].target == "Dw6"
    assert ExperimentConfig.from_dict(c.to_dict()) == c
    p = tmp_path / "c.json"
    p.write_text(json.dumps(CFG))
    assert load_config(p) == c


def test_json_numbers_are_read_exactly():
    c = ExperimentConfig.from_dict({**CFG, "tau_support": 0.1})
    assert c.tau_support == Fraction(1, 10)


@pytest.mark.parametrize("bad", [{"tau_support": "1.5"}, {"max_conditions": 0},
                                 {"pipeline": "three_way"}, {"confidence_mode": "sometimes"},
                                 {"split_ratio": "0"}, {"tau_confidence": "abc"}])
def test_invalid(bad):
    with pytest.raises(ConfigError):
        ExperimentConfig.from_dict({**CFG, **bad})


def test_bad_value_set():
    with pytest.raises(ValueDomainError):
        ExperimentConfig.from_dict({**CFG, "value_set": ["0", "0.3", "1"]})


@pytest.mark.parametrize("x,s", [(None, ""), (Fraction(1, 3), "0.333333"), (Fraction(3, 2), "1.5"),
                                 (Fraction(2, 1), "2"), (Fraction(1, 8), "0.125"), (7, "7"),
                                 (Fraction(2, 3), "0.666667")])
def test_fmt(x, s):
    assert fmt(x) == s
