"""
Settings, property validation and the process-wide current settings.
"""

import pytest

from umt import config
from umt.config import Accessor, DefaultSettings
from umt.errors import SettingError


def test_defaults():
    s = DefaultSettings()
    assert s.limits.aut_universe.value() == 8
    assert s.limits.miner_universe.value() == 5
    assert s.schemes.uniformity_mode.value() == "orbits"
    assert s.schemes.atomicity_mode.value() == "subsets"
    assert s.miner.workers.value() == 1


def test_validation():
    s = DefaultSettings()
    s.limits.aut_universe = 10
    assert s.limits.aut_universe.value() == 10
    with pytest.raises(SettingError):
        s.limits.aut_universe = 11
    with pytest.raises(SettingError):
        s.miner.workers = 0
    with pytest.raises(SettingError):
        s.miner.workers = "two"
    with pytest.raises(SettingError):
        s.miner.chunk_bits = True
    with pytest.raises(SettingError):
        s.schemes.uniformity_mode = "everything"
    s.schemes.uniformity_mode = "formulas:3"
    with pytest.raises(SettingError):
        s.limits.nope = 1


def test_groups_are_independent():
    a, b = DefaultSettings(), DefaultSettings()
    a.limits.formula_depth = 2
    assert b.limits.formula_depth.value() == 4


def test_override():
    s = DefaultSettings()
    s.override("miner.seed", 7)
    assert s.miner.seed.value() == 7
    for key in ("miner", "nope.seed", "miner.nope"):
        with pytest.raises(SettingError):
            s.override(key, 1)


def test_values():
    s = DefaultSettings()
    s.override("limits.enum_bits", 16)
    values = s.values()
    assert values.limits.enum_bits == 16
    assert values._as_dict()["miner"]["progress"] is True
    with pytest.raises(AttributeError):
        values.limits = None
    assert Accessor({"a": {"b": 1}}).a.b == 1


def test_use(settings):
    assert config.current() is settings
    other = DefaultSettings()
    assert config.use(other) is settings
    assert config.current() is other
    config.use(settings)
