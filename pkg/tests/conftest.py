from pathlib import Path

import pytest

from umt import config, logger
from umt.config import DefaultSettings
from umt.families import cyclic_order, linear_chain, single_relation

SAMPLES = Path(__file__).parent.parent / "samples"


@pytest.fixture(autouse=True)
def settings():
    """
    Fresh default settings per test, progress bars off.
    """
    fresh = DefaultSettings()
    fresh.miner.progress = False
    prev = config.use(fresh)
    level = logger.get_level()
    yield fresh
    config.use(prev)
    logger.set_level(level)


@pytest.fixture
def l3():
    return linear_chain(3)


@pytest.fixture
def chain3():
    return linear_chain(3, strict=False)


@pytest.fixture
def z4():
    return cyclic_order(4)


@pytest.fixture
def c3():
    return single_relation(3, "R", [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def samples():
    return SAMPLES
