import pytest

from hassewitt import SupportSet
from hassewitt.cli import PRESETS


def support_from_preset(name):
    cfg = PRESETS[name]
    return SupportSet.build(cfg["n"], cfg["d"], cfg["exponents"])


@pytest.fixture
def hesse():
    return support_from_preset("hesse-cubic")


@pytest.fixture
def fermat():
    return support_from_preset("fermat-cubic")


@pytest.fixture
def quartic():
    return support_from_preset("quartic-full")


@pytest.fixture
def quintic():
    return support_from_preset("quintic-full")
