import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polyprime import parse_grid


@pytest.fixture
def cell():
    return parse_grid("#")


@pytest.fixture
def domino():
    return parse_grid("##")


@pytest.fixture
def tromino_l():
    return parse_grid("#.\n##")


@pytest.fixture
def square2():
    return parse_grid("##\n##")


@pytest.fixture
def rect23():
    return parse_grid("###\n###")


@pytest.fixture
def annulus():
    return parse_grid("###\n#.#\n###")
