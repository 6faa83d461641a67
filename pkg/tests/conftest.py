from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # netgen / oracles helpers

from rlnclab import fixtures
from rlnclab.gf import binary_field, prime_field


@pytest.fixture(scope="session")
def gf2():
    return prime_field(2)


@pytest.fixture(scope="session")
def gf5():
    return prime_field(5)


@pytest.fixture(scope="session")
def gf256():
    return binary_field(8)


@pytest.fixture(scope="session")
def butterfly():
    return fixtures.butterfly()


@pytest.fixture(scope="session")
def bottleneck():
    return fixtures.bottleneck()


@pytest.fixture(scope="session")
def crossing():
    return fixtures.crossing()
