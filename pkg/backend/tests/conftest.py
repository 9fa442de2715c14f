from __future__ import annotations

import math
import random

import pytest

from wilfkit.config import get_settings
from wilfkit.services import semigroup_service


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Isolate every test from WILFKIT_* variables set in the calling shell."""

    for name in (
        "WILFKIT_DEFAULT_JOBS",
        "WILFKIT_NODE_LIMIT",
        "WILFKIT_OUTPUT_FORMAT",
        "WILFKIT_APERY_VECTOR_THRESHOLD",
        "WILFKIT_SPLIT_FACTOR",
        "WILFKIT_SHOW_PROGRESS",
        "WILFKIT_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def override_settings(monkeypatch):
    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"WILFKIT_{key.upper()}", str(value))
        get_settings.cache_clear()
        return get_settings()

    return apply


@pytest.fixture
def s_7_8_10_19():
    return semigroup_service.construct([7, 8, 10, 19])


@pytest.fixture
def two_three():
    return semigroup_service.construct([2, 3])


@pytest.fixture
def naturals():
    return semigroup_service.construct([1])


@pytest.fixture
def wide_generators():
    """Multiplicity 10^5 plus 19 seeded random generators in (m, 3m)."""

    m = 10**5
    rng = random.Random(20251019)
    while True:
        generators = [m] + rng.sample(range(m + 1, 3 * m), 19)
        if math.gcd(*generators) == 1:
            return generators
