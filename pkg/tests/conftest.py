import random

import pytest
from hypothesis import HealthCheck, settings

# One deterministic profile for the whole suite: property tests must not
# flake in CI, and shrunk counterexamples must reproduce.
settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture
def rng():
    return random.Random(0)
