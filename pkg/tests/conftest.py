import random

import pytest
from hypothesis import settings

# exact-arithmetic tests have wildly varying step costs; wall-clock
# deadlines only produce flakes here
settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0,
                     help="seed for the randomized property samples")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))
