import random

import pytest

from glchars.context import get_context
from glchars.group import is_invertible


@pytest.fixture(scope="session")
def ctx3():
    return get_context(3, 1, 2)


@pytest.fixture(scope="session")
def ctx3_equal():
    return get_context(3, 1, 2, "equal")


@pytest.fixture(scope="session")
def ctx5():
    return get_context(5, 1, 2)


@pytest.fixture(scope="session")
def ctx3_r4():
    return get_context(3, 1, 4)


def random_invertible(R, rng: random.Random):
    while True:
        g = tuple(rng.randrange(R.size) for _ in range(4))
        if is_invertible(R, g):
            return g
