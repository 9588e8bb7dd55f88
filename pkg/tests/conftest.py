import numpy as np
import pytest


@pytest.fixture
def fig_window():
    return (9, 5, 4, 10, 8)


@pytest.fixture
def random_walk():
    rng = np.random.default_rng(20230131)
    return np.cumsum(rng.standard_normal(10_000))
