"""pytest config for skeptic.tree"""

import numpy as np
import pytest


def _random_costs(m: int, count: int, rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(-2.0, 2.0, size=(count, 1 << m))


@pytest.fixture
def random_costs():
    return _random_costs
