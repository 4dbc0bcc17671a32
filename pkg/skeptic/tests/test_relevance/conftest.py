"""pytest config for skeptic.relevance"""

import json

import numpy as np
import pytest

from skeptic.golden import fixture
from skeptic.relevance import MarginalIntervalModel


def _random_model(m: int, rng: np.random.Generator) -> MarginalIntervalModel:
    pairs = np.sort(rng.uniform(size=(m, 2)), axis=1)
    return MarginalIntervalModel.from_pairs(pairs.tolist())


@pytest.fixture
def random_model():
    return _random_model


@pytest.fixture
def marginal_model():
    return MarginalIntervalModel.from_pairs(
        json.loads(fixture("marginal_intervals.json").read_text())
    )
