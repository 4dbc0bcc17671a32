"""pytest config for skeptic.core"""

import pytest

from skeptic.core import PartialVector, PredictionSet


@pytest.fixture
def one_star_zero():
    return PartialVector(entries="1*0")


@pytest.fixture
def dominance_maximal_set():
    return PredictionSet.from_strings(["00", "10", "11"])
