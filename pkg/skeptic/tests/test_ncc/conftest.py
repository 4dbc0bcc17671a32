"""pytest config for skeptic.ncc"""

import pytest

from skeptic.dataset import MISSING, DiscreteDataset


@pytest.fixture
def toy_dataset():
    """One binary feature; `l1` is informative, `l2` never sees class 0"""
    return DiscreteDataset(
        [[0], [0], [1], [0], [1]],
        [[1, 1], [1, MISSING], [0, 1], [0, 1], [1, MISSING]],
        feature_names=["x"],
        label_names=["l1", "l2"],
    )
