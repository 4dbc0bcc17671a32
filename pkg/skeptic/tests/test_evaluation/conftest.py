"""pytest config for skeptic.evaluation"""

import numpy as np
import pytest

from skeptic.evaluation import CorruptionKind, CorruptionSpec


@pytest.fixture
def clean_labels():
    return np.zeros((10, 4), dtype=np.int8)


@pytest.fixture
def missing_spec():
    return CorruptionSpec(kind=CorruptionKind.missing, percentage=25, seed=3)
