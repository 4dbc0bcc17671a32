"""pytest config for skeptic.baselines"""

import itertools

import pytest

from skeptic.core import PartialVector


def _all_partials(m: int):
    for labels in itertools.product((0, 1, None), repeat=m):
        yield PartialVector.from_labels(labels)


@pytest.fixture
def all_partials():
    return _all_partials
