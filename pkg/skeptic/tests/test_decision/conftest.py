"""pytest config for skeptic.decision"""

import pytest

EPSILONS = [0.05, 0.15, 0.25, 0.35, 0.45]


@pytest.fixture(params=EPSILONS)
def epsilon(request):
    return request.param
