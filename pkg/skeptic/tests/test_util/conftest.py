"""pytest config for skeptic.util"""

import pytest


@pytest.fixture
def mock_config_dict():
    return dict(
        intval="99", floatval="9.9", stringval="0.05,0.15", boolean="True"
    )
