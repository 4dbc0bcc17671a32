"""pytest config for skeptic.dataset"""

import pandas as pd
import pytest


@pytest.fixture
def integer_frame():
    return pd.DataFrame(
        {
            "colour": ["0", "1", "2", "1"],
            "size": ["1", "0", "0", "1"],
            "y:sport": ["1", "0", "*", "1"],
            "y:news": ["0", "0", "1", "*"],
        }
    )


@pytest.fixture
def real_frame():
    return pd.DataFrame(
        {
            "height": ["0.0", "0.5", "1.5", "2.0"],
            "y:tall": ["0", "0", "1", "1"],
        }
    )
