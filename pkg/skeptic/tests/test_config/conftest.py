"""fixtures for skeptic config testing"""

import pytest

from skeptic.config import SkepticConfig


@pytest.fixture
def skeptic_cfg_path(tmp_path):
    return tmp_path / "etc" / "skeptic.ini"


@pytest.fixture
def skeptic_test_env(monkeypatch, skeptic_cfg_path):
    monkeypatch.setenv("SKEPTIC_CONFIG", str(skeptic_cfg_path))
    return skeptic_cfg_path


@pytest.fixture
def skeptic_override_cfg(tmp_path):
    path = tmp_path / "override.ini"
    path.write_text(
        "[simulation]\n"
        "trees_per_cell = 10\n"
        "m_values = 2,3\n"
        "[dataset]\n"
        "levels = 0,40,80\n"
        "methods = skeptic,precise\n"
    )
    return path


@pytest.fixture
def skeptic_cfg(skeptic_cfg_path):
    return SkepticConfig(skeptic_cfg_path)
