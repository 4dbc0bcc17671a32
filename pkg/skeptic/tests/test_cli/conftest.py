"""pytest config for the skeptic command line"""

import pytest
from typer.testing import CliRunner

from skeptic.cli import app


@pytest.fixture
def runner():
    return CliRunner(env={"COLUMNS": "200"})


@pytest.fixture
def invoke(runner, tmp_path):
    """Run the command line against a throw-away config file"""

    def _invoke(*args):
        return runner.invoke(app, ["--config", str(tmp_path / "skeptic.ini"), *args])

    return _invoke
