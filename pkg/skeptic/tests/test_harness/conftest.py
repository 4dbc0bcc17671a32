"""pytest config for skeptic.harness"""

import pytest

from skeptic.models import ExperimentConfig


@pytest.fixture
def simulation_cfg():
    return ExperimentConfig(
        kind="simulation",
        m_values=[2, 3],
        epsilons=[0.05, 0.45],
        trees_per_cell=20,
        repetitions=2,
        seed=5,
    )


@pytest.fixture
def timing_cfg():
    return ExperimentConfig(kind="timing", m_values=[1, 2, 3], instances=2, seed=5)


@pytest.fixture
def dataset_cfg():
    return ExperimentConfig(
        kind="dataset",
        levels=[0, 80],
        s_values=[0, 1, 4],
        gammas=[0, 0.25],
        c_sep=[0.2],
        c_par=[0.5],
        cv_repeats=1,
        cv_folds=3,
        seed=5,
    )


@pytest.fixture
def downsampling_cfg():
    return ExperimentConfig(
        kind="dataset",
        protocol="downsampling",
        train_fractions=[50],
        downsample_repeats=2,
        s_values=[0, 1, 4],
        gammas=[0, 0.25],
        c_sep=[0.2],
        c_par=[0.5],
        seed=5,
    )
