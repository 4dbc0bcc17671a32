"""Tests for the experiment drivers"""
import json

import numpy as np
import pandas as pd
import pytest

from skeptic import golden
from skeptic.harness import (
    BIN_COLUMNS,
    run_dataset_experiment,
    run_simulation,
    run_timing,
    run_worked_examples,
)
from skeptic.models import ExperimentConfig

pytestmark = [pytest.mark.order(11), pytest.mark.timeout(300)]

# skeptic 3 values of s, precise, reject 2 thresholds, sep, par
PREDICTORS = 8


def _method(rows, method, hyper=None):
    picked = rows[rows["method"] == method]
    if hyper is not None:
        picked = picked[picked["hyperparameter"] == hyper]
    return picked.sort_values(["level", "trial"]).reset_index(drop=True)


class Test_worked_examples:
    @pytest.mark.parametrize("example", golden.EXAMPLES, ids=lambda e: e.__name__)
    def test_example_passes(self, example):
        failures = [str(r) for r in example() if not r.passed]
        assert not failures

    def test_driver(self):
        result = run_worked_examples()
        assert result.passed
        assert len(result.audits) == len(golden.EXAMPLES)
        assert set(result.rows.columns) >= {"example", "name", "passed"}


class Test_run_simulation:
    def test_rows(self, simulation_cfg):
        result = run_simulation(simulation_cfg)
        assert len(result.rows) == 2 * 2 * 2
        assert np.allclose(result.rows[list(BIN_COLUMNS)].sum(axis=1), 100.0)
        assert result.audits == {"containment": True}
        assert result.metadata["trees"] == 160

    def test_known_exact_cells(self, simulation_cfg):
        """
        :GIVEN: trees with imprecision 0.45, and two-label trees with 0.05
        :WHEN:  the outer partial vector is compared with the maximal set
        :THEN:  they always coincide
        """
        rows = run_simulation(simulation_cfg).rows
        assert (rows.loc[rows["epsilon"] == 0.45, "q0"] == 100.0).all()
        narrow = rows[(rows["m"] == 2) & (rows["epsilon"] == 0.05)]
        assert (narrow["q0"] == 100.0).all()

    def test_summary(self, simulation_cfg):
        summary = run_simulation(simulation_cfg).summary
        assert len(summary) == 4
        assert {"q0_mean", "q0_ci", "mean_distance_mean"} <= set(summary.columns)

    def test_deterministic(self, simulation_cfg):
        first = run_simulation(simulation_cfg).rows
        pd.testing.assert_frame_equal(first, run_simulation(simulation_cfg).rows)

    def test_early_skip_same_rows(self, simulation_cfg):
        skipping = simulation_cfg.copy(update=dict(early_skip=True))
        pd.testing.assert_frame_equal(
            run_simulation(simulation_cfg).rows, run_simulation(skipping).rows
        )


class Test_run_timing:
    def test_audits(self, timing_cfg):
        result = run_timing(timing_cfg)
        assert result.passed
        assert len(result.rows) == 6

    def test_check_columns(self, timing_cfg):
        summary = run_timing(timing_cfg).summary.set_index("m")
        assert summary.loc[3, "naive_checks"] == 56
        assert summary.loc[3, "alg1_checks"] == 26
        assert summary.loc[1, "alg1_checks"] == 2


class Test_run_dataset_experiment:
    def test_rows(self, dataset_cfg, synthetic_dataset):
        result = run_dataset_experiment(dataset_cfg, synthetic_dataset)
        assert len(result.rows) == 2 * 3 * PREDICTORS
        assert result.rows["IC"].between(0, 1).all()
        assert result.rows["CP"].between(0, 1).all()
        assert result.metadata["cv"] == "1x3"

    def test_precise_skeptic_is_naive_bayes(self, dataset_cfg, synthetic_dataset):
        rows = run_dataset_experiment(dataset_cfg, synthetic_dataset).rows
        skeptic, precise = _method(rows, "skeptic", 0.0), _method(rows, "precise")
        assert np.allclose(skeptic["IC"], precise["IC"])
        assert (skeptic["CP"] == 1.0).all()

    def test_zero_rejection_is_naive_bayes(self, dataset_cfg, synthetic_dataset):
        rows = run_dataset_experiment(dataset_cfg, synthetic_dataset).rows
        reject, precise = _method(rows, "reject", 0.0), _method(rows, "precise")
        assert np.allclose(reject["IC"], precise["IC"])
        assert np.allclose(reject["CP"], precise["CP"])

    def test_completeness_falls_with_s(self, dataset_cfg, synthetic_dataset):
        """
        :GIVEN: nested classifiers with s = 0, 1 and 4
        :WHEN:  they predict the same test rows
        :THEN:  completeness never increases with s
        """
        rows = run_dataset_experiment(dataset_cfg, synthetic_dataset).rows
        cps = [_method(rows, "skeptic", s)["CP"].to_numpy() for s in (0.0, 1.0, 4.0)]
        assert np.all(cps[0] >= cps[1])
        assert np.all(cps[1] >= cps[2])

    def test_missing_labels_reduce_completeness(self, dataset_cfg, synthetic_dataset):
        rows = _method(
            run_dataset_experiment(dataset_cfg, synthetic_dataset).rows, "skeptic", 4.0
        )
        by_level = rows.groupby("level")["CP"].mean()
        assert by_level[80] < by_level[0]

    def test_deterministic(self, dataset_cfg, synthetic_dataset):
        first = run_dataset_experiment(dataset_cfg, synthetic_dataset).rows
        second = run_dataset_experiment(dataset_cfg, synthetic_dataset).rows
        pd.testing.assert_frame_equal(first, second)

    def test_downsampling(self, downsampling_cfg, synthetic_dataset):
        result = run_dataset_experiment(downsampling_cfg, synthetic_dataset)
        assert len(result.rows) == 2 * PREDICTORS
        assert set(result.rows["level"]) == {50}
        assert result.metadata["protocol"] == "downsampling"

    def test_csv_dataset(self, downsampling_cfg, synthetic_dataset, tmp_path):
        path = synthetic_dataset.to_csv(tmp_path / "toy.csv")
        cfg = downsampling_cfg.copy(update=dict(dataset=path))
        result = run_dataset_experiment(cfg)
        assert result.metadata["dataset"] == "toy"
        assert (result.rows["dataset"] == "toy").all()

    def test_write(self, downsampling_cfg, synthetic_dataset, tmp_path):
        result = run_dataset_experiment(downsampling_cfg, synthetic_dataset)
        csv_path, json_path = result.write(tmp_path / "out" / "dataset")
        assert len(pd.read_csv(csv_path)) == len(result.rows)
        document = json.loads(json_path.read_text())
        assert document["passed"] is True
        assert document["metadata"]["experiment"] == "dataset"
        assert len(document["summary"]) == PREDICTORS


@pytest.mark.order(-1)
@pytest.mark.timeout(900)
class Test_desk_scale:
    def test_simulation(self):
        """
        :GIVEN: 200 trees and 3 repetitions per cell for m = 2..6
        :WHEN:  outer partial vectors are compared with exact maximal sets
        :THEN:  they always coincide at epsilon 0.45, and at 0.05 for five
                labels they coincide about 91% of the time
        """
        cfg = ExperimentConfig(
            kind="simulation",
            m_values=[2, 3, 4, 5, 6],
            epsilons=[0.05, 0.45],
            trees_per_cell=200,
            repetitions=3,
            seed=1234,
        )
        summary = run_simulation(cfg).summary.set_index(["m", "epsilon"])
        assert summary.loc[(2, 0.05), "q0_mean"] == 100.0
        assert abs(summary.loc[(5, 0.05), "q0_mean"] - 90.94) <= 4.0
        wide = summary.xs(0.45, level="epsilon")
        assert (wide["q0_mean"] == 100.0).all()

    def test_timing_ratio_grows(self):
        cfg = ExperimentConfig(kind="timing", m_values=[2, 4, 6], instances=3, seed=1234)
        result = run_timing(cfg)
        assert result.passed
        ratios = result.summary["time_ratio"].tolist()
        assert ratios[0] < ratios[1] < ratios[2]
        assert result.metadata["time_ratio_increasing"] is True
