"""Tests for the config file and the experiment settings built from it"""
import pytest

from skeptic.config import SkepticConfig
from skeptic.evaluation import CorruptionKind
from skeptic.models import ExperimentConfig, ExperimentKind, Method, Protocol
from skeptic.signals import ConfigurationError

pytestmark = pytest.mark.order(2)


class Test_SkepticConfig:
    def test_writes_defaults(self, skeptic_cfg_path):
        """
        :GIVEN: no config file at the chosen location
        :WHEN:  a config object is created
        :THEN:  a file of defaults is written there, parent directory included
        """
        assert not skeptic_cfg_path.exists()
        cfg = SkepticConfig(skeptic_cfg_path)
        assert skeptic_cfg_path.exists()
        assert "[simulation]" in skeptic_cfg_path.read_text()
        assert cfg.skeptic.config_file == str(skeptic_cfg_path)

    def test_desk_scale_defaults(self, skeptic_cfg):
        assert skeptic_cfg.simulation.trees_per_cell == 200
        assert skeptic_cfg.simulation.repetitions == 3
        assert skeptic_cfg.simulation.early_skip is False
        assert skeptic_cfg.timing.m_values == "3,4,5,6,7"
        assert skeptic_cfg.dataset.downsample_repeats == 50
        assert skeptic_cfg.skeptic.log_level == "INFO"

    def test_file_overrides_defaults(self, skeptic_override_cfg):
        cfg = SkepticConfig(skeptic_override_cfg)
        assert cfg.simulation.trees_per_cell == 10
        assert cfg.simulation.m_values == "2,3"
        assert cfg.simulation.repetitions == 3

    def test_env_selects_file(self, skeptic_test_env):
        assert SkepticConfig.what_config_file() == skeptic_test_env

    def test_get_config_caches(self, skeptic_test_env):
        assert SkepticConfig.get_config() is SkepticConfig.get_config()

    def test_get_block(self, skeptic_cfg):
        assert skeptic_cfg.get_block("timing").instances == 5
        assert skeptic_cfg.get_block("nonexistent") is None

    def test_write_drops_runtime_entries(self, skeptic_cfg, tmp_path):
        """
        :GIVEN: a loaded config
        :WHEN:  it is written elsewhere
        :THEN:  the file holds settings only, and the object keeps its entries
        """
        written = skeptic_cfg.write(tmp_path / "copy.ini")
        text = written.read_text()
        assert "config_file" not in text
        assert "version" not in text
        assert skeptic_cfg.skeptic.config_file
        assert SkepticConfig(written).simulation.trees_per_cell == 200

    def test_unwritable_location(self, tmp_path, caplog):
        blocker = tmp_path / "not-a-directory"
        blocker.write_text("")
        cfg = SkepticConfig(blocker / "skeptic.ini")
        assert cfg.simulation.repetitions == 3
        assert "Could not write config file" in caplog.text


class Test_ExperimentConfig:
    def test_from_block(self, skeptic_cfg):
        cfg = ExperimentConfig.from_config(skeptic_cfg, ExperimentKind.simulation)
        assert cfg.kind is ExperimentKind.simulation
        assert cfg.m_values == [2, 3, 4, 5, 6]
        assert cfg.epsilons == [0.05, 0.15, 0.25, 0.35, 0.45]
        assert cfg.trees_per_cell == 200
        assert cfg.repetitions == 3

    def test_full_scale(self, skeptic_cfg):
        cfg = ExperimentConfig.from_config(
            skeptic_cfg, ExperimentKind.simulation, full_scale=True
        )
        assert cfg.trees_per_cell == 2000
        assert cfg.repetitions == 5

    def test_overrides(self, skeptic_cfg):
        """
        :GIVEN: a config block
        :WHEN:  flags are passed as overrides, some of them unset
        :THEN:  set flags win and unset ones leave the block alone
        """
        cfg = ExperimentConfig.from_config(
            skeptic_cfg,
            "simulation",
            m_values="2,3",
            trees_per_cell=None,
            seed=7,
        )
        assert cfg.m_values == [2, 3]
        assert cfg.trees_per_cell == 200
        assert cfg.seed == 7

    def test_dataset_block(self, skeptic_override_cfg):
        cfg = ExperimentConfig.from_config(
            SkepticConfig(skeptic_override_cfg), ExperimentKind.dataset
        )
        assert cfg.levels == [0, 40, 80]
        assert cfg.methods == [Method.skeptic, Method.precise]
        assert cfg.protocol is Protocol.corruption
        assert cfg.corruption is CorruptionKind.missing
        assert cfg.gammas == [0, 0.15, 0.25, 0.35, 0.45]

    @pytest.mark.parametrize(
        "override",
        [
            dict(epsilons="0.05,0.9"),
            dict(m_values="0"),
            dict(train_fractions="15"),
            dict(gammas="0.5"),
        ],
    )
    def test_invalid_values(self, skeptic_cfg, override):
        kind = "dataset" if set(override) & {"train_fractions", "gammas"} else "simulation"
        with pytest.raises(ConfigurationError):
            ExperimentConfig.from_config(skeptic_cfg, kind, **override)

    def test_json_round_trip(self, tmp_path):
        cfg = ExperimentConfig(kind="timing", m_values=[3, 4], instances=2)
        path = tmp_path / "experiment.json"
        path.write_text(cfg.json())
        assert ExperimentConfig.parse_file(path) == cfg
