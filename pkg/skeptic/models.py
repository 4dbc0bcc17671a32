"""
Experiment models
-----------------

Pydantic_ models describing what an experiment driver should run, and the
object it hands back.

:class:`ExperimentConfig` holds every knob of every driver; each driver only
reads the fields relevant to it.  Sweep fields accept comma-separated text as
well as lists, so a config can be built straight from an INI block
(:meth:`ExperimentConfig.from_config`), from command-line flags, or from a
JSON file (:meth:`ExperimentConfig.parse_file`); it writes itself back out
with :meth:`~pydantic.BaseModel.json`.

The field defaults are the full-scale sample sizes (2000 trees per cell, 5
repetitions).  The INI file written by :mod:`skeptic.config` carries smaller
desk-scale values.

:class:`ExperimentResult` bundles the per-trial rows, the summary table, the
audit outcomes and some metadata, and writes them as a CSV file plus a JSON
file.

.. _Pydantic: https://pydantic-docs.helpmanual.io/

"""
from enum import Enum
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, confloat, conint, validator

from skeptic._version import __version__
from skeptic.evaluation import TRAIN_FRACTIONS, CorruptionKind
from skeptic.signals import ConfigurationError
from skeptic.util import parse_list

logger = logging.getLogger(__name__)

VERSTR = f"skeptic v{__version__}"


class ExperimentKind(str, Enum):
    """Which driver a configuration is for"""

    simulation = "simulation"
    timing = "timing"
    dataset = "dataset"
    examples = "examples"


class Protocol(str, Enum):
    """How a dataset experiment damages or shrinks the training data"""

    corruption = "corruption"
    downsampling = "downsampling"


class Method(str, Enum):
    """Set-valued predictors compared by the dataset driver"""

    skeptic = "skeptic"
    precise = "precise"
    reject = "reject"
    abstain_sep = "abstain-sep"
    abstain_par = "abstain-par"


SWEEP_FIELDS = (
    "m_values",
    "epsilons",
    "levels",
    "s_values",
    "gammas",
    "c_sep",
    "c_par",
    "methods",
    "train_fractions",
)


class ExperimentConfig(BaseModel):
    """Settings of one experiment run"""

    kind: ExperimentKind = ExperimentKind.simulation
    seed: int = 1234
    output: Optional[Path] = None

    # simulation
    m_values: List[conint(ge=1, le=14)] = [2, 3, 4, 5, 6]
    epsilons: List[confloat(ge=0.0, le=0.5)] = [0.05, 0.15, 0.25, 0.35, 0.45]
    trees_per_cell: conint(ge=1) = 2000
    repetitions: conint(ge=1) = 5
    early_skip: bool = False

    # timing
    instances: conint(ge=1) = 5
    epsilon: confloat(ge=0.0, le=0.5) = 0.05

    # dataset
    dataset: Optional[Path] = None
    protocol: Protocol = Protocol.corruption
    corruption: CorruptionKind = CorruptionKind.missing
    levels: List[confloat(ge=0.0, le=100.0)] = [0, 20, 40, 60, 80]
    beta: confloat(ge=0.0, le=1.0) = 0.5
    per_column: bool = False
    bins: conint(ge=2) = 5
    s_values: List[confloat(ge=0.0)] = [0, 0.5, 1.5, 2.5, 3.5, 4.5, 5.5]
    gammas: List[confloat(ge=0.0, lt=0.5)] = [0, 0.15, 0.25, 0.35, 0.45]
    c_sep: List[confloat(gt=0.0)] = [0.05, 0.1, 0.2, 0.3, 0.4, 0.5]
    c_par: List[confloat(gt=0.0)] = [0.1, 0.25, 0.5, 0.75, 1.0]
    methods: List[Method] = list(Method)
    cv_repeats: conint(ge=1) = 10
    cv_folds: conint(ge=2) = 10
    train_fractions: List[int] = list(TRAIN_FRACTIONS)
    downsample_repeats: conint(ge=1) = 50

    @validator(*SWEEP_FIELDS, pre=True)
    def split_lists(cls, val):
        return parse_list(val, cast=lambda v: v)

    @validator("train_fractions", each_item=True)
    def known_fraction(cls, val):
        if val not in TRAIN_FRACTIONS:
            raise ValueError(f"training percentage {val} not in {TRAIN_FRACTIONS}")
        return val

    @classmethod
    def from_config(
        cls, cfg, kind: ExperimentKind, full_scale: bool = False, **overrides
    ) -> "ExperimentConfig":
        """Build from the block of a :class:`~skeptic.config.SkepticConfig`

        :param cfg: the loaded configuration
        :param kind: selects the block, ``[simulation]``, ``[timing]`` or
          ``[dataset]``
        :param full_scale: ignore the block's sample sizes and use the
          full-scale defaults
        :param overrides: values taking precedence over the block, such as
          command-line flags; `None` values are ignored

        """
        kind = ExperimentKind(kind)
        block = cfg.get_block(kind.value) if kind is not ExperimentKind.examples else {}
        settings: Dict[str, Any] = dict(block or {})
        if full_scale:
            settings.pop("trees_per_cell", None)
            settings.pop("repetitions", None)
        settings.update({k: v for k, v in overrides.items() if v is not None})
        known = set(cls.__fields__)
        unknown = sorted(set(settings) - known)
        if unknown:
            logger.debug(f"ignoring unknown [{kind.value}] settings: {unknown}")
        try:
            return cls(kind=kind, **{k: v for k, v in settings.items() if k in known})
        except ValueError as e:
            raise ConfigurationError(f"invalid [{kind.value}] settings: {e}") from e


class ExperimentResult:
    """Output of an experiment driver

    Instance attributes:

      :rows: :class:`pandas.DataFrame` with one row per trial

      :summary: :class:`pandas.DataFrame` aggregated over trials

      :audits: name of each audit mapped to whether it passed

      :metadata: free-form facts about the run, such as the seed and the
        confidence-interval construction

    """

    def __init__(
        self,
        rows: pd.DataFrame,
        summary: Optional[pd.DataFrame] = None,
        audits: Optional[Dict[str, bool]] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ):
        self.rows = rows
        self.summary = summary if summary is not None else rows
        self.audits = dict(audits or {})
        self.metadata = dict(metadata or {})
        self.metadata.setdefault("version", VERSTR)

    @property
    def passed(self) -> bool:
        return all(self.audits.values())

    def summary_document(self) -> Dict[str, Any]:
        return {
            "metadata": self.metadata,
            "audits": self.audits,
            "passed": self.passed,
            "summary": json.loads(self.summary.to_json(orient="records")),
        }

    def write(self, path: Path) -> List[Path]:
        """Write ``<path>.csv`` with the rows and ``<path>.json`` with the rest

        Missing parent directories are created.

        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        csv_path = path.with_suffix(".csv")
        json_path = path.with_suffix(".json")
        try:
            self.rows.to_csv(csv_path, index=False)
            json_path.write_text(
                json.dumps(self.summary_document(), indent=2, default=str)
            )
        except OSError as e:
            logger.error(f"could not write results to {path}: {e}")
            raise
        logger.info(f"wrote {csv_path} and {json_path}")
        return [csv_path, json_path]
