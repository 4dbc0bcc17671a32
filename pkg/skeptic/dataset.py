"""
Discrete multi-label datasets
-----------------------------

The classifier needs discrete features.  A dataset is read from CSV with
:mod:`pandas`: one header row, feature columns first, then one column per
label whose name starts with ``y:``.  Label cells hold ``0``, ``1`` or ``*``
for a missing label.  Features which are all non-negative integers are kept
as they are; otherwise every feature column is discretized into equal-width
bins on load.

In memory, labels are an ``int8`` matrix with ``-1`` marking missing cells.

"""
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from skeptic.signals import ContractViolation, DatasetSchemaError

logger = logging.getLogger(__name__)

LABEL_PREFIX = "y:"
MISSING = -1
MISSING_TEXT = "*"
DEFAULT_BINS = 5


def apply_bins(features: np.ndarray, edges: Sequence[np.ndarray]) -> np.ndarray:
    """Bin real-valued rows with previously computed per-feature edges

    Values below the first edge land in bin 0 and values above the last one
    in the top bin.

    """
    features = np.atleast_2d(np.asarray(features, dtype=float))
    if features.shape[1] != len(edges):
        raise ContractViolation(
            f"{features.shape[1]} feature columns but {len(edges)} edge sets"
        )
    binned = np.empty(features.shape, dtype=np.int64)
    for i, column_edges in enumerate(edges):
        inner = np.asarray(column_edges, dtype=float)[1:-1]
        binned[:, i] = np.searchsorted(inner, features[:, i], side="right")
    return binned


def discretize(
    features: np.ndarray, z: int = DEFAULT_BINS
) -> Tuple[np.ndarray, List[np.ndarray]]:
    """Equal-width binning of every column between its minimum and maximum

    :param features: ``(n, d)`` real matrix, or a single column
    :param z: number of bins, at least 2

    Returns the binned matrix and the edges of each column.  A constant
    column becomes a single bin 0.

    """
    if z < 2:
        raise ContractViolation(f"need at least 2 bins, got {z}")
    values = np.asarray(features, dtype=float)
    column = values.ndim == 1
    values = values.reshape(-1, 1) if column else values
    if not np.all(np.isfinite(values)):
        raise ContractViolation("features must be finite to be discretized")
    edges = []
    for lo, hi in zip(values.min(axis=0), values.max(axis=0)):
        if hi == lo:
            edges.append(np.array([lo, hi]))
        else:
            edges.append(np.linspace(lo, hi, z + 1))
    binned = apply_bins(values, edges)
    return (binned[:, 0] if column else binned), edges


class DiscreteDataset:
    """Discrete features and partially observed binary labels

    Instance attributes:

      :features: ``(n, d)`` integer matrix, column ``i`` in ``0..arities[i]-1``

      :labels: ``(n, m)`` ``int8`` matrix of 0, 1 and :const:`MISSING`

      :arities: number of values each feature may take

      :edges: bin edges per feature when the features were discretized, else
        `None`

    """

    def __init__(
        self,
        features: np.ndarray,
        labels: np.ndarray,
        feature_names: Optional[Sequence[str]] = None,
        label_names: Optional[Sequence[str]] = None,
        arities: Optional[Sequence[int]] = None,
        edges: Optional[Sequence[np.ndarray]] = None,
    ):
        features = np.atleast_2d(np.asarray(features, dtype=np.int64))
        labels = np.atleast_2d(np.asarray(labels, dtype=np.int8))
        if features.shape[0] != labels.shape[0]:
            raise ContractViolation(
                f"{features.shape[0]} feature rows but {labels.shape[0]} label rows"
            )
        if np.any(features < 0):
            raise ContractViolation("discrete feature values must be non-negative")
        if not np.isin(labels, (MISSING, 0, 1)).all():
            raise ContractViolation("labels must be 0, 1 or missing")
        if arities is None:
            arities = features.max(axis=0) + 1 if len(features) else [1] * features.shape[1]
        arities = np.asarray(arities, dtype=np.int64)
        if np.any(features >= arities):
            raise ContractViolation("a feature value exceeds its declared domain")
        self.features = features
        self.labels = labels
        self.arities = arities
        self.edges = list(edges) if edges is not None else None
        self.feature_names = list(
            feature_names or [f"x{i}" for i in range(1, self.d + 1)]
        )
        self.label_names = list(
            label_names or [f"l{j}" for j in range(1, self.m + 1)]
        )

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def d(self) -> int:
        return self.features.shape[1]

    @property
    def m(self) -> int:
        return self.labels.shape[1]

    def __len__(self) -> int:
        return self.n

    def take(self, rows: Sequence[int]) -> "DiscreteDataset":
        """The subset of rows `rows`, with the same feature domains"""
        rows = np.asarray(rows, dtype=np.int64)
        return DiscreteDataset(
            self.features[rows],
            self.labels[rows],
            self.feature_names,
            self.label_names,
            self.arities,
            self.edges,
        )

    def with_labels(self, labels: np.ndarray) -> "DiscreteDataset":
        return DiscreteDataset(
            self.features,
            labels,
            self.feature_names,
            self.label_names,
            self.arities,
            self.edges,
        )

    @classmethod
    def from_frame(
        cls, frame: pd.DataFrame, bins: int = DEFAULT_BINS
    ) -> "DiscreteDataset":
        """Build from a frame of text cells laid out like the CSV format

        Unless every feature cell holds a non-negative integer, the feature
        columns are discretized into `bins` equal-width bins.

        """
        label_cols = [c for c in frame.columns if str(c).startswith(LABEL_PREFIX)]
        feature_cols = [c for c in frame.columns if c not in label_cols]
        if not label_cols:
            raise DatasetSchemaError(f"no label columns (prefix {LABEL_PREFIX!r})")
        if not feature_cols:
            raise DatasetSchemaError("no feature columns")
        first_label = list(frame.columns).index(label_cols[0])
        if any(list(frame.columns).index(c) > first_label for c in feature_cols):
            raise DatasetSchemaError("feature columns must precede label columns")

        labels = np.empty((len(frame), len(label_cols)), dtype=np.int8)
        for j, col in enumerate(label_cols):
            cells = frame[col].astype(str).str.strip()
            bad = ~cells.isin(["0", "1", MISSING_TEXT])
            if bad.any():
                row = int(np.flatnonzero(bad.to_numpy())[0])
                raise DatasetSchemaError(
                    f"row {row + 1}: label {col!r} is {cells.iloc[row]!r},"
                    f" expected 0, 1 or {MISSING_TEXT}"
                )
            labels[:, j] = cells.map({"0": 0, "1": 1, MISSING_TEXT: MISSING}).to_numpy()

        numeric = frame[feature_cols].apply(pd.to_numeric, errors="coerce")
        invalid = numeric.isna().to_numpy()
        if invalid.any():
            row, col = (int(v[0]) for v in np.nonzero(invalid))
            raise DatasetSchemaError(
                f"row {row + 1}: feature {feature_cols[col]!r} is"
                f" {frame[feature_cols[col]].iloc[row]!r}, not a number"
            )
        values = numeric.to_numpy(dtype=float)
        integral = np.all(values == np.round(values)) and np.all(values >= 0)
        edges = None
        if not integral:
            values, edges = discretize(values, bins)
            logger.debug(f"discretized {len(feature_cols)} features into bins")
        return cls(
            values.astype(np.int64),
            labels,
            [str(c) for c in feature_cols],
            [str(c)[len(LABEL_PREFIX):] for c in label_cols],
            edges=edges,
            arities=[len(e) - 1 for e in edges] if edges is not None else None,
        )

    @classmethod
    def from_csv(
        cls, path: Union[str, Path], bins: int = DEFAULT_BINS
    ) -> "DiscreteDataset":
        path = Path(path)
        try:
            frame = pd.read_csv(path, dtype=str, keep_default_na=False)
        except (OSError, pd.errors.ParserError) as e:
            raise DatasetSchemaError(f"cannot read dataset {path}: {e}") from e
        dataset = cls.from_frame(frame, bins)
        logger.info(
            f"read {path}: {dataset.n} rows, {dataset.d} features,"
            f" {dataset.m} labels"
        )
        return dataset

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.features, columns=self.feature_names)
        for j, name in enumerate(self.label_names):
            column = self.labels[:, j]
            frame[LABEL_PREFIX + name] = np.where(
                column == MISSING, MISSING_TEXT, column.astype(str)
            )
        return frame

    def to_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        self.to_frame().to_csv(path, index=False)
        return path

    def __repr__(self) -> str:
        return f"DiscreteDataset(n={self.n}, d={self.d}, m={self.m})"


def make_synthetic_dataset(
    n: int = 500,
    m: int = 6,
    d: int = 8,
    seed: int = 1234,
    bins: int = DEFAULT_BINS,
) -> DiscreteDataset:
    """A reproducible dataset with correlated labels and informative features

    Labels are thresholded from two shared latent factors plus noise, so
    they are correlated.  Features are noisy linear mixtures of the labels
    and the latent factors, discretized into `bins` equal-width bins.

    """
    rng = np.random.default_rng(seed)
    latent = rng.normal(size=(n, 2))
    loadings = rng.normal(size=(2, m))
    offsets = rng.normal(scale=0.5, size=m)
    scores = latent @ loadings + offsets + rng.normal(scale=0.75, size=(n, m))
    labels = (scores > 0).astype(np.int8)
    mixing = rng.normal(size=(m, d))
    raw = (
        labels @ mixing
        + latent @ rng.normal(scale=0.5, size=(2, d))
        + rng.normal(scale=1.0, size=(n, d))
    )
    features, edges = discretize(raw, bins)
    return DiscreteDataset(
        features,
        labels,
        arities=[len(e) - 1 for e in edges],
        edges=edges,
    )
