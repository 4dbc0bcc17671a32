"""
Evaluation
----------

Metrics for partial predictions, the distance between an outer
approximation and the exact prediction set, label corruption and the data
splitters of the experimental protocols.

Incorrectness is the error rate over the decided labels (0 when nothing is
decided) and completeness the fraction of decided labels.  Besides the
single-prediction functions, :func:`score_predictions` scores whole arrays
of decisions in the ``-1``-for-abstention encoding used by the harness.

"""
from enum import Enum
import logging
from typing import Iterator, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, confloat, conint

from skeptic.core import BinaryVector, PartialVector, PredictionSet
from skeptic.dataset import MISSING, DiscreteDataset
from skeptic.signals import (
    ContainmentViolation,
    ContractViolation,
    DimensionMismatch,
    InsufficientSupport,
)
from skeptic.util import sub_seed

logger = logging.getLogger(__name__)

TRAIN_FRACTIONS = tuple(range(10, 100, 10))
Z_95 = 1.96


class MetricsRecord(BaseModel):
    """Scores of one partial prediction against the truth"""

    incorrectness: confloat(ge=0.0, le=1.0)
    completeness: confloat(ge=0.0, le=1.0)
    decided: conint(ge=0)
    abstained: conint(ge=0)

    class Config:
        frozen = True


class CorruptionKind(str, Enum):
    missing = "missing"
    reversing = "reversing"
    flipping = "flipping"


class CorruptionSpec(BaseModel):
    """How to damage a label matrix

    `percentage` of the (instance, label) cells are picked without
    replacement, over the whole matrix or, with `per_column`, within every
    label column.  Picked cells become missing, are reversed, or are replaced
    by a Bernoulli(`beta`) draw.

    """

    kind: CorruptionKind
    percentage: confloat(ge=0.0, le=100.0)
    beta: confloat(ge=0.0, le=1.0) = 0.5
    seed: Optional[int] = None
    per_column: bool = False

    class Config:
        frozen = True


def _check_dims(pred: PartialVector, truth: BinaryVector):
    if pred.m != truth.m:
        raise DimensionMismatch(f"{pred.m} labels vs {truth.m} labels")


def incorrectness(pred: PartialVector, truth: BinaryVector) -> float:
    _check_dims(pred, truth)
    decided = pred.decided
    if not decided:
        return 0.0
    wrong = sum(1 for i in decided if pred.label(i) != truth.label(i))
    return wrong / len(decided)


def completeness(pred: PartialVector) -> float:
    return len(pred.decided) / pred.m


def evaluate_prediction(pred: PartialVector, truth: BinaryVector) -> MetricsRecord:
    return MetricsRecord(
        incorrectness=incorrectness(pred, truth),
        completeness=completeness(pred),
        decided=len(pred.decided),
        abstained=pred.star_count,
    )


def score_predictions(
    decisions: np.ndarray, truth: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Incorrectness and completeness of every row of a decision matrix

    :param decisions: ``(rows, m)`` of 0, 1 and -1 for abstention
    :param truth: ``(rows, m)`` of 0 and 1

    """
    decisions, truth = np.atleast_2d(decisions), np.atleast_2d(truth)
    if decisions.shape != truth.shape:
        raise DimensionMismatch(f"decisions {decisions.shape} vs truth {truth.shape}")
    decided = decisions >= 0
    count = decided.sum(axis=1)
    wrong = (decided & (decisions != truth)).sum(axis=1)
    ic = np.divide(wrong, count, out=np.zeros(len(count)), where=count > 0)
    return ic, count / decisions.shape[1]


def set_distance(approx: PartialVector, exact: PredictionSet) -> int:
    """Number of vectors the approximation adds to the exact set"""
    if approx.m != exact.m:
        raise DimensionMismatch(f"{approx.m} labels vs {exact.m} labels")
    ones, stars = approx.ones, approx.stars
    outside = [x for x in exact.members if (x & ~stars) != ones]
    if outside:
        raise ContainmentViolation(
            f"{approx} does not contain"
            f" {format(outside[0], f'0{exact.m}b')} of the exact set"
        )
    return (1 << approx.star_count) - len(exact)


def bin_distances(
    ds: Sequence[int], m: int
) -> Tuple[float, float, float, float]:
    """Percentages of distances at 0, up to a quarter, up to half and beyond

    Quarters and halves are of the ``2^m`` vectors of the output space.

    """
    ds = np.asarray(ds, dtype=float)
    if not len(ds):
        raise ContractViolation("no distances to bin")
    size = 1 << m
    if np.any(ds < 0) or np.any(ds > size):
        raise ContractViolation(f"distances must lie in [0, {size}]")
    quarter, half = size / 4, size / 2
    counts = (
        np.sum(ds == 0),
        np.sum((ds > 0) & (ds <= quarter)),
        np.sum((ds > quarter) & (ds <= half)),
        np.sum(ds > half),
    )
    return tuple(100.0 * float(c) / len(ds) for c in counts)


def corrupt(
    labels: np.ndarray,
    spec: CorruptionSpec,
    rng: Union[int, np.random.Generator, None] = None,
) -> np.ndarray:
    """A damaged copy of a label matrix

    Exactly ``round(percentage * n * m / 100)`` cells are selected (per
    column: ``round(percentage * n / 100)`` in each).

    """
    rng = np.random.default_rng(spec.seed if rng is None else rng)
    result = np.array(labels, dtype=np.int8, copy=True, ndmin=2)
    n, m = result.shape
    if spec.per_column:
        count = int(round(spec.percentage * n / 100))
        rows = np.concatenate(
            [rng.choice(n, size=count, replace=False) for _ in range(m)]
        ).astype(np.int64)
        cols = np.repeat(np.arange(m), count)
    else:
        count = int(round(spec.percentage * n * m / 100))
        cells = rng.choice(n * m, size=count, replace=False)
        rows, cols = np.divmod(cells, m)
    if spec.kind is CorruptionKind.missing:
        result[rows, cols] = MISSING
    elif spec.kind is CorruptionKind.reversing:
        current = result[rows, cols]
        result[rows, cols] = np.where(current == MISSING, MISSING, 1 - current)
    else:
        result[rows, cols] = rng.binomial(1, spec.beta, size=len(rows))
    logger.debug(f"{spec.kind.value} corruption of {len(rows)} cells")
    return result


def check_support(data: DiscreteDataset, minimum: int = 2) -> None:
    """Every class observed for a label needs at least `minimum` instances"""
    for j, name in enumerate(data.label_names):
        column = data.labels[:, j]
        for c in (0, 1):
            seen = int(np.sum(column == c))
            if 0 < seen < minimum:
                raise InsufficientSupport(
                    f"label {name} has {seen} instance(s) of class {c},"
                    f" need {minimum}"
                )


def downsample_split(
    data: DiscreteDataset, x: int, repeat: int, seed: int
) -> Tuple[DiscreteDataset, DiscreteDataset]:
    """Seeded split with `x` percent of the rows for training

    :param x: 10, 20, ... or 90
    :param repeat: trial index; with `seed` it fixes the shuffle

    """
    if x not in TRAIN_FRACTIONS:
        raise ContractViolation(f"training percentage {x} not in {TRAIN_FRACTIONS}")
    x = int(x)
    check_support(data)
    rng = np.random.default_rng(sub_seed(seed, repeat, x))
    order = rng.permutation(data.n)
    cut = int(round(data.n * x / 100))
    return data.take(np.sort(order[:cut])), data.take(np.sort(order[cut:]))


def cross_validation_splits(
    n: int, repeats: int = 10, folds: int = 10, seed: int = 1234
) -> Iterator[Tuple[int, int, np.ndarray, np.ndarray]]:
    """Yield ``(repeat, fold, train, test)`` row indices

    Every repeat shuffles the rows with its own seed and cuts them into
    `folds` nearly equal parts; each part is the test set once.

    """
    if folds < 2 or folds > n:
        raise ContractViolation(f"cannot cut {n} rows into {folds} folds")
    for repeat in range(repeats):
        order = np.random.default_rng(sub_seed(seed, "cv", repeat)).permutation(n)
        parts = np.array_split(order, folds)
        for fold, test in enumerate(parts):
            train = np.concatenate(parts[:fold] + parts[fold + 1:])
            yield repeat, fold, np.sort(train), np.sort(test)


def confidence_halfwidth(values: Sequence[float], z: float = Z_95) -> float:
    """Normal-approximation half-width ``z * sd / sqrt(k)`` of a mean"""
    values = np.asarray(values, dtype=float)
    if len(values) < 2:
        return 0.0
    return float(z * values.std(ddof=1) / np.sqrt(len(values)))
