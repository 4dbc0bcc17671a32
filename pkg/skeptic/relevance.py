"""
Binary relevance
----------------

When each label is modelled on its own, the credal set over ``{0,1}^m`` is
every product of per-label distributions with ``P(Y_i = 1)`` inside its
interval.  Under Hamming loss the maximal set and the E-admissible set of that
credal set are the same partial vector, read straight off the intervals
(:func:`br_skeptical_prediction`).

The more conservative interval-dominance rule and the two point rules
Γ-minimax and Γ-minimin are also here.  Labels on which the point rules are
indifferent come back as ``*``.

"""
import logging
from typing import List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, validator

from skeptic.core import (
    TOLERANCE,
    PartialVector,
    PredictionSet,
    ProbabilityInterval,
    check_enumerable,
    label_matrix,
)
from skeptic.decision import outer_partial_vector
from skeptic.tree import ImpreciseBinaryTree

logger = logging.getLogger(__name__)

INTERVAL_DOMINANCE_LIMIT = 14


class MarginalIntervalModel(BaseModel):
    """Bounds on ``P(Y_i = 1)`` for every label, with labels independent"""

    intervals: List[ProbabilityInterval]

    class Config:
        frozen = True

    @validator("intervals")
    def not_empty(cls, v):
        if not v:
            raise ValueError("a model needs at least one label")
        return v

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> "MarginalIntervalModel":
        return cls(intervals=[ProbabilityInterval.from_pair(p) for p in pairs])

    @property
    def m(self) -> int:
        return len(self.intervals)

    @property
    def lower(self) -> np.ndarray:
        return np.array([iv.lower for iv in self.intervals])

    @property
    def upper(self) -> np.ndarray:
        return np.array([iv.upper for iv in self.intervals])

    def to_tree(self) -> ImpreciseBinaryTree:
        """The label tree with interval ``i`` on every node of level ``i``"""
        nodes = []
        for depth, iv in enumerate(self.intervals):
            nodes.extend([iv.as_pair()] * (1 << depth))
        return ImpreciseBinaryTree(self.m, nodes)


def br_skeptical_prediction(model: MarginalIntervalModel) -> PartialVector:
    """Maximal (and E-admissible) set under Hamming loss, as a partial vector"""
    return outer_partial_vector(model.intervals)


def _per_label_choice(cost_one: np.ndarray, cost_zero: np.ndarray) -> PartialVector:
    # ties within the tolerance stay undecided
    gap = cost_zero - cost_one
    labels = [1 if v > TOLERANCE else 0 if v < -TOLERANCE else None for v in gap]
    return PartialVector.from_labels(labels)


def gamma_minimax(model: MarginalIntervalModel) -> PartialVector:
    """Prediction with the best worst-case expected Hamming loss

    Predicting ``y_i = 1`` costs at most ``1 - lower_i`` and predicting 0 at
    most ``upper_i``.  Label ``i`` takes the cheaper value, ``*`` when both
    worst cases are equal.

    """
    return _per_label_choice(1.0 - model.lower, model.upper)


def gamma_minimin(model: MarginalIntervalModel) -> PartialVector:
    """Prediction with the best best-case expected Hamming loss

    Predicting ``y_i = 1`` costs at least ``1 - upper_i`` and predicting 0 at
    least ``lower_i``.

    """
    return _per_label_choice(1.0 - model.upper, model.lower)


def expectation_bounds(model: MarginalIntervalModel) -> Tuple[np.ndarray, np.ndarray]:
    """Lower and upper expected Hamming loss of every vector, in mask order

    With independent labels the bounds add up label by label: predicting
    ``y_i = 1`` costs ``P(Y_i = 0)``, which lies in ``[1 - up_i, 1 - lo_i]``,
    and predicting 0 costs ``P(Y_i = 1)``.

    """
    check_enumerable(model.m, INTERVAL_DOMINANCE_LIMIT)
    labels = label_matrix(model.m)
    lo, up = model.lower, model.upper
    lower = np.where(labels == 1, 1.0 - up, lo).sum(axis=1)
    upper = np.where(labels == 1, 1.0 - lo, up).sum(axis=1)
    return lower, upper


def interval_dominance_set(model: MarginalIntervalModel) -> PredictionSet:
    """Vectors whose best case is no worse than every other vector's worst case"""
    lower, upper = expectation_bounds(model)
    keep = lower <= upper.min() + TOLERANCE
    return PredictionSet.from_bitset(keep)
