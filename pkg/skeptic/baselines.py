"""
Precise baselines
-----------------

Set-valued predictors which start from precise marginals ``P(Y_i = 1)``:

  * the rejection rule abstains on a label whose probability is within
    `gamma` of one half;
  * partial abstention minimises the expected Hamming loss on the decided
    labels plus a penalty on the number of abstentions.  The penalty is
    either linear (``SEP``: ``a * c``) or concave (``PAR``:
    ``a * m / (m + a) * c``).

The ``*_decisions`` functions work on whole ``(rows, labels)`` arrays and
return ``int8`` decisions with ``-1`` for abstention; the named predictors
wrap them for a single :class:`PreciseMarginals`.

"""
from enum import Enum
import logging
from typing import List

import numpy as np
from pydantic import BaseModel, confloat

from skeptic.core import BinaryVector, PartialVector
from skeptic.signals import ContractViolation, DimensionMismatch

logger = logging.getLogger(__name__)

PAR_TIE = 1e-12


class PreciseMarginals(BaseModel):
    """Point estimates of ``P(Y_i = 1)`` for every label"""

    p: List[confloat(ge=0.0, le=1.0)]

    class Config:
        frozen = True

    @property
    def m(self) -> int:
        return len(self.p)

    def array(self) -> np.ndarray:
        return np.array(self.p, dtype=float)


class PenaltyKind(str, Enum):
    SEP = "sep"
    PAR = "par"


class AbstentionPenalty(BaseModel):
    """Cost of abstaining on `a` out of `m` labels"""

    kind: PenaltyKind
    c: confloat(gt=0.0)

    class Config:
        frozen = True

    def __call__(self, a, m: int):
        a = np.asarray(a, dtype=float)
        if self.kind is PenaltyKind.SEP:
            cost = a * self.c
        else:
            cost = a * m / (m + a) * self.c
        return float(cost) if cost.ndim == 0 else cost


def _bayes(p: np.ndarray) -> np.ndarray:
    return (p >= 0.5).astype(np.int8)


def _partial(decisions: np.ndarray) -> PartialVector:
    return PartialVector.from_labels([None if v < 0 else int(v) for v in decisions])


def reject_decisions(p: np.ndarray, gamma: float) -> np.ndarray:
    """1 above ``1/2 + gamma``, 0 at or below ``1/2 - gamma``, else abstain"""
    if not 0.0 <= gamma < 0.5:
        raise ContractViolation(f"rejection threshold {gamma} outside [0, 0.5)")
    p = np.asarray(p, dtype=float)
    decisions = np.full(p.shape, -1, dtype=np.int8)
    decisions[p <= 0.5 - gamma] = 0
    decisions[p > 0.5 + gamma] = 1
    return decisions


def sep_decisions(p: np.ndarray, c: float) -> np.ndarray:
    """Abstain exactly where ``c < min(p, 1 - p)``"""
    if c <= 0:
        raise ContractViolation(f"abstention cost {c} must be positive")
    p = np.asarray(p, dtype=float)
    decisions = _bayes(p)
    decisions[c < np.minimum(p, 1.0 - p)] = -1
    return decisions


def par_decisions(p: np.ndarray, c: float) -> np.ndarray:
    """Abstain on the ``k`` most uncertain labels, ``k`` minimising the risk

    The risk of abstaining on the top ``k`` is the summed uncertainty of the
    other labels plus the concave penalty of ``k``.  Ties go to the smallest
    ``k``.

    """
    if c <= 0:
        raise ContractViolation(f"abstention cost {c} must be positive")
    p = np.atleast_2d(np.asarray(p, dtype=float))
    rows, m = p.shape
    uncertainty = np.minimum(p, 1.0 - p)
    order = np.argsort(-uncertainty, axis=1, kind="stable")
    ranked = np.take_along_axis(uncertainty, order, axis=1)
    kept = np.concatenate(
        (np.zeros((rows, 1)), np.cumsum(ranked, axis=1)), axis=1
    )
    penalty = AbstentionPenalty(kind=PenaltyKind.PAR, c=c)
    risk = uncertainty.sum(axis=1, keepdims=True) - kept + penalty(np.arange(m + 1), m)
    best = (risk <= risk.min(axis=1, keepdims=True) + PAR_TIE).argmax(axis=1)
    rank = np.empty_like(order)
    np.put_along_axis(rank, order, np.broadcast_to(np.arange(m), order.shape), axis=1)
    decisions = _bayes(p)
    decisions[rank < best[:, None]] = -1
    return decisions


def reject_predict(p: PreciseMarginals, gamma: float) -> PartialVector:
    return _partial(reject_decisions(p.array(), gamma))


def abstain_sep(p: PreciseMarginals, c: float) -> PartialVector:
    return _partial(sep_decisions(p.array(), c))


def abstain_par(p: PreciseMarginals, c: float) -> PartialVector:
    return _partial(par_decisions(p.array(), c)[0])


def generalized_loss(
    truth: BinaryVector, pred: PartialVector, penalty: AbstentionPenalty
) -> float:
    """Hamming loss on the decided labels plus the abstention penalty"""
    if truth.m != pred.m:
        raise DimensionMismatch(f"{truth.m} labels vs {pred.m} labels")
    mistakes = sum(
        1 for i in pred.decided if pred.label(i) != truth.label(i)
    )
    return mistakes + penalty(pred.star_count, pred.m)


def expected_generalized_risk(
    p: PreciseMarginals, pred: PartialVector, penalty: AbstentionPenalty
) -> float:
    """Expected generalized loss when labels are independent with marginals `p`"""
    if p.m != pred.m:
        raise DimensionMismatch(f"{p.m} labels vs {pred.m} labels")
    probs = p.array()
    risk = 0.0
    for i in pred.decided:
        q = probs[i - 1]
        risk += 1.0 - q if pred.label(i) == 1 else q
    return risk + penalty(pred.star_count, pred.m)
