"""
Skeptical decisions under Hamming loss
--------------------------------------

Given a credal set over ``{0,1}^m``, a label vector is *maximal* when no other
vector has a strictly positive lower expected gain over it.  This module
computes the maximal set three ways:

  * :func:`maximal_set_alg1` uses the decomposition of Hamming loss into
    per-assignment checks.  For every subset of label indices (by size, then
    lexicographically) and every assignment of values to it, one lower
    expectation decides whether the vectors agreeing with the assignment beat
    those agreeing with its complement; the losers are cut from a ``2^m``
    bitset.  That is exactly ``3^m - 1`` checks.
  * :func:`maximal_set_naive` compares every ordered pair of vectors, for any
    :class:`LossMatrix`, with ``2^m (2^m - 1)`` checks.
  * :func:`outer_partial_vector` reads a partial vector off the marginal
    intervals; its completions always contain the maximal set.

For credal sets given as an explicit list of distributions,
:class:`FiniteCredalSet` also supports E-admissibility
(:func:`eadmissible_set_finite`).

Strict inequalities are tested against :const:`~skeptic.core.TOLERANCE`:
values within it of the threshold do not dominate.

"""
import itertools
import json
import logging
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from skeptic.core import (
    TOLERANCE,
    Assignment,
    BinaryVector,
    PartialVector,
    PredictionSet,
    ProbabilityInterval,
    check_enumerable,
    hamming_matrix,
    label_matrix,
)
from skeptic.signals import ContractViolation, DimensionMismatch
from skeptic.tree import CostVector, CredalOracle, ImpreciseBinaryTree, as_cost_array

logger = logging.getLogger(__name__)

ALG1_LIMIT = 14
NAIVE_LIMIT = 8


class CheckCounter:
    """Tally of the dominance checks a decision rule performed"""

    def __init__(self):
        self.checks = 0

    def add(self, n: int = 1) -> None:
        self.checks += int(n)

    def __repr__(self) -> str:
        return f"CheckCounter(checks={self.checks})"


class FiniteCredalSet(CredalOracle):
    """A credal set given by an explicit list of joint distributions

    Each row of `distributions` is a probability vector over the ``2^m``
    outcomes in mask order.  Lower expectations are minima over the rows,
    which is also the lower expectation of their convex hull.

    """

    def __init__(self, m: int, distributions: Sequence[Sequence[float]]):
        dists = np.array(distributions, dtype=float, ndmin=2)
        if dists.shape[1] != 1 << m:
            raise DimensionMismatch(
                f"distributions over {m} labels need {1 << m} entries,"
                f" got {dists.shape[1]}"
            )
        if np.any(dists < 0) or np.any(np.abs(dists.sum(axis=1) - 1.0) > TOLERANCE):
            raise ContractViolation(
                "every distribution must be non-negative and sum to 1"
            )
        dists.setflags(write=False)
        self.m = m
        self.distributions = dists

    @classmethod
    def from_trees(cls, trees: Sequence[ImpreciseBinaryTree]) -> "FiniteCredalSet":
        return cls(trees[0].m, [t.joint_distribution() for t in trees])

    @classmethod
    def load(cls, path: Union[str, Path]) -> "FiniteCredalSet":
        """Read ``{"m": 2, "distributions": [[...], ...]}``"""
        doc = json.loads(Path(path).read_text())
        return cls(int(doc["m"]), doc["distributions"])

    def lower_expectation(self, cost) -> Union[float, np.ndarray]:
        values = as_cost_array(cost, self.m)
        result = (values @ self.distributions.T).min(axis=-1)
        return float(result) if np.ndim(result) == 0 else result

    def member_distribution(self) -> np.ndarray:
        return self.distributions[0]

    def __len__(self) -> int:
        return len(self.distributions)


class LossMatrix:
    """Loss ``entries[prediction, truth]`` over all pairs of label vectors"""

    def __init__(self, m: int, entries: np.ndarray, name: str = "custom"):
        entries = np.asarray(entries, dtype=float)
        if entries.shape != (1 << m, 1 << m):
            raise DimensionMismatch(f"a loss over {m} labels is {1 << m} square")
        if np.any(np.diag(entries) != 0):
            raise ContractViolation("a correct prediction must cost nothing")
        entries.setflags(write=False)
        self.m = m
        self.entries = entries
        self.name = name

    @classmethod
    def hamming(cls, m: int) -> "LossMatrix":
        check_enumerable(m)
        return cls(m, hamming_matrix(m), "hamming")

    @classmethod
    def zero_one(cls, m: int) -> "LossMatrix":
        check_enumerable(m)
        size = 1 << m
        return cls(m, 1.0 - np.eye(size), "zero-one")

    def row(self, y: Union[BinaryVector, int]) -> CostVector:
        """Loss of predicting `y`, as a cost over the true outcome"""
        bits = y.bits if isinstance(y, BinaryVector) else int(y)
        return CostVector(self.m, self.entries[bits])


def precise_bayes_hamming(marginals: Sequence[float]) -> BinaryVector:
    """Bayes prediction under Hamming loss: label ``i`` is 1 iff ``p_i >= 1/2``"""
    p = np.asarray(marginals, dtype=float)
    if np.any(p < 0) or np.any(p > 1):
        raise ContractViolation("marginal probabilities must lie in [0, 1]")
    return BinaryVector.from_labels((p >= 0.5).astype(int))


def known_maximal(oracle: CredalOracle) -> BinaryVector:
    """A vector sure to be maximal: the Bayes prediction of one member

    A vector optimal for some distribution in the credal set has a
    non-positive lower gain against every other vector, so no check can
    remove it.

    """
    marginals = oracle.member_distribution() @ label_matrix(oracle.m)
    return precise_bayes_hamming(np.clip(marginals, 0.0, 1.0))


def lower_difference(
    oracle: CredalOracle,
    loss: LossMatrix,
    y: Union[BinaryVector, int],
    ref: Union[BinaryVector, int],
) -> float:
    """Lower expectation of ``loss(y, .) - loss(ref, .)``

    Negative values mean `y` is not shown to be worse than `ref`; `ref`
    dominates `y` exactly when this is positive.

    """
    return oracle.lower_expectation(loss.row(y) - loss.row(ref))


def dominance_check(oracle: CredalOracle, a: Assignment) -> bool:
    """Whether vectors agreeing with `a` dominate those agreeing with its complement

    The comparison is between vectors which are equal outside the indices of
    `a`.  It holds when the lower expected partial Hamming loss of the
    complement exceeds half the number of assigned labels.

    """
    if not len(a):
        raise ContractViolation("an assignment needs at least one index")
    cost = CostVector.partial_hamming(a.complement(), oracle.m)
    return oracle.lower_expectation(cost) > len(a) / 2 + TOLERANCE


def maximal_set_alg1(
    oracle: CredalOracle,
    *,
    early_skip: bool = False,
    known: Optional[Union[BinaryVector, int]] = None,
    counter: Optional[CheckCounter] = None,
    batched: bool = True,
) -> PredictionSet:
    """Exact maximal set under Hamming loss with ``3^m - 1`` checks

    :param oracle: any credal set able to compute lower expectations
    :param early_skip: skip an assignment when every vector it could remove
      is already gone; the result is the same, the check count lower
    :param known: a vector known to be maximal, e.g. from
      :func:`known_maximal`; the one assignment per index subset that would
      remove it is not checked
    :param counter: receives the number of checks performed
    :param batched: evaluate all assignments of one index subset in a single
      call to the oracle; otherwise one call per check

    """
    m = oracle.m
    check_enumerable(m, ALG1_LIMIT)
    counter = counter if counter is not None else CheckCounter()
    labels = label_matrix(m)
    keep = np.ones(1 << m, dtype=bool)
    if known is not None:
        known = known.bits if isinstance(known, BinaryVector) else int(known)
    for size in range(1, m + 1):
        # assignments of one subset cut disjoint regions, so a whole subset
        # can be decided before any of its removals are applied
        values = np.array(list(itertools.product((0, 1), repeat=size)))
        for subset in itertools.combinations(range(m), size):
            columns = labels[:, subset]
            costs = (columns[None, :, :] == values[:, None, :]).sum(axis=2)
            regions = (columns[None, :, :] != values[:, None, :]).all(axis=2)
            active = np.arange(len(values))
            if known is not None:
                active = active[~regions[:, known]]
            if early_skip:
                active = active[(regions[active] & keep).any(axis=1)]
            if not len(active):
                continue
            if batched:
                expectations = np.asarray(oracle.lower_expectation(costs[active]))
            else:
                expectations = np.array(
                    [oracle.lower_expectation(costs[k]) for k in active]
                )
            counter.add(len(active))
            winners = active[expectations > size / 2 + TOLERANCE]
            if len(winners):
                keep &= ~regions[winners].any(axis=0)
    logger.debug(f"maximality over {m} labels: {counter.checks} checks")
    return PredictionSet.from_bitset(keep)


def maximal_set_naive(
    oracle: CredalOracle,
    loss: Optional[LossMatrix] = None,
    *,
    counter: Optional[CheckCounter] = None,
    batched: bool = True,
) -> PredictionSet:
    """Maximal set by testing every ordered pair of vectors

    `y''` dominates `y'` when the lower expectation of
    ``loss(y', .) - loss(y'', .)`` is positive.  Hamming loss is used when
    `loss` is not given.

    """
    m = oracle.m
    check_enumerable(m, NAIVE_LIMIT)
    loss = loss or LossMatrix.hamming(m)
    if loss.m != m:
        raise DimensionMismatch(f"loss over {loss.m} labels, credal set {m}")
    counter = counter if counter is not None else CheckCounter()
    size = 1 << m
    dominated = np.zeros(size, dtype=bool)
    for candidate in range(size):
        challengers = np.arange(size) != candidate
        gains = loss.entries[candidate][None, :] - loss.entries[challengers]
        if batched:
            expectations = np.asarray(oracle.lower_expectation(gains))
        else:
            expectations = np.array([oracle.lower_expectation(g) for g in gains])
        counter.add(size - 1)
        dominated[candidate] = bool(np.any(expectations > TOLERANCE))
    return PredictionSet.from_bitset(~dominated)


def eadmissible_set_finite(
    credal: FiniteCredalSet, loss: Optional[LossMatrix] = None
) -> PredictionSet:
    """Vectors which minimise expected loss for at least one listed distribution"""
    m = credal.m
    check_enumerable(m, NAIVE_LIMIT)
    loss = loss or LossMatrix.hamming(m)
    expected = credal.distributions @ loss.entries.T
    best = expected.min(axis=1, keepdims=True)
    optimal = (expected <= best + TOLERANCE).any(axis=0)
    return PredictionSet.from_bitset(optimal)


def interval_decisions(lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    """Label decisions from arrays of marginal bounds, ``-1`` for abstention

    Works elementwise on arrays of any shape, e.g. ``(rows, labels)``.

    """
    lower, upper = np.asarray(lower, dtype=float), np.asarray(upper, dtype=float)
    decisions = np.full(lower.shape, -1, dtype=np.int8)
    decisions[upper < 0.5 - TOLERANCE] = 0
    decisions[lower > 0.5 + TOLERANCE] = 1
    return decisions


def outer_partial_vector(marginals: Sequence[ProbabilityInterval]) -> PartialVector:
    """Partial vector from marginal bounds on ``P(Y_i = 1)``

    Label ``i`` is 1 when its lower bound is above 1/2, 0 when its upper
    bound is below 1/2, and abstained on when 1/2 is inside the interval.

    """
    decisions = interval_decisions(
        [iv.lower for iv in marginals], [iv.upper for iv in marginals]
    )
    return PartialVector.from_labels([None if v < 0 else int(v) for v in decisions])
