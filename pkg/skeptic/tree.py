"""
Imprecise probabilistic trees
-----------------------------

A label chain ``Y1 -> Y2 -> ... -> Ym`` is a full binary tree of depth ``m``
whose internal nodes each carry a :class:`~skeptic.core.ProbabilityInterval`
for the event "the next label is 1", conditional on the path leading to the
node.  Choosing one probability inside every interval gives one joint
distribution; the tree stands for the set of all of them.

Nodes are kept breadth-first in a ``(2^m - 1, 2)`` array of ``[lower, upper]``
pairs.  Node ``k`` has its ``Y = 0`` child at ``2k + 1`` and its ``Y = 1``
child at ``2k + 2``; with the mask convention of :mod:`skeptic.core`, the
leaves below the last level come out in mask order.

Lower expectations are computed leaf to root: at each node, the two child
values are combined with whichever interval endpoint gives the smaller local
expectation.  The recursion works level by level on whole numpy slices, and
it accepts a batch of cost vectors (any array whose last axis has length
``2^m``), which is what lets the decision rules evaluate many comparisons in
one pass.

"""
import logging
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, conint

from skeptic.core import (
    Assignment,
    BinaryVector,
    ProbabilityInterval,
    check_enumerable,
    label_matrix,
)
from skeptic.signals import (
    ContractViolation,
    DimensionMismatch,
    NonDegenerateTree,
)

logger = logging.getLogger(__name__)

ORACLE_LIMIT = 4
"""Largest depth the extreme-point oracle enumerates (2^(2^m - 1) choices)"""


class CostVector:
    """A real value for every outcome in ``{0,1}^m``, indexed by mask"""

    __slots__ = ("m", "costs")

    def __init__(self, m: int, costs: Sequence[float]):
        costs = np.asarray(costs, dtype=float)
        if costs.shape != (1 << m,):
            raise DimensionMismatch(
                f"a cost vector over {m} labels needs {1 << m} entries,"
                f" got shape {costs.shape}"
            )
        if not np.all(np.isfinite(costs)):
            raise ValueError("cost vectors must be finite")
        self.m = m
        self.costs = costs

    @classmethod
    def zero(cls, m: int) -> "CostVector":
        return cls(m, np.zeros(1 << m))

    @classmethod
    def constant(cls, m: int, k: float) -> "CostVector":
        return cls(m, np.full(1 << m, float(k)))

    @classmethod
    def indicator(cls, i: int, m: int, value: int = 1) -> "CostVector":
        """1 where label `i` (1-based) equals `value`, else 0"""
        if not 1 <= i <= m:
            raise ContractViolation(f"label index {i} outside 1..{m}")
        return cls(m, label_matrix(m)[:, i - 1] == value)

    @classmethod
    def hamming(cls, y: BinaryVector) -> "CostVector":
        """Hamming loss of predicting `y`, for every true outcome"""
        return cls(y.m, (label_matrix(y.m) != np.array(y.labels)).sum(axis=1))

    @classmethod
    def partial_hamming(cls, b: Assignment, m: int) -> "CostVector":
        """Hamming loss of the assignment `b`, restricted to its labels"""
        if b.indices and b.indices[-1] > m:
            raise ContractViolation(f"index {b.indices[-1]} outside 1..{m}")
        columns = label_matrix(m)[:, [i - 1 for i in b.indices]]
        return cls(m, (columns != np.array(b.values)).sum(axis=1))

    def __neg__(self) -> "CostVector":
        return CostVector(self.m, -self.costs)

    def __add__(self, other: "CostVector") -> "CostVector":
        return CostVector(self.m, self.costs + as_cost_array(other, self.m))

    def __sub__(self, other: "CostVector") -> "CostVector":
        return CostVector(self.m, self.costs - as_cost_array(other, self.m))

    def __len__(self) -> int:
        return len(self.costs)

    def __repr__(self) -> str:
        return f"CostVector(m={self.m}, costs={self.costs.tolist()})"


def as_cost_array(cost: Union[CostVector, Sequence, np.ndarray], m: int) -> np.ndarray:
    """Float array view of one cost vector or a batch of them"""
    if isinstance(cost, CostVector):
        if cost.m != m:
            raise DimensionMismatch(f"cost over {cost.m} labels, model has {m}")
        return cost.costs
    values = np.asarray(cost, dtype=float)
    if values.ndim == 0 or values.shape[-1] != 1 << m:
        raise DimensionMismatch(
            f"cost arrays over {m} labels need a last axis of {1 << m},"
            f" got shape {values.shape}"
        )
    return values


def _scalar(result: np.ndarray):
    return float(result) if np.ndim(result) == 0 else result


class CredalOracle:
    """Abstract source of lower expectations over ``{0,1}^m``

    Subclasses must:
      * set the instance attribute `m`
      * define :meth:`lower_expectation` for a single cost vector and for a
        batch of them stacked along leading axes
      * define :meth:`member_distribution` to be usable with
        :func:`skeptic.decision.known_maximal`

    """

    m: int

    def lower_expectation(self, cost) -> Union[float, np.ndarray]:
        raise NotImplementedError

    def upper_expectation(self, cost) -> Union[float, np.ndarray]:
        """Upper expectation by duality, ``-E[-cost]``"""
        return _scalar(-np.asarray(self.lower_expectation(-as_cost_array(cost, self.m))))

    def member_distribution(self) -> np.ndarray:
        """One joint distribution of the set, in mask order"""
        raise NotImplementedError


class TreeDocument(BaseModel):
    """The JSON layout of a tree: ``{"m": 2, "nodes": [[lo, up], ...]}``"""

    m: conint(ge=1)
    nodes: List[Tuple[float, float]]


class ImpreciseBinaryTree(CredalOracle):
    """A full binary label tree with one probability interval per node

    Instance attributes:

      :m: depth, i.e. the number of labels

      :nodes: read-only ``(2^m - 1, 2)`` array of ``[lower, upper]``
        probabilities of the branch to 1, breadth-first

    """

    def __init__(self, m: int, nodes: Union[Sequence[Sequence[float]], np.ndarray]):
        nodes = np.array(nodes, dtype=float)
        if m < 1 or nodes.shape != ((1 << m) - 1, 2):
            raise DimensionMismatch(
                f"a depth-{m} tree needs {(1 << m) - 1} [lower, upper] nodes,"
                f" got shape {nodes.shape}"
            )
        lower, upper = nodes[:, 0], nodes[:, 1]
        if np.any(lower < 0) or np.any(upper > 1) or np.any(lower > upper):
            bad = int(np.flatnonzero((lower < 0) | (upper > 1) | (lower > upper))[0])
            raise ContractViolation(
                f"node {bad} has an invalid interval {nodes[bad].tolist()}"
            )
        nodes.setflags(write=False)
        self.m = m
        self.nodes = nodes

    @classmethod
    def from_intervals(
        cls, m: int, intervals: Sequence[ProbabilityInterval]
    ) -> "ImpreciseBinaryTree":
        return cls(m, [iv.as_pair() for iv in intervals])

    @classmethod
    def precise(cls, m: int, probabilities: Sequence[float]) -> "ImpreciseBinaryTree":
        """A degenerate tree from one branch probability per node"""
        p = np.asarray(probabilities, dtype=float)
        return cls(m, np.stack((p, p), axis=1))

    @classmethod
    def from_json(cls, text: str) -> "ImpreciseBinaryTree":
        doc = TreeDocument.parse_raw(text)
        return cls(doc.m, doc.nodes)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "ImpreciseBinaryTree":
        return cls.from_json(Path(path).read_text())

    def to_json(self) -> str:
        return TreeDocument(m=self.m, nodes=self.nodes.tolist()).json()

    def dump(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.write_text(self.to_json())
        return path

    @property
    def lower(self) -> np.ndarray:
        return self.nodes[:, 0]

    @property
    def upper(self) -> np.ndarray:
        return self.nodes[:, 1]

    @property
    def degenerate(self) -> bool:
        return bool(np.array_equal(self.lower, self.upper))

    def interval(self, k: int) -> ProbabilityInterval:
        lower, upper = self.nodes[k]
        return ProbabilityInterval(lower=lower, upper=upper)

    def intervals(self) -> List[ProbabilityInterval]:
        return [self.interval(k) for k in range(len(self.nodes))]

    @staticmethod
    def level(depth: int) -> slice:
        """Slice of the node array holding the nodes at `depth` (root is 0)"""
        return slice((1 << depth) - 1, (1 << (depth + 1)) - 1)

    def lower_expectation(self, cost) -> Union[float, np.ndarray]:
        values = as_cost_array(cost, self.m)
        for depth in range(self.m - 1, -1, -1):
            lo = self.lower[self.level(depth)]
            up = self.upper[self.level(depth)]
            v0, v1 = values[..., 0::2], values[..., 1::2]
            gap = v1 - v0
            # on ties the lower endpoint wins; the value is the same
            values = v0 + np.minimum(lo * gap, up * gap)
        return _scalar(values[..., 0])

    def marginal_interval(self, i: int) -> ProbabilityInterval:
        """Bounds on ``P(Y_i = 1)`` for label `i` (1-based)"""
        indicator = CostVector.indicator(i, self.m)
        lower = min(max(self.lower_expectation(indicator), 0.0), 1.0)
        upper = min(max(self.upper_expectation(indicator), lower), 1.0)
        return ProbabilityInterval(lower=lower, upper=upper)

    def marginal_intervals(self) -> List[ProbabilityInterval]:
        return [self.marginal_interval(i) for i in range(1, self.m + 1)]

    def _require_degenerate(self):
        if not self.degenerate:
            raise NonDegenerateTree(
                "joint probabilities are only defined on a precise tree"
            )

    def joint_probability(self, y: BinaryVector) -> float:
        """Product of the branch probabilities along the path of `y`"""
        self._require_degenerate()
        if y.m != self.m:
            raise DimensionMismatch(f"{y.m} labels, tree has depth {self.m}")
        k, prob = 0, 1.0
        for value in y.labels:
            p = self.lower[k]
            prob *= p if value else 1.0 - p
            k = 2 * k + 1 + value
        return prob

    def member_distribution(self) -> np.ndarray:
        # the tree with every node at its interval midpoint
        midpoint = ImpreciseBinaryTree.precise(self.m, self.nodes.mean(axis=1))
        return midpoint.joint_distribution()

    def joint_distribution(self) -> np.ndarray:
        """Leaf probabilities of a precise tree, in mask order"""
        self._require_degenerate()
        probs = np.ones(1)
        for depth in range(self.m):
            p = self.lower[self.level(depth)]
            probs = np.stack((probs * (1.0 - p), probs * p), axis=-1).reshape(-1)
        return probs

    def __repr__(self) -> str:
        return f"ImpreciseBinaryTree(m={self.m}, nodes={self.nodes.tolist()})"


def lower_expectation(tree: CredalOracle, cost) -> Union[float, np.ndarray]:
    return tree.lower_expectation(cost)


def upper_expectation(tree: CredalOracle, cost) -> Union[float, np.ndarray]:
    return tree.upper_expectation(cost)


def marginal_interval(tree: ImpreciseBinaryTree, i: int) -> ProbabilityInterval:
    return tree.marginal_interval(i)


def joint_probability(tree: ImpreciseBinaryTree, y: BinaryVector) -> float:
    return tree.joint_probability(y)


def generate_tree(
    m: int, epsilon: float, rng: Union[int, np.random.Generator, None] = None
) -> ImpreciseBinaryTree:
    """Draw a random tree with imprecision `epsilon`

    Every node gets ``theta ~ U[0, 1]`` and the interval
    ``[max(0, theta - epsilon), min(theta + epsilon, 1)]``.  Two calls with
    the same seed draw the same thetas, so trees generated at different
    imprecision levels from one seed are nested.

    """
    if not 0.0 <= epsilon <= 0.5:
        raise ContractViolation(f"epsilon {epsilon} outside [0, 0.5]")
    rng = np.random.default_rng(rng)
    theta = rng.uniform(0.0, 1.0, size=(1 << m) - 1)
    nodes = np.stack(
        (np.clip(theta - epsilon, 0.0, 1.0), np.clip(theta + epsilon, 0.0, 1.0)),
        axis=1,
    )
    return ImpreciseBinaryTree(m, nodes)


def extreme_point_oracle(tree: ImpreciseBinaryTree, cost) -> Union[float, np.ndarray]:
    """Lower expectation by enumerating every choice of interval endpoints

    Independent of the recursion in :meth:`ImpreciseBinaryTree.lower_expectation`
    and only meant to check it; limited to depth :const:`ORACLE_LIMIT`.

    """
    check_enumerable(tree.m, ORACLE_LIMIT)
    values = as_cost_array(cost, tree.m)
    n_nodes = len(tree.nodes)
    choices = (np.arange(1 << n_nodes)[:, None] >> np.arange(n_nodes)) & 1
    p = np.where(choices == 1, tree.upper, tree.lower)
    probs = np.ones((len(p), 1))
    for depth in range(tree.m):
        branch = p[:, ImpreciseBinaryTree.level(depth)]
        probs = np.stack(
            (probs * (1.0 - branch), probs * branch), axis=-1
        ).reshape(len(p), -1)
    expectations = np.tensordot(values, probs, axes=([-1], [1]))
    return _scalar(expectations.min(axis=-1))
