"""
Naive credal classifier
-----------------------

One naive credal classifier per label turns count tables into bounds on
``P(Y_j = 1 | x)``.  The conditional probability of feature value ``v``
given class ``c`` is only known to lie in

  ``[n(v, c) / (N_c + s), (n(v, c) + s) / (N_c + s)]``

where ``n(v, c)`` counts training rows of class ``c`` with that value,
``N_c`` counts rows of class ``c`` and ``s >= 0`` sets the imprecision.  The
class prior is the precise empirical frequency.  The posterior bounds are

  * lower: ``P1 * prod(l1) / (P1 * prod(l1) + P0 * prod(u0))``
  * upper: ``P1 * prod(u1) / (P1 * prod(u1) + P0 * prod(l0))``

with ``l`` and ``u`` the lower and upper conditionals.  Products are taken in
log space.  With ``s = 0`` both bounds equal the naive Bayes posterior.

Rows with a missing value for label ``j`` are left out of label ``j``'s
tables only.  A label lacking training rows of either class is *flagged*
and gets the vacuous interval ``[0, 1]`` while ``s > 0``.  At ``s = 0`` it
gets its empirical frequency, as the naive Bayes classifier does.

"""
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, confloat

from skeptic.core import ProbabilityInterval
from skeptic.dataset import MISSING, DiscreteDataset, apply_bins, discretize
from skeptic.signals import ContractViolation, IndexOutOfRange

logger = logging.getLogger(__name__)

__all__ = [
    "NccModel",
    "apply_bins",
    "discretize",
    "fit",
    "marginal_interval",
]


class NccDocument(BaseModel):
    """JSON layout of a fitted classifier"""

    s: confloat(ge=0.0)
    class_counts: List[List[int]]
    feature_counts: List[List[List[List[int]]]]
    arities: List[int]
    edges: Optional[List[List[float]]] = None
    label_names: List[str]
    feature_names: List[str]


class NccModel:
    """Count tables for every label, plus the imprecision `s`

    Instance attributes:

      :class_counts: ``(m, 2)`` rows of class 0 and 1 per label

      :feature_counts: ``(m, 2, d, A)`` rows per label, class, feature and
        value, where ``A`` is the largest feature arity

      :s: imprecision; 0 gives a precise naive Bayes classifier

      :flagged: indices (0-based) of labels lacking a class

    """

    def __init__(
        self,
        class_counts: np.ndarray,
        feature_counts: np.ndarray,
        s: float,
        arities: Sequence[int],
        edges: Optional[Sequence[Sequence[float]]] = None,
        label_names: Optional[Sequence[str]] = None,
        feature_names: Optional[Sequence[str]] = None,
    ):
        if s < 0:
            raise ContractViolation(f"imprecision s={s} must be non-negative")
        self.class_counts = np.asarray(class_counts, dtype=np.int64)
        self.feature_counts = np.asarray(feature_counts, dtype=np.int64)
        self.s = float(s)
        self.arities = np.asarray(arities, dtype=np.int64)
        self.edges = [np.asarray(e, dtype=float) for e in edges] if edges else None
        self.label_names = list(label_names or [f"l{j}" for j in range(1, self.m + 1)])
        self.feature_names = list(
            feature_names or [f"x{i}" for i in range(1, self.d + 1)]
        )
        self.flagged = [int(j) for j in np.flatnonzero((self.class_counts == 0).any(axis=1))]

    @property
    def m(self) -> int:
        return self.class_counts.shape[0]

    @property
    def d(self) -> int:
        return self.feature_counts.shape[2]

    @classmethod
    def fit(cls, data: DiscreteDataset, s: float = 1.0) -> "NccModel":
        """Count the training data

        :param data: discrete features and labels; missing labels are skipped
          label by label
        :param s: imprecision of the conditional probabilities

        """
        width = int(data.arities.max()) if data.d else 1
        onehot = data.features[:, :, None] == np.arange(width)[None, None, :]
        classes = np.stack(
            (data.labels == 0, data.labels == 1), axis=-1
        ).astype(np.int64)
        class_counts = classes.sum(axis=0)
        feature_counts = np.einsum("njc,nda->jcda", classes, onehot.astype(np.int64))
        model = cls(
            class_counts,
            feature_counts,
            s,
            data.arities,
            data.edges,
            data.label_names,
            data.feature_names,
        )
        observed = (data.labels != MISSING).sum(axis=0)
        logger.debug(f"fitted {model.m} labels on {observed.tolist()} observed rows")
        for j in model.flagged:
            logger.warning(
                f"label {model.label_names[j]} lacks a class in training;"
                " its predictions will be vacuous when s > 0"
            )
        return model

    def with_s(self, s: float) -> "NccModel":
        """The same counts with a different imprecision"""
        return NccModel(
            self.class_counts,
            self.feature_counts,
            s,
            self.arities,
            self.edges,
            self.label_names,
            self.feature_names,
        )

    def _query_counts(self, rows: np.ndarray) -> np.ndarray:
        """Counts ``(m, 2, q, d)`` of the feature values of every query row"""
        rows = np.atleast_2d(np.asarray(rows, dtype=np.int64))
        if rows.shape[1] != self.d:
            raise ContractViolation(f"query rows need {self.d} features")
        seen = (rows >= 0) & (rows < self.arities[None, :])
        index = np.where(seen, rows, 0)
        counts = self.feature_counts[:, :, np.arange(self.d), index]
        return np.where(seen[None, None], counts, 0)

    def _prior(self) -> np.ndarray:
        totals = self.class_counts.sum(axis=1, keepdims=True)
        with np.errstate(divide="ignore", invalid="ignore"):
            prior = self.class_counts / totals
        return np.where(totals > 0, prior, 0.5)

    def bounds(
        self, rows: np.ndarray, vacuous_flagged: bool = True
    ) -> Tuple[np.ndarray, np.ndarray]:
        """Lower and upper ``P(Y_j = 1 | x)`` for every row, shape ``(q, m)``

        :param vacuous_flagged: give flagged labels ``[0, 1]`` when ``s > 0``;
          otherwise, and always at ``s = 0``, they get their empirical frequency

        """
        counts = self._query_counts(rows)
        totals = (self.class_counts + self.s)[:, :, None, None]
        prior = self._prior()
        with np.errstate(divide="ignore", invalid="ignore"):
            log_low = np.log(counts / totals).sum(axis=-1)
            log_up = np.log((counts + self.s) / totals).sum(axis=-1)
            log_prior = np.log(prior)[:, :, None]
            ones_low = log_prior[:, 1] + log_low[:, 1]
            ones_up = log_prior[:, 1] + log_up[:, 1]
            zeros_low = log_prior[:, 0] + log_low[:, 0]
            zeros_up = log_prior[:, 0] + log_up[:, 0]
            lower = np.exp(ones_low - np.logaddexp(ones_low, zeros_up))
            upper = np.exp(ones_up - np.logaddexp(ones_up, zeros_low))
        # both sides vanish only when s == 0; fall back on the prior
        fallback = np.broadcast_to(prior[:, 1:2], lower.shape)
        lower = np.where(np.isnan(lower), fallback, lower)
        upper = np.where(np.isnan(upper), fallback, upper)
        lower = np.minimum(lower, upper)
        for j in self.flagged:
            if vacuous_flagged and self.s > 0:
                lower[j], upper[j] = 0.0, 1.0
            else:
                lower[j] = upper[j] = prior[j, 1]
        return lower.T, upper.T

    def marginal_interval(self, x: Sequence[int], j: int) -> ProbabilityInterval:
        """Bounds on ``P(Y_j = 1 | x)`` for label `j` (1-based)"""
        if not 1 <= j <= self.m:
            raise IndexOutOfRange(f"label index {j} outside 1..{self.m}")
        lower, upper = self.bounds(np.asarray(x)[None, :])
        return ProbabilityInterval(lower=lower[0, j - 1], upper=upper[0, j - 1])

    def intervals(self, x: Sequence[int]) -> List[ProbabilityInterval]:
        lower, upper = self.bounds(np.asarray(x)[None, :])
        return [
            ProbabilityInterval(lower=lo, upper=up)
            for lo, up in zip(lower[0], upper[0])
        ]

    def precise_marginals(self, rows: np.ndarray) -> np.ndarray:
        """Naive Bayes ``P(Y_j = 1 | x)``, shape ``(q, m)``

        Labels lacking a class fall back on their empirical frequency.

        """
        precise = self if self.s == 0 else self.with_s(0.0)
        lower, _ = precise.bounds(rows, vacuous_flagged=False)
        return lower

    def encode(self, raw: np.ndarray) -> np.ndarray:
        """Bin raw feature rows with the training edges"""
        if self.edges is None:
            return np.atleast_2d(np.asarray(raw, dtype=np.int64))
        return apply_bins(raw, self.edges)

    def to_json(self) -> str:
        return NccDocument(
            s=self.s,
            class_counts=self.class_counts.tolist(),
            feature_counts=self.feature_counts.tolist(),
            arities=self.arities.tolist(),
            edges=[e.tolist() for e in self.edges] if self.edges else None,
            label_names=self.label_names,
            feature_names=self.feature_names,
        ).json()

    @classmethod
    def from_json(cls, text: str) -> "NccModel":
        doc = NccDocument.parse_raw(text)
        return cls(
            np.array(doc.class_counts),
            np.array(doc.feature_counts),
            doc.s,
            doc.arities,
            doc.edges,
            doc.label_names,
            doc.feature_names,
        )

    def dump(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.write_text(self.to_json())
        return path

    def __repr__(self) -> str:
        return f"NccModel(m={self.m}, d={self.d}, s={self.s})"


def fit(data: DiscreteDataset, s: float = 1.0) -> NccModel:
    return NccModel.fit(data, s)


def marginal_interval(model: NccModel, x: Sequence[int], j: int) -> ProbabilityInterval:
    return model.marginal_interval(x, j)
