"""
Core label types
----------------

Every other module speaks in terms of the types defined here.

Label vectors are fixed-width integer masks.  Label ``i`` (1-based, as in all
public interfaces) is stored at bit ``m - i``, so the mask of a vector is the
number its text form spells in binary: ``"10"`` is mask 2, and the mask of a
vector is also the index of its leaf in a depth-``m`` label tree.

Partial vectors use the alphabet ``{0, 1, *}``, where ``*`` marks a label the
predictor abstains on.  A partial vector stands for the set of its
completions, :func:`expand_partial` enumerates them and
:func:`is_partial_vector` recognises sets which can be written that way.

"""
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple
import logging

import numpy as np
from pydantic import BaseModel, confloat, conint, constr, root_validator, validator

from skeptic.signals import (
    DimensionMismatch,
    EnumerationTooLarge,
    IndexOutOfRange,
)

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9
"""Absolute tolerance of every strict comparison made by a decision rule"""

MAX_LABELS = 24
"""Largest label count a mask-based vector may have"""

ENUMERATION_LIMIT = 16
"""Largest label count for which label sets are enumerated explicitly"""

STAR = "*"


def popcount(x: int) -> int:
    return bin(x).count("1")


def label_bit(i: int, m: int) -> int:
    """Mask with only the bit of label `i` (1-based) set"""
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"label index {i} outside 1..{m}")
    return 1 << (m - i)


def check_enumerable(m: int, limit: int = ENUMERATION_LIMIT) -> None:
    if m > limit:
        raise EnumerationTooLarge(
            f"enumeration too large: m={m} exceeds the limit of {limit}"
        )


@lru_cache(maxsize=None)
def _label_matrix(m: int) -> np.ndarray:
    leaves = np.arange(1 << m)
    shifts = np.arange(m - 1, -1, -1)
    matrix = (leaves[:, None] >> shifts[None, :]) & 1
    matrix.setflags(write=False)
    return matrix


def label_matrix(m: int) -> np.ndarray:
    """The ``2^m x m`` 0/1 matrix whose row ``k`` holds the labels of mask ``k``

    Column ``j`` corresponds to label ``j + 1``.  The array is shared and
    read-only.

    """
    check_enumerable(m)
    return _label_matrix(m)


def hamming_matrix(m: int) -> np.ndarray:
    """Pairwise Hamming distances between all ``2^m`` masks"""
    leaves = np.arange(1 << m)
    diff = np.bitwise_xor.outer(leaves, leaves)
    return _label_matrix(m).sum(axis=1)[diff]


class ProbabilityInterval(BaseModel):
    """Bounds on the probability of a binary event

    The interval of the complementary event is ``[1 - upper, 1 - lower]``,
    see :meth:`complement`.

    """

    lower: confloat(ge=0.0, le=1.0)
    upper: confloat(ge=0.0, le=1.0)

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def ordered(cls, values):
        if values["lower"] > values["upper"]:
            raise ValueError(
                f"lower bound {values['lower']} exceeds upper bound"
                f" {values['upper']}"
            )
        return values

    @classmethod
    def precise(cls, p: float) -> "ProbabilityInterval":
        return cls(lower=p, upper=p)

    @classmethod
    def vacuous(cls) -> "ProbabilityInterval":
        return cls(lower=0.0, upper=1.0)

    @classmethod
    def from_pair(cls, pair: Sequence[float]) -> "ProbabilityInterval":
        lower, upper = pair
        return cls(lower=lower, upper=upper)

    def complement(self) -> "ProbabilityInterval":
        return ProbabilityInterval(lower=1.0 - self.upper, upper=1.0 - self.lower)

    @property
    def degenerate(self) -> bool:
        return self.lower == self.upper

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, p: float) -> bool:
        return self.lower <= p <= self.upper

    def as_pair(self) -> Tuple[float, float]:
        return (self.lower, self.upper)


class BinaryVector(BaseModel):
    """A complete label vector in ``{0,1}^m``, stored as a mask"""

    m: conint(ge=1, le=MAX_LABELS)
    bits: conint(ge=0)

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def fits(cls, values):
        if values["bits"] >= 1 << values["m"]:
            raise ValueError(
                f"mask {values['bits']} does not fit in {values['m']} labels"
            )
        return values

    @classmethod
    def from_string(cls, text: str) -> "BinaryVector":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary vector: {text!r}")
        return cls(m=len(text), bits=int(text, 2))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "BinaryVector":
        return cls.from_string("".join(str(int(v)) for v in labels))

    def label(self, i: int) -> int:
        """Value of label `i` (1-based)"""
        return 1 if self.bits & label_bit(i, self.m) else 0

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(self.label(i) for i in range(1, self.m + 1))

    def complement(self) -> "BinaryVector":
        return BinaryVector(m=self.m, bits=self.bits ^ ((1 << self.m) - 1))

    def to_partial(self) -> "PartialVector":
        return PartialVector(entries=str(self))

    def __str__(self) -> str:
        return format(self.bits, f"0{self.m}b")


class PartialVector(BaseModel):
    """A label vector over ``{0, 1, *}``, e.g. ``"1*0"``"""

    entries: constr(regex=r"^[01*]+$", min_length=1, max_length=MAX_LABELS)

    class Config:
        frozen = True

    @classmethod
    def from_masks(cls, m: int, ones: int, stars: int) -> "PartialVector":
        """Build from the mask of labels fixed to one and the mask of stars"""
        chars = []
        for i in range(1, m + 1):
            bit = label_bit(i, m)
            if stars & bit:
                chars.append(STAR)
            else:
                chars.append("1" if ones & bit else "0")
        return cls(entries="".join(chars))

    @classmethod
    def from_labels(cls, labels: Sequence[Optional[int]]) -> "PartialVector":
        """Build from a sequence of 0, 1 and `None` (or ``"*"``) values"""
        chars = []
        for v in labels:
            chars.append(STAR if v is None or v == STAR else str(int(v)))
        return cls(entries="".join(chars))

    @classmethod
    def all_stars(cls, m: int) -> "PartialVector":
        return cls(entries=STAR * m)

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def stars(self) -> int:
        """Mask of abstained labels"""
        return sum(
            label_bit(i, self.m)
            for i, c in enumerate(self.entries, 1)
            if c == STAR
        )

    @property
    def ones(self) -> int:
        """Mask of labels fixed to one"""
        return sum(
            label_bit(i, self.m)
            for i, c in enumerate(self.entries, 1)
            if c == "1"
        )

    @property
    def star_count(self) -> int:
        return self.entries.count(STAR)

    @property
    def decided(self) -> List[int]:
        """1-based indices of the labels which are not abstained on"""
        return [i for i, c in enumerate(self.entries, 1) if c != STAR]

    def label(self, i: int) -> Optional[int]:
        """Value of label `i` (1-based), `None` for a star"""
        label_bit(i, self.m)
        c = self.entries[i - 1]
        return None if c == STAR else int(c)

    @property
    def labels(self) -> Tuple[Optional[int], ...]:
        return tuple(self.label(i) for i in range(1, self.m + 1))

    def is_complete(self) -> bool:
        return STAR not in self.entries

    def to_binary(self) -> BinaryVector:
        if not self.is_complete():
            raise ValueError(f"{self.entries} has abstained labels")
        return BinaryVector.from_string(self.entries)

    def __str__(self) -> str:
        return self.entries


class Assignment(BaseModel):
    """Values for an ordered subset of the labels

    `indices` are 1-based and strictly increasing; `values` holds one 0/1
    value per index.

    """

    indices: Tuple[conint(ge=1), ...]
    values: Tuple[conint(ge=0, le=1), ...]

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def aligned(cls, values):
        indices, vals = values["indices"], values["values"]
        if len(indices) != len(vals):
            raise ValueError("indices and values differ in length")
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise ValueError("indices must be strictly increasing")
        return values

    def complement(self) -> "Assignment":
        return Assignment(
            indices=self.indices, values=tuple(1 - v for v in self.values)
        )

    def __len__(self) -> int:
        return len(self.indices)

    def masks(self, m: int) -> Tuple[int, int]:
        """The mask of the assigned labels and the mask of those set to one"""
        scope = ones = 0
        for i, v in zip(self.indices, self.values):
            bit = label_bit(i, m)
            scope |= bit
            if v:
                ones |= bit
        return scope, ones


class PredictionSet(BaseModel):
    """An explicit, deduplicated set of complete label vectors

    Members are kept as a sorted tuple of masks so that output order is
    reproducible.

    """

    m: conint(ge=1, le=MAX_LABELS)
    members: Tuple[int, ...]

    class Config:
        frozen = True

    @validator("members", pre=True)
    def sorted_unique(cls, v):
        return tuple(sorted(set(int(x) for x in v)))

    @root_validator(skip_on_failure=True)
    def in_range(cls, values):
        size = 1 << values["m"]
        if any(not 0 <= x < size for x in values["members"]):
            raise ValueError(f"member outside the {values['m']}-label space")
        return values

    @classmethod
    def from_vectors(
        cls, m: int, vectors: Iterable[BinaryVector]
    ) -> "PredictionSet":
        masks = []
        for y in vectors:
            if y.m != m:
                raise DimensionMismatch(f"vector {y} does not have {m} labels")
            masks.append(y.bits)
        return cls(m=m, members=masks)

    @classmethod
    def from_strings(cls, texts: Iterable[str]) -> "PredictionSet":
        vectors = [BinaryVector.from_string(t) for t in texts]
        return cls.from_vectors(vectors[0].m, vectors)

    @classmethod
    def from_bitset(cls, keep: np.ndarray) -> "PredictionSet":
        """Build from a boolean array of length ``2^m``"""
        m = int(len(keep)).bit_length() - 1
        return cls(m=m, members=np.flatnonzero(keep).tolist())

    @classmethod
    def everything(cls, m: int) -> "PredictionSet":
        return cls(m=m, members=range(1 << m))

    def vectors(self) -> List[BinaryVector]:
        return [BinaryVector(m=self.m, bits=x) for x in self.members]

    def strings(self) -> List[str]:
        return [format(x, f"0{self.m}b") for x in self.members]

    def issubset(self, other: "PredictionSet") -> bool:
        if other.m != self.m:
            raise DimensionMismatch(f"{self.m} labels vs {other.m} labels")
        return set(self.members) <= set(other.members)

    def issuperset(self, other: "PredictionSet") -> bool:
        return other.issubset(self)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, y) -> bool:
        if isinstance(y, BinaryVector):
            return y.m == self.m and y.bits in self.members
        return int(y) in self.members


def hamming_loss(y1: BinaryVector, y2: BinaryVector) -> int:
    """Number of labels on which two vectors differ"""
    if y1.m != y2.m:
        raise DimensionMismatch(f"{y1.m} labels vs {y2.m} labels")
    return popcount(y1.bits ^ y2.bits)


def partial_hamming_loss(b: Assignment, y: BinaryVector) -> int:
    """Hamming loss restricted to the labels assigned by `b`"""
    scope, ones = b.masks(y.m)
    return popcount((y.bits ^ ones) & scope)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            break
        sub = (sub - 1) & mask


def expand_partial(v: PartialVector) -> PredictionSet:
    """All completions of a partial vector"""
    check_enumerable(v.m)
    ones, stars = v.ones, v.stars
    return PredictionSet(m=v.m, members=[ones | sub for sub in _submasks(stars)])


def is_partial_vector(s: PredictionSet) -> Optional[PartialVector]:
    """The partial vector whose completions are exactly `s`, if there is one"""
    if not len(s):
        raise ValueError("an empty set is not expressible")
    full = (1 << s.m) - 1
    common_ones, any_ones = full, 0
    for x in s.members:
        common_ones &= x
        any_ones |= x
    stars = any_ones & ~common_ones
    if len(s) != 1 << popcount(stars):
        return None
    return PartialVector.from_masks(s.m, common_ones, stars)
