"""Tests for the label types"""
import numpy as np
import pytest
from pydantic import ValidationError

from skeptic.core import (
    Assignment,
    BinaryVector,
    PartialVector,
    PredictionSet,
    ProbabilityInterval,
    check_enumerable,
    expand_partial,
    hamming_loss,
    hamming_matrix,
    is_partial_vector,
    label_bit,
    label_matrix,
    partial_hamming_loss,
)
from skeptic.signals import (
    DimensionMismatch,
    EnumerationTooLarge,
    IndexOutOfRange,
)

pytestmark = pytest.mark.order(3)


class Test_ProbabilityInterval:
    def test_ordered(self):
        with pytest.raises(ValidationError):
            ProbabilityInterval(lower=0.7, upper=0.2)

    def test_range(self):
        with pytest.raises(ValidationError):
            ProbabilityInterval(lower=-0.1, upper=0.2)

    def test_complement(self):
        iv = ProbabilityInterval(lower=0.2, upper=0.5).complement()
        assert iv.as_pair() == pytest.approx((0.5, 0.8))

    def test_precise_and_vacuous(self):
        assert ProbabilityInterval.precise(0.3).degenerate
        assert ProbabilityInterval.vacuous().width == 1.0
        assert ProbabilityInterval.vacuous().contains(0.5)


class Test_BinaryVector:
    def test_mask_convention(self):
        """
        :GIVEN: the text form of a vector
        :WHEN:  it is parsed
        :THEN:  label 1 is the leftmost character and the highest bit
        """
        y = BinaryVector.from_string("10")
        assert y.bits == 2
        assert y.label(1) == 1
        assert y.label(2) == 0
        assert y.labels == (1, 0)
        assert str(y) == "10"

    def test_from_labels(self):
        assert BinaryVector.from_labels([0, 1, 1]) == BinaryVector(m=3, bits=3)

    def test_complement(self):
        assert str(BinaryVector.from_string("100").complement()) == "011"

    def test_mask_must_fit(self):
        with pytest.raises(ValidationError):
            BinaryVector(m=2, bits=4)

    def test_bad_text(self):
        with pytest.raises(ValueError):
            BinaryVector.from_string("1*0")

    def test_index_range(self):
        with pytest.raises(IndexOutOfRange):
            BinaryVector.from_string("10").label(3)


class Test_PartialVector:
    def test_from_labels(self, one_star_zero):
        assert PartialVector.from_labels([1, None, 0]) == one_star_zero
        assert PartialVector.from_labels([1, "*", 0]) == one_star_zero

    def test_masks(self, one_star_zero):
        assert one_star_zero.ones == 0b100
        assert one_star_zero.stars == 0b010
        assert PartialVector.from_masks(3, 0b100, 0b010) == one_star_zero

    def test_decided(self, one_star_zero):
        assert one_star_zero.decided == [1, 3]
        assert one_star_zero.star_count == 1
        assert one_star_zero.labels == (1, None, 0)
        assert not one_star_zero.is_complete()

    def test_to_binary(self):
        assert PartialVector(entries="01").to_binary() == BinaryVector(m=2, bits=1)
        with pytest.raises(ValueError):
            PartialVector(entries="0*").to_binary()

    def test_alphabet(self):
        with pytest.raises(ValidationError):
            PartialVector(entries="1?0")

    def test_all_stars(self):
        assert str(PartialVector.all_stars(3)) == "***"


class Test_Assignment:
    def test_increasing_indices(self):
        with pytest.raises(ValidationError):
            Assignment(indices=(2, 1), values=(0, 1))

    def test_aligned(self):
        with pytest.raises(ValidationError):
            Assignment(indices=(1, 2), values=(0,))

    def test_complement(self):
        a = Assignment(indices=(1, 3), values=(1, 0))
        assert a.complement().values == (0, 1)
        assert len(a) == 2

    def test_masks(self):
        assert Assignment(indices=(1, 3), values=(1, 0)).masks(3) == (0b101, 0b100)


class Test_PredictionSet:
    def test_sorted_unique(self):
        s = PredictionSet(m=2, members=[3, 0, 3, 2])
        assert s.members == (0, 2, 3)
        assert len(s) == 3

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            PredictionSet(m=2, members=[4])

    def test_membership(self, dominance_maximal_set):
        assert BinaryVector.from_string("10") in dominance_maximal_set
        assert BinaryVector.from_string("01") not in dominance_maximal_set
        assert 3 in dominance_maximal_set

    def test_from_bitset(self, dominance_maximal_set):
        keep = np.array([True, False, True, True])
        assert PredictionSet.from_bitset(keep) == dominance_maximal_set

    def test_subsets(self, dominance_maximal_set):
        everything = PredictionSet.everything(2)
        assert dominance_maximal_set.issubset(everything)
        assert everything.issuperset(dominance_maximal_set)
        assert not everything.issubset(dominance_maximal_set)

    def test_dimension_mismatch(self, dominance_maximal_set):
        with pytest.raises(DimensionMismatch):
            dominance_maximal_set.issubset(PredictionSet.everything(3))

    def test_strings(self, dominance_maximal_set):
        assert dominance_maximal_set.strings() == ["00", "10", "11"]
        assert [str(v) for v in dominance_maximal_set.vectors()] == ["00", "10", "11"]


class Test_Losses:
    def test_hamming_loss(self):
        a, b = BinaryVector.from_string("101"), BinaryVector.from_string("011")
        assert hamming_loss(a, b) == 2
        assert hamming_loss(a, a) == 0

    def test_hamming_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            hamming_loss(BinaryVector.from_string("1"), BinaryVector.from_string("10"))

    def test_partial_hamming_loss(self):
        b = Assignment(indices=(1, 3), values=(1, 1))
        assert partial_hamming_loss(b, BinaryVector.from_string("100")) == 1
        assert partial_hamming_loss(b, BinaryVector.from_string("010")) == 2

    def test_hamming_matrix(self):
        expected = [[0, 1, 1, 2], [1, 0, 2, 1], [1, 2, 0, 1], [2, 1, 1, 0]]
        assert hamming_matrix(2).tolist() == expected

    def test_label_matrix(self):
        assert label_matrix(2).tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]
        with pytest.raises(ValueError):
            label_matrix(2)[0, 0] = 1


class Test_PartialSets:
    def test_expand(self, one_star_zero):
        assert expand_partial(one_star_zero).strings() == ["100", "110"]

    def test_expand_all_stars(self):
        assert len(expand_partial(PartialVector.all_stars(3))) == 8

    def test_recognise(self):
        s = PredictionSet.from_strings(["100", "110"])
        assert str(is_partial_vector(s)) == "1*0"
        assert str(is_partial_vector(PredictionSet.everything(2))) == "**"

    def test_not_a_partial_vector(self, dominance_maximal_set):
        assert is_partial_vector(dominance_maximal_set) is None
        assert is_partial_vector(PredictionSet.from_strings(["00", "11"])) is None

    def test_empty_set(self):
        with pytest.raises(ValueError):
            is_partial_vector(PredictionSet(m=2, members=[]))

    def test_round_trip_on_random_partials(self, rng):
        """
        :GIVEN: random partial vectors
        :WHEN:  they are expanded and recognised again
        :THEN:  the original partial vector comes back
        """
        for _ in range(50):
            labels = rng.choice([0, 1, None], size=int(rng.integers(1, 7)))
            v = PartialVector.from_labels(list(labels))
            assert is_partial_vector(expand_partial(v)) == v


class Test_Guards:
    def test_label_bit(self):
        assert label_bit(1, 3) == 0b100
        with pytest.raises(IndexOutOfRange):
            label_bit(0, 3)

    def test_check_enumerable(self):
        check_enumerable(16)
        with pytest.raises(EnumerationTooLarge):
            check_enumerable(17)
        with pytest.raises(EnumerationTooLarge):
            check_enumerable(5, limit=4)
