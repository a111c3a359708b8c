
import pytest

from src.core.partitions import (
    contains,
    dual_subset,
    partition_of_subset,
    partitions_of_weight,
    subset_of_partition,
    subsets,
)
from src.utils.data_models import Partition, SchubertIndex, Spectrum
from src.utils.exceptions import InvalidPartitionError, InvalidSpectrumError, InvalidSubsetError


def test_partition_of_subset_examples():
    assert partition_of_subset(SchubertIndex.of(4, [1, 2])) == Partition()
    assert partition_of_subset(SchubertIndex.of(4, [1, 3])) == Partition.of(1)
    assert partition_of_subset(SchubertIndex.of(4, [2, 3])) == Partition.of(1, 1)
    assert partition_of_subset(SchubertIndex.of(4, [3, 4])) == Partition.of(2, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_rank_one_diagrams_are_single_rows(n):
    for i in range(1, n + 1):
        assert partition_of_subset(SchubertIndex.of(n, [i])) == Partition.of(i - 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_subset_round_trip(n):
    for p in range(1, n + 1):
        for index in subsets(n, p):
            shape = partition_of_subset(index)
            assert shape.weight == index.weight
            assert subset_of_partition(shape, p, n) == index


@pytest.mark.parametrize("n", [3, 4, 5])
def test_dual_subset_is_box_complement(n):
    for p in range(1, n):
        for index in subsets(n, p):
            shape = partition_of_subset(index).padded(p)
            dual = partition_of_subset(dual_subset(index)).padded(p)
            assert dual == tuple((n - p) - x for x in reversed(shape))
            assert dual_subset(dual_subset(index)) == index


def test_subset_of_partition_rejects_shapes_outside_the_box():
    with pytest.raises(InvalidPartitionError):
        subset_of_partition(Partition.of(3), 2, 4)
    with pytest.raises(InvalidPartitionError):
        subset_of_partition(Partition.of(1, 1, 1), 2, 4)


def test_partitions_of_weight_reverse_lex():
    shapes = [p.parts for p in partitions_of_weight(4, 4, 4)]
    assert shapes == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in partitions_of_weight(4, 2, 3)] == [(3, 1), (2, 2)]
    assert [p.parts for p in partitions_of_weight(0, 2, 3)] == [()]


def test_contains():
    assert contains(Partition.of(3, 2, 1), Partition.of(2, 1))
    assert not contains(Partition.of(2, 1), Partition.of(1, 1, 1))
    assert contains(Partition.of(1), Partition())


def test_partition_validation():
    assert Partition.of(2, 1, 0, 0).parts == (2, 1)
    assert str(Partition()) == "∅"
    with pytest.raises(InvalidPartitionError):
        Partition.of(1, 2)
    with pytest.raises(InvalidPartitionError):
        Partition.of(1, -1)


def test_schubert_index_validation():
    with pytest.raises(InvalidSubsetError):
        SchubertIndex.of(3, [2, 1])
    with pytest.raises(InvalidSubsetError):
        SchubertIndex.of(3, [4])
    with pytest.raises(InvalidSubsetError):
        SchubertIndex.of(3, [])
    assert str(SchubertIndex.of(4, [1, 3])) == "{1,3}"


def test_spectrum_validation():
    with pytest.raises(InvalidSpectrumError):
        Spectrum.of(0, 1)
    with pytest.raises(InvalidSpectrumError):
        Spectrum(())
    with pytest.raises(InvalidSpectrumError):
        Spectrum.of(float("nan"))
    s = Spectrum.of(3, 1, -2)
    assert s.negated_reversed() == Spectrum.of(2, -1, -3)
    assert s.total == 2
    assert s.spread == 5
