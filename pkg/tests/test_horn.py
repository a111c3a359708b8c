import numpy as np
import pytest

from data.reference_values import HORN_TRIPLE_COUNTS
from src.core.horn import (
    describe_inequality,
    hermitian_system,
    horn_list,
    horn_list_recursive,
    subset_sum,
    weyl_inequalities,
)
from src.core.littlewood_richardson import lr_coefficient
from src.core.partitions import partition_of_subset
from src.utils.data_models import HornTriple, SchubertIndex, Spectrum
from src.utils.exceptions import DimensionMismatchError, InvariantViolationError


def keys(triples):
    return {(t.p, t.I.elements, t.J.elements, t.K.elements) for t in triples}


def test_subset_sum_examples():
    assert subset_sum(Spectrum.of(3, 1), SchubertIndex.of(2, [1])) == 3
    assert subset_sum(Spectrum.of(3, 1), SchubertIndex.of(2, [1, 2])) == 4
    assert subset_sum(Spectrum.of(5, 2, -1), SchubertIndex.of(3, [2, 3])) == 1
    with pytest.raises(DimensionMismatchError):
        subset_sum(Spectrum.of(3, 1), SchubertIndex.of(3, [1]))


@pytest.mark.parametrize("n, count", sorted(HORN_TRIPLE_COUNTS.items()))
def test_triple_counts(n, count):
    assert len(horn_list(n)) == count


def test_n2_triples():
    assert keys(horn_list(2)) == {(1, (1,), (1,), (1,)), (1, (1,), (2,), (2,)), (1, (2,), (1,), (2,))}
    assert keys(horn_list(2, facets_only=True)) == keys(horn_list(2))


def test_canonical_order_and_invariants():
    triples = horn_list(4)
    assert [t.key() for t in triples] == sorted(t.key() for t in triples)
    for t in triples:
        assert t.I.weight + t.J.weight == t.K.weight
        assert t.c == lr_coefficient(partition_of_subset(t.I), partition_of_subset(t.J), partition_of_subset(t.K))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_weyl_family(n):
    family = weyl_inequalities(n)
    assert len(family) == n * (n + 1) // 2
    for t in family:
        (i,), (j,), (k,) = t.I.elements, t.J.elements, t.K.elements
        assert k == i + j - 1


@pytest.mark.parametrize("n", [3, 4])
def test_facets_are_a_subset(n):
    facets = horn_list(n, facets_only=True)
    assert keys(facets) <= keys(horn_list(n))
    assert all(t.c == 1 for t in facets)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_recursive_generation_matches(n):
    recursive = horn_list_recursive(n)
    assert keys(recursive) == keys(horn_list(n))
    assert all(t.c is None for t in recursive)


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_recursive_generation_matches_large(n):
    assert keys(horn_list_recursive(n)) == keys(horn_list(n))


def test_system_slacks_match_triples():
    system = hermitian_system(3)
    alpha, beta, gamma = Spectrum.of(2, 0, -1), Spectrum.of(1, 1, -3), Spectrum.of(3, 0, -4)
    slacks = system.slacks(alpha, beta, gamma)
    expected = [subset_sum(alpha, t.I) + subset_sum(beta, t.J) - subset_sum(gamma, t.K) for t in system.triples]
    np.testing.assert_allclose(slacks, expected)


def test_describe_inequality():
    t = HornTriple(1, SchubertIndex.of(2, [1]), SchubertIndex.of(2, [2]), SchubertIndex.of(2, [2]), 1)
    assert describe_inequality(t) == "λ_{2}(C) ≤ λ_{1}(A) + λ_{2}(B)"


def test_triple_rejects_unbalanced_weights():
    with pytest.raises(InvariantViolationError):
        HornTriple(1, SchubertIndex.of(3, [1]), SchubertIndex.of(3, [1]), SchubertIndex.of(3, [2]), 1)
