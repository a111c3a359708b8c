"""
Partition and subset arithmetic shared by all deciders.

A subset I = {i_1 < ... < i_p} of {1, ..., n} corresponds to the Young
diagram σ_I inside the p × (n-p) rectangle cut out by the lattice path whose
i-th unit step runs North exactly when i ∈ I. In closed form

    σ_I = (i_p - p, i_{p-1} - (p-1), ..., i_1 - 1).

The p = 1 case gives σ_{i} = (i - 1), so c_{σ_i σ_j}^{σ_k} ≠ 0 exactly when
k = i + j - 1, which is Weyl's inequality λ_{i+j-1}(A+B) ≤ λ_i(A) + λ_j(B).
"""
from itertools import combinations
from typing import Iterator

from src.utils.data_models import Partition, SchubertIndex
from src.utils.exceptions import InvalidPartitionError


def partition_of_subset(index: SchubertIndex) -> Partition:
    """
    Diagram σ_I of a Schubert index.

    Args:
        index: Subset I of {1, ..., n}

    Returns:
        Partition with parts λ_a = i_{p+1-a} - (p+1-a), each at most n - p
    """
    p = index.p
    return Partition(tuple(index.elements[p - a] - (p + 1 - a) for a in range(1, p + 1)))


def subset_of_partition(shape: Partition, p: int, n: int) -> SchubertIndex:
    """
    Inverse of ``partition_of_subset`` on the p × (n-p) rectangle.

    Raises:
        InvalidPartitionError: If the diagram does not fit the rectangle
    """
    if not 1 <= p <= n:
        raise InvalidPartitionError(f"rank p={p} outside 1..{n}")
    if len(shape) > p or shape.part(0) > n - p:
        raise InvalidPartitionError(f"{shape} does not fit the {p}x{n - p} rectangle")
    padded = shape.padded(p)
    # i_b = λ_{p+1-b} + b
    return SchubertIndex(n, tuple(padded[p - b] + b for b in range(1, p + 1)))


def dual_subset(index: SchubertIndex) -> SchubertIndex:
    """K* = {n + 1 - k : k ∈ K}; its diagram is the rectangle complement of σ_K."""
    return SchubertIndex(index.n, tuple(sorted(index.n + 1 - k for k in index.elements)))


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff inner_i ≤ outer_i for every row, i.e. the skew shape outer/inner exists."""
    if len(inner) > len(outer):
        return False
    return all(inner.parts[i] <= outer.parts[i] for i in range(len(inner)))


def subsets(n: int, p: int) -> Iterator[SchubertIndex]:
    """All cardinality-p subsets of {1, ..., n} in lexicographic order."""
    for elements in combinations(range(1, n + 1), p):
        yield SchubertIndex(n, elements)


def partitions_of_weight(weight: int, max_rows: int, max_part: int) -> Iterator[Partition]:
    """Partitions of ``weight`` with at most ``max_rows`` parts, each at most ``max_part``, reverse-lex."""

    def _extend(remaining: int, cap: int, rows_left: int, prefix: tuple):
        if remaining == 0:
            yield Partition(prefix)
            return
        if rows_left == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            if first * rows_left < remaining:
                break
            yield from _extend(remaining - first, first, rows_left - 1, prefix + (first,))

    if weight < 0:
        return iter(())
    return _extend(weight, max_part, max_rows, ())
