"""
Horn Inequality Systems

Generates the triples (I, J, K) whose inequalities
λ_K(C) ≤ λ_I(A) + λ_J(B) cut out the spectra of Hermitian sums C = A + B,
together with the trace identity. Two independent generators are provided:

    - ``horn_list`` admits a triple when c_{σ_I σ_J}^{σ_K} ≠ 0 by direct LR
      computation;
    - ``horn_list_recursive`` admits it by checking the integer spectra
      (σ_I, σ_J, σ_K) against the systems of every smaller rank, never
      computing a coefficient at the rank being generated.

``HornInequalitySystem`` turns a triple list into incidence matrices so a
whole system is evaluated with three matrix-vector products.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from config.settings import COMBINATORICS_CONFIG
from src.core.littlewood_richardson import tensor_decompose
from src.core.partitions import partition_of_subset, subset_of_partition, subsets
from src.utils.data_models import HornTriple, SchubertIndex, Spectrum
from src.utils.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


def subset_sum(spectrum: Spectrum, index: SchubertIndex) -> float:
    """λ_I = Σ_{i∈I} λ_i (indices are 1-based)."""
    if index.n != spectrum.n:
        raise DimensionMismatchError(f"index over n={index.n} applied to spectrum of length {spectrum.n}")
    return sum(spectrum.values[i - 1] for i in index.elements)


def _warn_above_cap(n: int) -> None:
    if n > COMBINATORICS_CONFIG["horn_soft_cap"]:
        logger.warning(f"Generating Horn triples for n={n}; enumeration above "
                       f"n={COMBINATORICS_CONFIG['horn_soft_cap']} is slow")


@lru_cache(maxsize=None)
def _horn_triples(n: int) -> Tuple[HornTriple, ...]:
    triples = []
    for p in range(1, n):
        for I in subsets(n, p):
            sigma_i = partition_of_subset(I)
            for J in subsets(n, p):
                sigma_j = partition_of_subset(J)
                for gamma, c in tensor_decompose(sigma_i, sigma_j, rows=p, max_part=n - p):
                    K = subset_of_partition(gamma, p, n)
                    triples.append(HornTriple(p, I, J, K, c))
    triples.sort(key=HornTriple.key)
    logger.info(f"Generated {len(triples)} Horn triples for n={n}")
    return tuple(triples)


def horn_list(n: int, facets_only: bool = False) -> List[HornTriple]:
    """
    All Horn triples of size n.

    Args:
        n: Matrix size, at least 2 (n = 1 yields no triples)
        facets_only: Keep only triples with coefficient exactly 1

    Returns:
        Triples over all ranks 1 ≤ p < n in canonical (p, I, J, K) order
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _warn_above_cap(n)
    triples = _horn_triples(n)
    if facets_only:
        return [t for t in triples if t.c == 1]
    return list(triples)


def weyl_inequalities(n: int) -> List[HornTriple]:
    """The rank-one family λ_{i+j-1}(A+B) ≤ λ_i(A) + λ_j(B)."""
    return [t for t in horn_list(n) if t.p == 1]


def _satisfies(lower: Sequence[HornTriple], a: Tuple[int, ...], b: Tuple[int, ...], c: Tuple[int, ...]) -> bool:
    for t in lower:
        lhs = sum(c[k - 1] for k in t.K.elements)
        rhs = sum(a[i - 1] for i in t.I.elements) + sum(b[j - 1] for j in t.J.elements)
        if lhs > rhs:
            return False
    return True


@lru_cache(maxsize=None)
def _horn_triples_recursive(n: int) -> Tuple[HornTriple, ...]:
    triples = []
    for p in range(1, n):
        # the integer spectra σ_I, σ_J, σ_K have length p; test them against
        # the complete system of size p
        lower = _horn_triples_recursive(p)
        by_subset: Dict[SchubertIndex, Tuple[int, ...]] = {
            S: partition_of_subset(S).padded(p) for S in subsets(n, p)
        }
        for I in by_subset:
            for J in by_subset:
                for K in by_subset:
                    if I.weight + J.weight != K.weight:
                        continue
                    if _satisfies(lower, by_subset[I], by_subset[J], by_subset[K]):
                        triples.append(HornTriple(p, I, J, K, None))
    triples.sort(key=HornTriple.key)
    logger.info(f"Recursively admitted {len(triples)} Horn triples for n={n}")
    return tuple(triples)


def horn_list_recursive(n: int) -> List[HornTriple]:
    """
    Horn triples generated by recursion on the rank.

    Admissibility of (I, J, K) at rank p is decided by weight balance and the
    inequalities of size p applied to (σ_I, σ_J, σ_K); coefficients are left
    as None. The resulting set equals ``horn_list(n)``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _warn_above_cap(n)
    return list(_horn_triples_recursive(n))


@dataclass(frozen=True)
class HornInequalitySystem:
    """
    Dense incidence form of a triple list.

    Row t of ``left``/``right``/``target`` is the 0/1 indicator of I_t/J_t/K_t,
    so the slack vector of the system at (α, β, γ) is
    left·α + right·β − target·γ.
    """
    n: int
    triples: Tuple[HornTriple, ...]
    left: np.ndarray
    right: np.ndarray
    target: np.ndarray

    @classmethod
    def from_triples(cls, n: int, triples: Sequence[HornTriple]) -> "HornInequalitySystem":
        left = np.zeros((len(triples), n))
        right = np.zeros((len(triples), n))
        target = np.zeros((len(triples), n))
        for row, t in enumerate(triples):
            left[row, [i - 1 for i in t.I.elements]] = 1.0
            right[row, [j - 1 for j in t.J.elements]] = 1.0
            target[row, [k - 1 for k in t.K.elements]] = 1.0
        return cls(n, tuple(triples), left, right, target)

    def slacks(self, alpha: Spectrum, beta: Spectrum, gamma: Spectrum) -> np.ndarray:
        a, b, c = (np.asarray(s.values) for s in (alpha, beta, gamma))
        return self.left @ a + self.right @ b - self.target @ c


@lru_cache(maxsize=None)
def hermitian_system(n: int, facets_only: bool = False) -> HornInequalitySystem:
    """Cached incidence system for ``horn_list(n, facets_only)``."""
    return HornInequalitySystem.from_triples(n, horn_list(n, facets_only))


def describe_inequality(triple: HornTriple, names: Tuple[str, str, str] = ("A", "B", "C")) -> str:
    """Readable form of λ_K(C) ≤ λ_I(A) + λ_J(B)."""
    a, b, c = names
    return f"λ_{triple.K}({c}) ≤ λ_{triple.I}({a}) + λ_{triple.J}({b})"

