"""
Additive and Multiplicative Spectral Deciders

Feasibility checkers built on the Horn systems:

    - Hermitian sums C = A + B (trace identity plus Horn inequalities)
    - zero sums H_1 + ... + H_N = 0, including the iterated-LR system for N > 3
    - rank-one interlacing
    - stability of a triple of filtrations in generic position
    - singular spectra of products A_1 ... A_N = 1 in SL(n), via logarithms
    - the dimension criterion for density of products of conjugacy classes

Every decider reports the slack of its tightest inequality, so near-boundary
inputs are visible, and a witness whenever the answer is negative.
"""
import logging
import math
from functools import lru_cache
from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.settings import NUMERICS_CONFIG
from src.core.horn import describe_inequality, hermitian_system, subset_sum
from src.core.littlewood_richardson import product_expansion, tensor_decompose
from src.core.partitions import dual_subset, partition_of_subset, subset_of_partition, subsets
from src.utils.data_models import (
    HornTriple,
    MultiHornTriple,
    Spectrum,
    StabilityReport,
    StabilityStatus,
    Verdict,
    WitnessKind,
)
from src.utils.exceptions import DimensionMismatchError, InvalidSpectrumError

logger = logging.getLogger(__name__)

EXTENSION_NOTE = ("N>3 zero-sum inequalities come from iterated LR coefficients; "
                  "they are validated by sampling, not by a published inequality list")


def _tolerance(tol: Optional[float]) -> float:
    tol = NUMERICS_CONFIG["default_tolerance"] if tol is None else float(tol)
    if tol < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    return tol


def _same_length(spectra: Sequence[Spectrum]) -> int:
    n = spectra[0].n
    for s in spectra[1:]:
        if s.n != n:
            raise DimensionMismatchError(f"spectra of lengths {[x.n for x in spectra]} cannot be compared")
    return n


def trace_defect(alpha: Spectrum, beta: Spectrum, gamma: Spectrum) -> float:
    """Σγ − Σα − Σβ; zero for every realizable triple."""
    return math.fsum(gamma.values) - math.fsum(alpha.values) - math.fsum(beta.values)


def check_hermitian_sum(alpha: Spectrum, beta: Spectrum, gamma: Spectrum,
                        tol: Optional[float] = None, facets_only: bool = False) -> Verdict:
    """
    Decide whether Hermitian A, B with spectra α, β can have A + B of spectrum γ.

    Args:
        alpha: Spectrum of A
        beta: Spectrum of B
        gamma: Candidate spectrum of A + B
        tol: Absolute tolerance for every comparison
        facets_only: Use only the coefficient-one inequalities

    Returns:
        Verdict whose witness is the first violated triple in canonical order
    """
    tol = _tolerance(tol)
    n = _same_length([alpha, beta, gamma])
    defect = trace_defect(alpha, beta, gamma)
    if abs(defect) > tol:
        return Verdict(False, -abs(defect), witness_kind=WitnessKind.TRACE,
                       inequality=f"Σγ − Σα − Σβ = {defect:.6g} ≠ 0")

    system = hermitian_system(n, facets_only)
    if not system.triples:
        return Verdict(True, -abs(defect))
    slacks = system.slacks(alpha, beta, gamma)
    worst = float(slacks.min())
    violated = np.flatnonzero(slacks < -tol)
    if violated.size:
        triple = system.triples[int(violated[0])]
        return Verdict(False, worst, witness=triple, witness_kind=WitnessKind.INEQUALITY,
                       inequality=describe_inequality(triple))
    return Verdict(True, worst)


def interlacing_check(alpha: Spectrum, b: float, gamma: Spectrum, tol: Optional[float] = None) -> bool:
    """
    Rank-one update test: c_1 ≥ a_1 ≥ c_2 ≥ a_2 ≥ ... ≥ c_n ≥ a_n and Σγ = Σα + b.

    Args:
        alpha: Spectrum of A
        b: Nonzero eigenvalue of the positive rank-one B
        gamma: Candidate spectrum of A + B
    """
    tol = _tolerance(tol)
    if b < 0:
        raise ValueError(f"rank-one eigenvalue must be nonnegative, got {b}")
    n = _same_length([alpha, gamma])
    a, c = alpha.values, gamma.values
    for i in range(n):
        if c[i] < a[i] - tol:
            return False
        if i + 1 < n and a[i] < c[i + 1] - tol:
            return False
    return abs(math.fsum(c) - math.fsum(a) - b) <= tol


@lru_cache(maxsize=None)
def _multi_triples(n: int, summands: int) -> Tuple[MultiHornTriple, ...]:
    triples = []
    for p in range(1, n):
        pool = list(subsets(n, p))
        for factors in product(pool, repeat=summands):
            expansion = product_expansion([partition_of_subset(f) for f in factors], rows=p, max_part=n - p)
            for shape, c in expansion.items():
                triples.append(MultiHornTriple(p, factors, subset_of_partition(shape, p, n), c))
    triples.sort(key=MultiHornTriple.key)
    logger.info(f"Generated {len(triples)} multi-term triples for n={n}, {summands} summands")
    logger.warning(EXTENSION_NOTE)
    return tuple(triples)


def check_zero_sum(spectra: Sequence[Spectrum], tol: Optional[float] = None) -> Verdict:
    """
    Decide whether Hermitian H_1, ..., H_N with the given spectra can sum to zero.

    N = 2 compares λ(H_2) with −reverse λ(H_1); N = 3 reduces to
    check_hermitian_sum(λ_1, λ_2, −reverse λ_3); N > 3 uses the inequalities
    λ_K(−H_N) ≤ Σ_m λ_{I_m}(H_m) for every multi-triple with nonzero iterated
    LR coefficient.
    """
    tol = _tolerance(tol)
    if len(spectra) < 2:
        raise ValueError("a zero sum needs at least two spectra")
    n = _same_length(spectra)
    total = math.fsum(math.fsum(s.values) for s in spectra)
    if abs(total) > tol:
        return Verdict(False, -abs(total), witness_kind=WitnessKind.TRACE,
                       inequality=f"total trace {total:.6g} ≠ 0")

    if len(spectra) == 2:
        target = spectra[0].negated_reversed().values
        gaps = [abs(x - y) for x, y in zip(spectra[1].values, target)]
        worst = max(gaps)
        if worst > tol:
            i = gaps.index(worst) + 1
            return Verdict(False, -worst, witness_kind=WitnessKind.INEQUALITY,
                           inequality=f"λ_{i}(H_2) = −λ_{n + 1 - i}(H_1) fails")
        return Verdict(True, -worst)

    if len(spectra) == 3:
        return check_hermitian_sum(spectra[0], spectra[1], spectra[2].negated_reversed(), tol)

    gamma = spectra[-1].negated_reversed()
    summands = spectra[:-1]
    worst = math.inf
    first_violation = None
    for triple in _multi_triples(n, len(summands)):
        rhs = sum(subset_sum(s, f) for s, f in zip(summands, triple.factors))
        slack = rhs - subset_sum(gamma, triple.K)
        worst = min(worst, slack)
        if slack < -tol and first_violation is None:
            first_violation = triple
    if math.isinf(worst):
        worst = 0.0
    if first_violation is not None:
        return Verdict(False, worst, witness=first_violation, witness_kind=WitnessKind.INEQUALITY,
                       inequality=f"λ_{first_violation.K}(−H_N) ≤ Σ λ_I(H_m) fails",
                       notes=(EXTENSION_NOTE,))
    return Verdict(True, worst, notes=(EXTENSION_NOTE,))


def evaluate_toric_stability(alpha: Spectrum, beta: Spectrum, gamma: Spectrum,
                             tol: Optional[float] = None) -> StabilityReport:
    """
    Slope inequalities for three filtrations in generic position.

    A subspace F of dimension p in Schubert positions (I, J, K′) relative to
    the three spectral filtrations exists iff σ_{I*}·σ_{J*}·σ_{K′*} ≠ 0, i.e.
    lr_coefficient(σ_{I*}, σ_{J*}, σ_{K′}) ≠ 0. Stability asks
    (1/p)(α_I + β_J + γ_{K′}) < (1/n)(Σα + Σβ + Σγ) for all of them.
    """
    tol = _tolerance(tol)
    n = _same_length([alpha, beta, gamma])
    slope = (math.fsum(alpha.values) + math.fsum(beta.values) + math.fsum(gamma.values)) / n
    worst = math.inf
    witness = None
    description = ""
    for p in range(1, n):
        for I in subsets(n, p):
            sigma_i = partition_of_subset(dual_subset(I))
            a_i = subset_sum(alpha, I)
            for J in subsets(n, p):
                sigma_j = partition_of_subset(dual_subset(J))
                b_j = subset_sum(beta, J)
                for shape, c in tensor_decompose(sigma_i, sigma_j, rows=p, max_part=n - p):
                    K = subset_of_partition(shape, p, n)
                    margin = slope - (a_i + b_j + subset_sum(gamma, K)) / p
                    if margin < worst:
                        worst = margin
                        witness = HornTriple(p, dual_subset(I), dual_subset(J), K, c)
                        description = f"(α_{I} + β_{J} + γ_{K}) / {p} vs slope {slope:.6g}"

    if witness is None:
        return StabilityReport(StabilityStatus.STABLE, 0.0)
    if worst < -tol:
        status = StabilityStatus.UNSTABLE
    elif worst <= tol:
        status = StabilityStatus.SEMISTABLE_ONLY
    else:
        status = StabilityStatus.STABLE
    return StabilityReport(status, worst, witness, description)


def toric_stability_check(alpha: Spectrum, beta: Spectrum, gamma: Spectrum,
                          tol: Optional[float] = None) -> StabilityStatus:
    """Classify the triple as stable, semistable only, or unstable."""
    return evaluate_toric_stability(alpha, beta, gamma, tol).status


def log_singular_spectrum(sigma: Spectrum, tol: Optional[float] = None) -> Spectrum:
    """Elementwise logarithm of a positive singular spectrum with unit product."""
    tol = _tolerance(tol)
    if sigma.values[-1] <= 0:
        raise InvalidSpectrumError(f"singular values must be positive, got {sigma.to_list()}")
    determinant = math.prod(sigma.values)
    if abs(determinant - 1.0) > tol:
        raise InvalidSpectrumError(f"product of singular values is {determinant:.12g}, expected 1")
    return Spectrum(tuple(math.log(x) for x in sigma.values))


def check_singular_product(sigmas: Sequence[Spectrum], tol: Optional[float] = None) -> Verdict:
    """
    Decide whether A_1 ... A_N = 1 is solvable in SL(n) with the given singular spectra.

    The logarithms of the singular spectra are handed to check_zero_sum.
    """
    tol = _tolerance(tol)
    _same_length(sigmas)
    return check_zero_sum([log_singular_spectrum(s, tol) for s in sigmas], tol)


def multiplicative_weyl_check(sigma_a: Spectrum, sigma_b: Spectrum, sigma_ab: Spectrum,
                              rel_tol: float = 1e-9) -> bool:
    """σ_{i+j-1}(AB) ≤ σ_i(A)·σ_j(B) for all i + j − 1 ≤ n."""
    n = _same_length([sigma_a, sigma_b, sigma_ab])
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            bound = sigma_a.values[i - 1] * sigma_b.values[j - 1]
            if sigma_ab.values[i + j - 2] > bound * (1.0 + rel_tol):
                return False
    return True


def simpson_density_check(class_dims: Sequence[int], root_codims: Sequence[int], n: int) -> bool:
    """
    Density of C_1 C_2 ... C_N in SL(n).

    Args:
        class_dims: Dimensions of the conjugacy classes C_i
        root_codims: r_i, the maximal codimension of an eigenspace of A_i ∈ C_i
        n: Matrix size

    Returns:
        True iff Σ dim C_i ≥ (n+1)(n−2) and Σ r_i ≥ n
    """
    if len(class_dims) != len(root_codims) or not class_dims:
        raise DimensionMismatchError("class dimensions and codimensions must be nonempty and of equal length")
    for r in root_codims:
        if not 0 <= r <= n:
            raise ValueError(f"codimension {r} outside 0..{n}")
    return sum(class_dims) >= (n + 1) * (n - 2) and sum(root_codims) >= n


def conjugacy_class_invariants(multiplicities: Sequence[int], n: int) -> Tuple[int, int]:
    """
    (dim C, r) for the semisimple class with eigenvalue multiplicities m_j.

    dim C = n² − Σ m_j² and r = n − max m_j.
    """
    if sum(multiplicities) != n or any(m <= 0 for m in multiplicities):
        raise DimensionMismatchError(f"multiplicities {list(multiplicities)} do not partition n={n}")
    return n * n - sum(m * m for m in multiplicities), n - max(multiplicities)


def deligne_rigidity_check(class_dims: Sequence[int], n: int) -> bool:
    """Σ dim C_i = 2n² − 2, the dimension count under which an irreducible solution is rigid."""
    return sum(class_dims) == 2 * n * n - 2


def zero_sum_triples(n: int, summands: int) -> List[MultiHornTriple]:
    """Multi-term triples used by check_zero_sum for ``summands`` + 1 spectra."""
    return list(_multi_triples(n, summands))
