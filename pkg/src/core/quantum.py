"""
Quantum Schubert Calculus and the Unitary Product Checker

Structure constants of the small quantum cohomology of the Grassmannian of
p-planes in C^n, computed by n-rim-hook reduction of the classical product:

    1. expand σ_I·σ_J classically, keeping diagrams with at most p rows;
    2. write each diagram ν through its beta numbers β_i = ν_i + p - i;
    3. while some β_i ≥ n, move it to β_i - n. A collision or a negative
       target kills the term; otherwise the removed rim hook contributes one
       power of q and the sign (-1)^(p - height).

Diagrams that reach the p × (n-p) rectangle are the quantum terms q^d σ_K.
The unitary checker evaluates the inequalities these terms produce on
normalized eigenvalue exponents.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import NUMERICS_CONFIG
from src.core.littlewood_richardson import tensor_decompose
from src.core.partitions import dual_subset, partition_of_subset, subset_of_partition, subsets
from src.utils.data_models import HornTriple, Partition, QuantumTerm, SchubertIndex, Spectrum, Verdict, WitnessKind
from src.utils.exceptions import DimensionMismatchError, InvariantViolationError, NormalizationError

logger = logging.getLogger(__name__)


def _tolerance(tol: Optional[float]) -> float:
    tol = NUMERICS_CONFIG["default_tolerance"] if tol is None else float(tol)
    if tol < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    return tol


def _reduce_rim_hooks(shape: Partition, p: int, n: int) -> Optional[Tuple[Partition, int, int]]:
    """
    Strip n-rim hooks from ``shape`` until it fits the p-row, (n-p)-column box.

    Returns:
        (reduced shape, degree, sign), or None when the reduction vanishes
    """
    betas = [shape.part(i) + p - 1 - i for i in range(p)]
    degree, sign = 0, 1
    while max(betas) >= n:
        top = max(betas)
        landing = top - n
        if landing < 0 or landing in betas:
            return None
        height = 1 + sum(1 for b in betas if landing < b < top)
        if (p - height) % 2:
            sign = -sign
        betas[betas.index(top)] = landing
        degree += 1
    betas.sort(reverse=True)
    return Partition(tuple(b - (p - 1 - i) for i, b in enumerate(betas))), degree, sign


def _check_pair(I: SchubertIndex, J: SchubertIndex) -> None:
    if I.n != J.n or I.p != J.p:
        raise DimensionMismatchError(f"indices {I} (n={I.n}) and {J} (n={J.n}) live in different Grassmannians")


@lru_cache(maxsize=None)
def _quantum_product(I: SchubertIndex, J: SchubertIndex) -> Tuple[QuantumTerm, ...]:
    p, n = I.p, I.n
    accumulated: Dict[Tuple[int, SchubertIndex], int] = defaultdict(int)
    for shape, c in tensor_decompose(partition_of_subset(I), partition_of_subset(J), rows=p):
        reduced = _reduce_rim_hooks(shape, p, n)
        if reduced is None:
            continue
        box_shape, degree, sign = reduced
        accumulated[(degree, subset_of_partition(box_shape, p, n))] += sign * c

    terms = []
    for (degree, K), coeff in sorted(accumulated.items(), key=lambda item: (item[0][0], item[0][1].elements)):
        if coeff < 0:
            raise InvariantViolationError(f"negative quantum coefficient {coeff} for q^{degree} σ_{K} in {I}*{J}")
        if coeff:
            terms.append(QuantumTerm.from_product(I, J, K, degree, coeff))
    return tuple(terms)


def quantum_product(I: SchubertIndex, J: SchubertIndex) -> List[QuantumTerm]:
    """
    Quantum product σ_I * σ_J = Σ c_{IJ}^K(d) q^d σ_K.

    Args:
        I: First Schubert index
        J: Second Schubert index over the same Grassmannian

    Returns:
        Terms with nonzero coefficient ordered by degree then K
    """
    _check_pair(I, J)
    return list(_quantum_product(I, J))


def quantum_lr(I: SchubertIndex, J: SchubertIndex, K: SchubertIndex, d: int) -> int:
    """Coefficient of q^d σ_K in σ_I * σ_J; zero off the weight bookkeeping."""
    _check_pair(I, J)
    _check_pair(I, K)
    if d < 0 or I.weight + J.weight != K.weight + I.n * d:
        return 0
    for term in _quantum_product(I, J):
        if term.d == d and term.K == K:
            return term.coeff
    return 0


def normalization_lift(angles: Sequence[float], tol: Optional[float] = None) -> Tuple[Spectrum, bool]:
    """
    Lift eigenvalue arguments (in turns) to normalized exponents.

    Reducing mod 1 gives x_1 ≥ ... ≥ x_n in [0, 1) with integer sum m for an
    element of SU(n); subtracting 1 from the m largest gives the only lift
    that is sorted, sums to zero and has spread at most 1.

    Returns:
        (normalized spectrum, True when the spread equals 1 within tol)

    Raises:
        NormalizationError: If the exponents do not sum to an integer
    """
    tol = _tolerance(tol)
    if len(angles) == 0:
        raise NormalizationError("no eigenvalue exponents given")
    reduced = np.mod(np.asarray(angles, dtype=float), 1.0)
    reduced[reduced >= 1.0] = 0.0
    x = sorted(reduced.tolist(), reverse=True)
    total = sum(x)
    m = int(round(total))
    if abs(total - m) > tol:
        raise NormalizationError(f"exponents sum to {total:.12g} mod 1; not a special unitary spectrum")
    lifted = x[m:] + [v - 1.0 for v in x[:m]]
    shift = (total - m) / len(x)
    spectrum = Spectrum(tuple(v - shift for v in lifted))
    boundary = spectrum.spread >= 1.0 - tol
    if boundary:
        logger.warning(f"Normalized spectrum {spectrum.to_list()} sits on the boundary λ_1 - λ_n = 1")
    return spectrum, boundary


def normalize_unitary_spectrum(angles: Sequence[float], tol: Optional[float] = None) -> Spectrum:
    """Decreasing, zero-sum representatives of ``angles`` mod 1 with λ_1 − λ_n ≤ 1."""
    return normalization_lift(angles, tol)[0]


def is_normalized(spectrum: Spectrum, tol: Optional[float] = None) -> bool:
    tol = _tolerance(tol)
    return abs(spectrum.total) <= tol and spectrum.spread <= 1.0 + tol


@dataclass(frozen=True)
class UnitaryInequalitySystem:
    """
    Incidence form of the quantum inequalities λ_{I*}(U) + λ_{J*}(V) ≤ d + λ_{K*}(W).

    One row per quantum term of σ_I * σ_J, in canonical (p, I, J, K, d) order.
    """
    n: int
    triples: Tuple[HornTriple, ...]
    left: np.ndarray
    right: np.ndarray
    target: np.ndarray
    degrees: np.ndarray

    def slacks(self, lam_u: Spectrum, lam_v: Spectrum, lam_w: Spectrum) -> np.ndarray:
        u, v, w = (np.asarray(s.values) for s in (lam_u, lam_v, lam_w))
        return self.degrees + self.target @ w - self.left @ u - self.right @ v


def quantum_triples(n: int) -> List[HornTriple]:
    """Every (p, I, J, K, d) with c_{IJ}^K(d) ≠ 0 for 1 ≤ p < n."""
    triples = []
    for p in range(1, n):
        pool = list(subsets(n, p))
        for I in pool:
            for J in pool:
                for term in _quantum_product(I, J):
                    triples.append(HornTriple(p, I, J, term.K, term.coeff, term.d))
    triples.sort(key=HornTriple.key)
    return triples


@lru_cache(maxsize=None)
def unitary_system(n: int) -> UnitaryInequalitySystem:
    triples = quantum_triples(n)
    left, right, target = (np.zeros((len(triples), n)) for _ in range(3))
    for row, t in enumerate(triples):
        left[row, [i - 1 for i in dual_subset(t.I).elements]] = 1.0
        right[row, [j - 1 for j in dual_subset(t.J).elements]] = 1.0
        target[row, [k - 1 for k in dual_subset(t.K).elements]] = 1.0
    degrees = np.array([float(t.degree) for t in triples])
    logger.info(f"Generated {len(triples)} quantum inequalities for n={n}")
    return UnitaryInequalitySystem(n, tuple(triples), left, right, target, degrees)


def describe_quantum_inequality(triple: HornTriple) -> str:
    I, J, K = (dual_subset(x) for x in (triple.I, triple.J, triple.K))
    return f"λ_{I}(U) + λ_{J}(V) ≤ {triple.degree} + λ_{K}(W)"


def check_unitary_product(lam_u: Spectrum, lam_v: Spectrum, lam_w: Spectrum,
                          tol: Optional[float] = None) -> Verdict:
    """
    Decide whether unitary U, V with normalized spectra λU, λV can have W = UV of spectrum λW.

    Args:
        lam_u: Normalized exponents of U
        lam_v: Normalized exponents of V
        lam_w: Normalized exponents of the product W = UV
        tol: Absolute tolerance

    Returns:
        Verdict carrying the first violated quantum triple (degree included)

    Raises:
        NormalizationError: If any input is not normalized within tol
    """
    tol = _tolerance(tol)
    n = lam_u.n
    if lam_v.n != n or lam_w.n != n:
        raise DimensionMismatchError(f"spectra of lengths {lam_u.n}, {lam_v.n}, {lam_w.n}")
    for name, s in (("U", lam_u), ("V", lam_v), ("W", lam_w)):
        if not is_normalized(s, tol):
            raise NormalizationError(f"spectrum of {name} {s.to_list()} is not normalized "
                                     f"(sum {s.total:.3g}, spread {s.spread:.3g})")

    system = unitary_system(n)
    if not system.triples:
        return Verdict(True, 0.0)
    slacks = system.slacks(lam_u, lam_v, lam_w)
    worst = float(slacks.min())
    violated = np.flatnonzero(slacks < -tol)
    if violated.size:
        triple = system.triples[int(violated[0])]
        return Verdict(False, worst, witness=triple, witness_kind=WitnessKind.INEQUALITY,
                       inequality=describe_quantum_inequality(triple))
    return Verdict(True, worst)
