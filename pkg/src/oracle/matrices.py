"""
Random matrices with prescribed spectra and a cyclic Jacobi eigensolver.

Haar unitaries come from the QR factorization of a complex Gaussian matrix
with the phases of R's diagonal pushed into Q, which makes the distribution
invariant under multiplication on either side.
"""
import logging
import math
from typing import Optional, Tuple

import numpy as np

from config.settings import NUMERICS_CONFIG
from src.core.quantum import normalization_lift
from src.utils.data_models import Spectrum
from src.utils.exceptions import ConvergenceError, NonHermitianError, NonUnitaryError, NormalizationError

logger = logging.getLogger(__name__)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent PCG64 stream for one trial, derived from (seed, trial)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(trial,))))


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Haar-distributed n × n unitary.

    Args:
        n: Matrix size
        rng: Generator owned by the caller

    Returns:
        Complex unitary matrix
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _require_unitary(u: np.ndarray, tol: float) -> None:
    deviation = np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0])))
    if deviation > tol:
        raise NonUnitaryError(f"matrix deviates from unitary by {deviation:.3g}")


def _require_square(m: np.ndarray, n: int) -> None:
    if m.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got shape {m.shape}")


def hermitian_with_spectrum(spectrum: Spectrum, u: np.ndarray, tol: Optional[float] = None) -> np.ndarray:
    """U·diag(λ)·U*."""
    tol = NUMERICS_CONFIG["unitary_check_tolerance"] if tol is None else tol
    _require_square(u, spectrum.n)
    _require_unitary(u, tol)
    h = (u * np.asarray(spectrum.values)) @ u.conj().T
    return (h + h.conj().T) / 2.0


def unitary_with_spectrum(spectrum: Spectrum, u: np.ndarray, tol: Optional[float] = None) -> np.ndarray:
    """
    U·diag(e^{2πiλ_j})·U* for exponents λ summing to an integer.

    Raises:
        NormalizationError: If Σλ is not an integer within tol
        NonUnitaryError: If U is not unitary
    """
    tol = NUMERICS_CONFIG["unitary_check_tolerance"] if tol is None else tol
    total = spectrum.total
    if abs(total - round(total)) > max(tol, NUMERICS_CONFIG["default_tolerance"]):
        raise NormalizationError(f"exponents sum to {total:.12g}; determinant would not be 1")
    _require_square(u, spectrum.n)
    _require_unitary(u, tol)
    phases = np.exp(2j * np.pi * np.asarray(spectrum.values))
    return (u * phases) @ u.conj().T


def jacobi_eigh(m: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Cyclic Jacobi diagonalization of a Hermitian matrix.

    Each step zeroes the (p, q) entry with the unitary
    G = [[c, -s], [e^{-iφ}s, e^{-iφ}c]], where A_pq = |A_pq|e^{iφ} and
    tan 2θ = 2|A_pq| / (A_pp - A_qq).

    Returns:
        (eigenvalues, eigenvectors as columns), unsorted

    Raises:
        ConvergenceError: If the off-diagonal norm is still above threshold after the sweep cap
    """
    a = np.array(m, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    threshold = NUMERICS_CONFIG["jacobi_relative_threshold"] * scale
    max_sweeps = NUMERICS_CONFIG["jacobi_max_sweeps"]

    for sweep in range(max_sweeps + 1):
        off = math.sqrt(max(float(np.sum(np.abs(a) ** 2) - np.sum(np.abs(np.diagonal(a)) ** 2)), 0.0))
        logger.debug(f"Jacobi sweep {sweep}: off-diagonal norm {off:.3e}")
        if off <= threshold:
            return np.real(np.diagonal(a)).copy(), v
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                z = a[p, q]
                modulus = abs(z)
                if modulus == 0.0:
                    continue
                phase = z / modulus
                theta = 0.5 * math.atan2(2.0 * modulus, float(np.real(a[p, p] - a[q, q])))
                c, s = math.cos(theta), math.sin(theta)
                g = np.array([[c, -s], [s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = g.conj().T @ a[idx, :]
                v[:, idx] = v[:, idx] @ g

    raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def eig_hermitian(m: np.ndarray, tol: Optional[float] = None) -> Spectrum:
    """
    Eigenvalues of a Hermitian matrix, sorted descending.

    Raises:
        NonHermitianError: If ‖M − M*‖_max exceeds tol relative to the entry scale
    """
    tol = NUMERICS_CONFIG["hermitian_check_tolerance"] if tol is None else tol
    m = np.asarray(m, dtype=complex)
    _require_square(m, m.shape[0])
    deviation = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if deviation > tol * max(1.0, float(np.max(np.abs(m)))):
        raise NonHermitianError(f"matrix deviates from Hermitian by {deviation:.3g}")
    values, _ = jacobi_eigh((m + m.conj().T) / 2.0)
    return Spectrum(tuple(sorted(values.tolist(), reverse=True)))


def eig_unitary_with_boundary(m: np.ndarray, tol: Optional[float] = None) -> Tuple[Spectrum, bool]:
    tol = NUMERICS_CONFIG["unitary_check_tolerance"] if tol is None else tol
    m = np.asarray(m, dtype=complex)
    _require_square(m, m.shape[0])
    _require_unitary(m, tol)
    x = (m + m.conj().T) / 2.0
    y = (m - m.conj().T) / 2j
    _, vectors = jacobi_eigh(x + NUMERICS_CONFIG["unitary_mixing_weight"] * y)
    rayleigh = np.einsum("ij,ik,kj->j", vectors.conj(), m, vectors)
    angles = np.angle(rayleigh) / (2.0 * np.pi)
    return normalization_lift(angles.tolist(), NUMERICS_CONFIG["default_tolerance"])


def eig_unitary(m: np.ndarray, tol: Optional[float] = None) -> Spectrum:
    """
    Normalized eigenvalue exponents of a special unitary matrix.

    M is normal, so X = (M + M*)/2 and Y = (M − M*)/2i commute and share
    eigenvectors with M. They are found by diagonalizing X + wY, after which
    each eigenvalue of M is the Rayleigh quotient v*Mv. Two distinct
    eigenvalues e^{2πiθ} with equal cos 2πθ + w sin 2πθ would be mixed; the
    irrational weight w makes that non-generic.
    """
    return eig_unitary_with_boundary(m, tol)[0]


def singular_spectrum(m: np.ndarray) -> Spectrum:
    """σ(M) = λ(√(M*M)), sorted descending."""
    m = np.asarray(m, dtype=complex)
    gram = m.conj().T @ m
    values = eig_hermitian((gram + gram.conj().T) / 2.0).values
    return Spectrum(tuple(math.sqrt(max(x, 0.0)) for x in values))
