"""
Monte-Carlo validation harness.

Each harness draws Haar-random realizations of the prescribed spectra,
computes the spectrum of the sum or product numerically, and hands it back
to the matching combinatorial decider. Any rejected sample is a bug: the
deciders are exact characterizations, so realizable spectra always pass.

Trials are independent. Trial t of a run with seed s draws from its own
PCG64 stream keyed by (s, t), so the merged report does not depend on how
many worker processes executed the trials.
"""
import logging
from typing import Callable, List, Optional, Sequence, Tuple

import joblib
import numpy as np

from config.settings import ORACLE_CONFIG
from src.core.quantum import check_unitary_product, is_normalized
from src.core.spectral_checks import (
    check_hermitian_sum,
    check_singular_product,
    interlacing_check,
    log_singular_spectrum,
    multiplicative_weyl_check,
)
from src.oracle.matrices import (
    eig_hermitian,
    eig_unitary,
    haar_unitary,
    hermitian_with_spectrum,
    singular_spectrum,
    trial_rng,
    unitary_with_spectrum,
)
from src.utils.data_models import SampleFailure, SampleReport, Spectrum
from src.utils.exceptions import DimensionMismatchError, NormalizationError

logger = logging.getLogger(__name__)

# (trial, sampled spectrum, slack, passed)
TrialOutcome = Tuple[int, Tuple[float, ...], float, bool]


def _rank_one(beta: Spectrum) -> Optional[float]:
    """Nonzero eigenvalue b when β = (b, 0, ..., 0) with b ≥ 0."""
    if beta.values[0] >= 0 and all(x == 0 for x in beta.values[1:]):
        return beta.values[0]
    return None


def sum_trial(alpha: Spectrum, beta: Spectrum, seed: int, trial: int, tol: float) -> TrialOutcome:
    rng = trial_rng(seed, trial)
    a = hermitian_with_spectrum(alpha, haar_unitary(alpha.n, rng))
    b = hermitian_with_spectrum(beta, haar_unitary(beta.n, rng))
    gamma = eig_hermitian(a + b)
    verdict = check_hermitian_sum(alpha, beta, gamma, tol)
    passed = verdict.feasible
    rank_one = _rank_one(beta)
    if rank_one is not None:
        passed = passed and interlacing_check(alpha, rank_one, gamma, tol)
    return trial, gamma.values, verdict.slack, passed


def product_trial(lam_u: Spectrum, lam_v: Spectrum, seed: int, trial: int, tol: float) -> TrialOutcome:
    rng = trial_rng(seed, trial)
    u = unitary_with_spectrum(lam_u, haar_unitary(lam_u.n, rng))
    v = unitary_with_spectrum(lam_v, haar_unitary(lam_v.n, rng))
    lam_w = eig_unitary(u @ v)
    verdict = check_unitary_product(lam_u, lam_v, lam_w, tol)
    return trial, lam_w.values, verdict.slack, verdict.feasible


def singular_trial(sigmas: Tuple[Spectrum, ...], seed: int, trial: int, tol: float) -> TrialOutcome:
    rng = trial_rng(seed, trial)
    n = sigmas[0].n
    product = np.eye(n, dtype=complex)
    for sigma in sigmas:
        left, right = haar_unitary(n, rng), haar_unitary(n, rng)
        product = product @ ((left * np.asarray(sigma.values)) @ right)
    sigma_product = singular_spectrum(product)
    closing = Spectrum(tuple(1.0 / x for x in reversed(sigma_product.values)))
    verdict = check_singular_product(list(sigmas) + [closing], tol)
    passed = verdict.feasible
    if len(sigmas) == 2:
        passed = passed and multiplicative_weyl_check(sigmas[0], sigmas[1], sigma_product, tol)
    return trial, sigma_product.values, verdict.slack, passed


class SpectralSampler:
    """Runs trial functions in parallel and merges them into a SampleReport."""

    def __init__(self, trials: int = None, seed: int = None, jobs: int = None):
        """
        Initialize the sampler.

        Args:
            trials: Default number of trials per run
            seed: Default master seed
            jobs: Default number of joblib workers
        """
        self.trials = trials or ORACLE_CONFIG["default_trials"]
        self.seed = ORACLE_CONFIG["default_seed"] if seed is None else seed
        self.jobs = jobs or ORACLE_CONFIG["default_jobs"]
        self.max_reported_failures = ORACLE_CONFIG["max_reported_failures"]

    def _check_dimension(self, n: int) -> None:
        if n > ORACLE_CONFIG["max_dimension"]:
            raise DimensionMismatchError(f"oracle supports n ≤ {ORACLE_CONFIG['max_dimension']}, got {n}")

    def run(self, kind: str, trial_fn: Callable[..., TrialOutcome], args: tuple,
            trials: int = None, seed: int = None, jobs: int = None) -> SampleReport:
        """
        Execute ``trial_fn(*args, seed, trial, tol)`` for every trial index.

        Args:
            kind: Report label (sum, product or singular)
            trial_fn: Module-level trial function
            args: Leading arguments of the trial function, tolerance last

        Returns:
            SampleReport with failures in trial order
        """
        trials = self.trials if trials is None else trials
        seed = self.seed if seed is None else seed
        jobs = self.jobs if jobs is None else jobs
        if trials <= 0:
            raise ValueError(f"trials must be positive, got {trials}")
        if seed < 0:
            raise ValueError(f"seed must be nonnegative, got {seed}")
        *leading, tol = args

        logger.info(f"Sampling {kind}: {trials} trials, seed {seed}, {jobs} jobs")
        outcomes: List[TrialOutcome] = joblib.Parallel(n_jobs=jobs)(
            joblib.delayed(trial_fn)(*leading, seed, trial, tol) for trial in range(trials)
        )
        outcomes.sort(key=lambda outcome: outcome[0])

        failed = [SampleFailure(t, seed, values) for t, values, _, passed in outcomes if not passed]
        worst = min(slack for _, _, slack, _ in outcomes)
        leading_values = [values[0] for _, values, _, _ in outcomes]
        extras = {
            "n": len(outcomes[0][1]),
            "tolerance": tol,
            "first_entry_min": min(leading_values),
            "first_entry_max": max(leading_values),
        }
        logger.info(f"Finished {kind}: {len(failed)} failures, worst slack {worst:.3e}")
        return SampleReport(
            kind=kind,
            trials=trials,
            seed=seed,
            all_pass=not failed,
            worst_slack=worst,
            failures=tuple(failed[: self.max_reported_failures]),
            failure_count=len(failed),
            extras=extras,
        )

    def monte_carlo_sum(self, alpha: Spectrum, beta: Spectrum, trials: int = None, seed: int = None,
                        jobs: int = None) -> SampleReport:
        """Sample λ(A + B) for independent Haar conjugates of diag(α), diag(β)."""
        if alpha.n != beta.n:
            raise DimensionMismatchError(f"spectra of lengths {alpha.n} and {beta.n}")
        self._check_dimension(alpha.n)
        return self.run("sum", sum_trial, (alpha, beta, ORACLE_CONFIG["sum_tolerance"]), trials, seed, jobs)

    def monte_carlo_product(self, lam_u: Spectrum, lam_v: Spectrum, trials: int = None, seed: int = None,
                            jobs: int = None) -> SampleReport:
        """Sample λ(UV) for independent Haar conjugates of the given unitary spectra."""
        tol = ORACLE_CONFIG["product_tolerance"]
        if lam_u.n != lam_v.n:
            raise DimensionMismatchError(f"spectra of lengths {lam_u.n} and {lam_v.n}")
        for s in (lam_u, lam_v):
            if not is_normalized(s, tol):
                raise NormalizationError(f"{s.to_list()} is not a normalized unitary spectrum")
        self._check_dimension(lam_u.n)
        return self.run("product", product_trial, (lam_u, lam_v, tol), trials, seed, jobs)

    def monte_carlo_singular(self, sigmas: Sequence[Spectrum], trials: int = None, seed: int = None,
                             jobs: int = None) -> SampleReport:
        """
        Sample products A_1 ⋯ A_m with A_i = U_i diag(σ_i) V_i.

        Each sample closes the product with A_{m+1} = (A_1 ⋯ A_m)^{-1}, whose
        singular spectrum is the reversed reciprocal of σ(A_1 ⋯ A_m), and
        checks the m + 1 singular spectra together.
        """
        tol = ORACLE_CONFIG["singular_tolerance"]
        if not sigmas:
            raise ValueError("at least one singular spectrum is required")
        n = sigmas[0].n
        if any(s.n != n for s in sigmas):
            raise DimensionMismatchError(f"spectra of lengths {[s.n for s in sigmas]}")
        for s in sigmas:
            log_singular_spectrum(s, tol)
        self._check_dimension(n)
        return self.run("singular", singular_trial, (tuple(sigmas), tol), trials, seed, jobs)


# Global instance for module-level helpers
spectral_sampler = SpectralSampler()


def monte_carlo_sum(alpha: Spectrum, beta: Spectrum, trials: int = None, seed: int = None,
                    jobs: int = None) -> SampleReport:
    return spectral_sampler.monte_carlo_sum(alpha, beta, trials, seed, jobs)


def monte_carlo_product(lam_u: Spectrum, lam_v: Spectrum, trials: int = None, seed: int = None,
                        jobs: int = None) -> SampleReport:
    return spectral_sampler.monte_carlo_product(lam_u, lam_v, trials, seed, jobs)


def monte_carlo_singular(sigmas: Sequence[Spectrum], trials: int = None, seed: int = None,
                         jobs: int = None) -> SampleReport:
    return spectral_sampler.monte_carlo_singular(sigmas, trials, seed, jobs)
