"""
Littlewood-Richardson coefficients by the tableau rule.

c_{αβ}^γ counts the ways of filling the skew shape γ/α with |β| symbols,
β_i copies of symbol i, so that the symbols
    i)   weakly increase along rows,
    ii)  strictly increase down columns,
    iii) read right to left, top to bottom, form a lattice word.

Cells are filled in that reading order, so the lattice condition is checked
on every prefix and prunes the search as early as possible.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from config.settings import COMBINATORICS_CONFIG
from src.core.partitions import contains, partitions_of_weight
from src.utils.data_models import Partition
from src.utils.exceptions import InvalidPartitionError, MultiplicityOverflowError

logger = logging.getLogger(__name__)

MULTIPLICITY_BOUND = COMBINATORICS_CONFIG["multiplicity_bound"]


def _checked(value: int) -> int:
    if value > MULTIPLICITY_BOUND:
        raise MultiplicityOverflowError(f"multiplicity {value} exceeds the 64-bit bound")
    return value


def _count_fillings(alpha: Tuple[int, ...], beta: Tuple[int, ...], gamma: Tuple[int, ...]) -> int:
    rows = len(gamma)
    inner = alpha + (0,) * (rows - len(alpha))
    cells = [(r, c) for r in range(rows) for c in range(gamma[r] - 1, inner[r] - 1, -1)]
    table = [[0] * gamma[r] for r in range(rows)]
    counts = [0] * len(beta)
    total = 0

    def place(position: int) -> None:
        nonlocal total
        if position == len(cells):
            total = _checked(total + 1)
            return
        r, c = cells[position]
        # symbols in row r never exceed r+1
        upper = min(len(beta), r + 1)
        if c + 1 < gamma[r]:
            upper = min(upper, table[r][c + 1])
        lower = 1
        if r > 0 and c >= inner[r - 1]:
            lower = table[r - 1][c] + 1
        for symbol in range(lower, upper + 1):
            k = symbol - 1
            if counts[k] >= beta[k]:
                continue
            if k > 0 and counts[k - 1] <= counts[k]:
                continue
            counts[k] += 1
            table[r][c] = symbol
            place(position + 1)
            counts[k] -= 1
        table[r][c] = 0

    place(0)
    return total


@lru_cache(maxsize=COMBINATORICS_CONFIG["lr_cache_size"])
def _lr_cached(alpha: Tuple[int, ...], beta: Tuple[int, ...], gamma: Tuple[int, ...]) -> int:
    logger.debug(f"LR cache miss for {alpha} {beta} {gamma}")
    return _count_fillings(alpha, beta, gamma)


def lr_coefficient(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """
    Multiplicity of V_γ in V_α ⊗ V_β.

    Args:
        alpha: Inner shape
        beta: Content of the filling
        gamma: Outer shape

    Returns:
        Number of LR fillings of γ/α with content β; 0 when the weights do not
        balance or γ does not contain α and β

    Raises:
        MultiplicityOverflowError: If the count exceeds the 64-bit bound
    """
    if gamma.weight != alpha.weight + beta.weight:
        return 0
    if not contains(gamma, alpha) or not contains(gamma, beta):
        return 0
    return _lr_cached(alpha.parts, beta.parts, gamma.parts)


def tensor_decompose(alpha: Partition, beta: Partition, rows: int,
                     max_part: Optional[int] = None) -> List[Tuple[Partition, int]]:
    """
    Decompose V_α ⊗ V_β into irreducibles with at most ``rows`` rows.

    Args:
        alpha: First highest weight
        beta: Second highest weight
        rows: Row bound on the components (rank of GL)
        max_part: Optional bound on the first row, for boxed products

    Returns:
        (γ, c_{αβ}^γ) pairs with c ≠ 0, first row descending then reverse-lex
    """
    if rows < len(alpha) or rows < len(beta):
        raise InvalidPartitionError(f"rows={rows} is smaller than the length of {alpha} or {beta}")
    widest = alpha.part(0) + beta.part(0)
    if max_part is not None:
        widest = min(widest, max_part)
    decomposition = []
    for gamma in partitions_of_weight(alpha.weight + beta.weight, rows, widest):
        c = lr_coefficient(alpha, beta, gamma)
        if c:
            decomposition.append((gamma, c))
    return decomposition


def product_expansion(factors: Sequence[Partition], rows: int,
                      bound: Optional[Partition] = None, max_part: Optional[int] = None) -> Dict[Partition, int]:
    """
    Expand V_{α_1} ⊗ ... ⊗ V_{α_m} by iterating the two-factor rule.

    Components not contained in ``bound`` are dropped at every step, which is
    safe because containment only grows along the iteration.
    """
    if not factors:
        raise InvalidPartitionError("at least one factor is required")
    current: Dict[Partition, int] = {factors[0]: 1}
    if bound is not None and not contains(bound, factors[0]):
        return {}
    for factor in factors[1:]:
        following: Dict[Partition, int] = {}
        for mu, weight in current.items():
            for nu, c in tensor_decompose(mu, factor, max(rows, len(mu), len(factor)), max_part):
                if len(nu) > rows or (bound is not None and not contains(bound, nu)):
                    continue
                following[nu] = _checked(following.get(nu, 0) + weight * c)
        current = following
    return current


def multi_lr(factors: Sequence[Partition], gamma: Partition) -> int:
    """
    Multiplicity of V_γ in V_{α_1} ⊗ ... ⊗ V_{α_m}.

    Uses c^γ_{α_1...α_m} = Σ_μ c^μ_{α_1α_2} c^γ_{μα_3...α_m}; for two factors it
    equals ``lr_coefficient``.
    """
    if not factors:
        raise InvalidPartitionError("multi_lr needs at least one factor")
    if sum(f.weight for f in factors) != gamma.weight:
        return 0
    rows = max([len(gamma)] + [len(f) for f in factors])
    return product_expansion(factors, rows, bound=gamma, max_part=gamma.part(0)).get(gamma, 0)


def saturation_pair(alpha: Partition, beta: Partition, gamma: Partition, scale: int) -> Tuple[bool, bool]:
    """
    Nonvanishing of c_{αβ}^γ and of c_{Nα,Nβ}^{Nγ}.

    The saturation theorem says the two booleans always agree.
    """
    if scale < 1:
        raise ValueError(f"scale must be at least 1, got {scale}")
    base = lr_coefficient(alpha, beta, gamma) != 0
    stretched = lr_coefficient(alpha.scaled(scale), beta.scaled(scale), gamma.scaled(scale)) != 0
    return base, stretched
