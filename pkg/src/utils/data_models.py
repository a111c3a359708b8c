"""
Data models and type definitions for the application.

All value types are frozen dataclasses validated at construction, so any
instance that exists satisfies its invariants and can serve as a memo key.
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from src.utils.exceptions import (
    InvalidPartitionError,
    InvalidSpectrumError,
    InvalidSubsetError,
    InvariantViolationError,
)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative integer vector in canonical form (no trailing zeros)."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        for i, x in enumerate(parts):
            if x < 0:
                raise InvalidPartitionError(f"negative part {x} at index {i}")
            if i > 0 and x > parts[i - 1]:
                raise InvalidPartitionError(f"parts not weakly decreasing at index {i}: {list(parts)}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def part(self, index: int) -> int:
        """Zero-based part access that reads past the end as 0."""
        return self.parts[index] if index < len(self.parts) else 0

    def padded(self, length: int) -> Tuple[int, ...]:
        if length < len(self.parts):
            raise InvalidPartitionError(f"{list(self.parts)} has more than {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    def scaled(self, factor: int) -> "Partition":
        return Partition(tuple(factor * x for x in self.parts))

    def to_list(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")" if self.parts else "∅"


@dataclass(frozen=True)
class SchubertIndex:
    """Cardinality-p subset of {1, ..., n}, stored sorted."""
    n: int
    elements: Tuple[int, ...]

    def __post_init__(self):
        elements = tuple(int(x) for x in self.elements)
        if self.n < 1:
            raise InvalidSubsetError(f"ambient size must be positive, got {self.n}")
        if not 1 <= len(elements) <= self.n:
            raise InvalidSubsetError(f"cardinality {len(elements)} outside 1..{self.n}")
        for i, x in enumerate(elements):
            if not 1 <= x <= self.n:
                raise InvalidSubsetError(f"element {x} outside 1..{self.n}")
            if i > 0 and x <= elements[i - 1]:
                raise InvalidSubsetError(f"elements must be strictly increasing: {list(elements)}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "SchubertIndex":
        return cls(n, tuple(elements))

    @property
    def p(self) -> int:
        return len(self.elements)

    @property
    def weight(self) -> int:
        """Number of cells of the associated diagram."""
        return sum(self.elements) - self.p * (self.p + 1) // 2

    def to_list(self) -> List[int]:
        return list(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"


@dataclass(frozen=True)
class Spectrum:
    """Real spectrum sorted descending."""
    values: Tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(x) for x in self.values)
        if not values:
            raise InvalidSpectrumError("spectrum must have at least one entry")
        for i, x in enumerate(values):
            if not math.isfinite(x):
                raise InvalidSpectrumError(f"non-finite entry {x} at index {i}")
            if i > 0 and x > values[i - 1]:
                raise InvalidSpectrumError(f"spectrum not sorted descending at index {i}: {list(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, *values: float) -> "Spectrum":
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def total(self) -> float:
        return math.fsum(self.values)

    @property
    def spread(self) -> float:
        return self.values[0] - self.values[-1]

    def negated_reversed(self) -> "Spectrum":
        """Spectrum of -H given the spectrum of H."""
        return Spectrum(tuple(-x for x in reversed(self.values)))

    def shifted(self, t: float) -> "Spectrum":
        return Spectrum(tuple(x + t for x in self.values))

    def to_list(self) -> List[float]:
        return list(self.values)


@dataclass(frozen=True)
class HornTriple:
    """
    One inequality of a spectral system.

    For the Hermitian system ``degree`` is 0 and the triple encodes
    λ_K(C) ≤ λ_I(A) + λ_J(B). Quantum triples carry their degree d and obey
    |σ_I| + |σ_J| = |σ_K| + n·d. ``c`` is None when the triple was admitted
    without computing its coefficient.
    """
    p: int
    I: SchubertIndex
    J: SchubertIndex
    K: SchubertIndex
    c: Optional[int] = None
    degree: int = 0

    def __post_init__(self):
        n = self.I.n
        if not (self.J.n == n and self.K.n == n):
            raise InvariantViolationError("triple mixes ambient sizes")
        if not (self.I.p == self.J.p == self.K.p == self.p) or not 1 <= self.p < n:
            raise InvariantViolationError(f"triple cardinalities must all equal p={self.p} < n={n}")
        if self.I.weight + self.J.weight != self.K.weight + n * self.degree:
            raise InvariantViolationError(f"weight balance fails for {self.key()}")
        if self.c is not None and self.c <= 0:
            raise InvariantViolationError(f"non-positive coefficient {self.c} for {self.key()}")

    def key(self) -> Tuple[int, Tuple[int, ...], Tuple[int, ...], Tuple[int, ...], int]:
        return (self.p, self.I.elements, self.J.elements, self.K.elements, self.degree)

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "I": self.I.to_list(), "J": self.J.to_list(), "K": self.K.to_list(),
                "d": self.degree, "c": self.c}


@dataclass(frozen=True)
class MultiHornTriple:
    """Inequality λ_K(-H_N) ≤ Σ_m λ_{I_m}(H_m) for an N-term zero sum."""
    p: int
    factors: Tuple[SchubertIndex, ...]
    K: SchubertIndex
    c: int

    def __post_init__(self):
        if sum(f.weight for f in self.factors) != self.K.weight:
            raise InvariantViolationError("weight balance fails for multi-triple")

    def key(self) -> Tuple[Any, ...]:
        return (self.p, tuple(f.elements for f in self.factors), self.K.elements)

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "factors": [f.to_list() for f in self.factors], "K": self.K.to_list(),
                "c": self.c}


@dataclass(frozen=True)
class QuantumTerm:
    """One term c·q^d·σ_K of a quantum product."""
    K: SchubertIndex
    d: int
    coeff: int

    def __post_init__(self):
        if self.coeff <= 0 or self.d < 0:
            raise InvariantViolationError(f"invalid quantum term {self}")

    @classmethod
    def from_product(cls, I: SchubertIndex, J: SchubertIndex, K: SchubertIndex, d: int,
                     coeff: int) -> "QuantumTerm":
        if I.weight + J.weight != K.weight + I.n * d:
            raise InvariantViolationError(
                f"weight bookkeeping fails: |σ_I|+|σ_J|={I.weight + J.weight}, |σ_K|+nd={K.weight + I.n * d}"
            )
        return cls(K, d, coeff)

    def to_dict(self) -> Dict[str, Any]:
        return {"K": self.K.to_list(), "d": self.d, "coeff": self.coeff}


class WitnessKind(Enum):
    """What an infeasibility certificate points at."""
    NONE = "none"
    INEQUALITY = "inequality"
    TRACE = "trace"


Witness = Union[HornTriple, MultiHornTriple]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a feasibility decision with the tightest observed slack."""
    feasible: bool
    slack: float
    witness: Optional[Witness] = None
    witness_kind: WitnessKind = WitnessKind.NONE
    inequality: str = ""
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        if not self.feasible and self.witness_kind is WitnessKind.NONE:
            raise InvariantViolationError("infeasible verdict without witness")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "feasible": self.feasible,
            "slack": self.slack,
            "witness_kind": self.witness_kind.value,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "inequality": self.inequality,
            "notes": list(self.notes),
        }


class StabilityStatus(Enum):
    """Three-way classification of a triple of filtrations."""
    STABLE = "stable"
    SEMISTABLE_ONLY = "semistable_only"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityReport:
    status: StabilityStatus
    slack: float
    witness: Optional[HornTriple] = None
    inequality: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "slack": self.slack,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "inequality": self.inequality,
        }


@dataclass(frozen=True)
class SampleFailure:
    trial: int
    seed: int
    spectrum: Tuple[float, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"trial": self.trial, "seed": self.seed, "spectrum": list(self.spectrum)}


@dataclass(frozen=True)
class SampleReport:
    """Summary of a Monte-Carlo harness run."""
    kind: str
    trials: int
    seed: int
    all_pass: bool
    worst_slack: float
    failures: Tuple[SampleFailure, ...] = ()
    failure_count: int = 0
    schema_version: int = 1
    extras: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.all_pass != (len(self.failures) == 0):
            raise InvariantViolationError("all_pass must hold exactly when no failures are recorded")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "trials": self.trials,
            "seed": self.seed,
            "all_pass": self.all_pass,
            "worst_slack": self.worst_slack,
            "failure_count": self.failure_count,
            "failures": [f.to_dict() for f in self.failures],
            "extras": dict(self.extras),
        }
