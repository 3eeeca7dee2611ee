"""
Data models for Sextic Radical Solver
"""
import cmath
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from config import MAX_CONSTRAINT_COEFFICIENT
from core.errors import InvalidPolynomialError

# The scalar field: real inputs are complex numbers with im == 0
ComplexScalar = complex


def is_finite(z: complex) -> bool:
    return cmath.isfinite(z)


def complex_pair(z: complex) -> List[float]:
    """Wire form of a complex number: [re, im]"""
    return [z.real, z.imag]


@dataclass(frozen=True)
class MonicPolynomial:
    """
    Monic polynomial z^n + c_{n-1} z^{n-1} + ... + c_0.

    coeffs holds c_0..c_{n-1} in ascending order; the leading 1 is implicit.
    """
    coeffs: Tuple[complex, ...]

    def __post_init__(self):
        values = tuple(complex(c) for c in self.coeffs)
        if not values:
            raise InvalidPolynomialError("A monic polynomial needs degree >= 1")
        if not all(is_finite(c) for c in values):
            raise InvalidPolynomialError(f"Non-finite coefficient in {values}")
        object.__setattr__(self, "coeffs", values)

    @classmethod
    def from_sequence(cls, coeffs: Iterable[complex]) -> 'MonicPolynomial':
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def full_coefficients(self) -> List[complex]:
        """Ascending coefficients including the leading 1"""
        return list(self.coeffs) + [1 + 0j]

    def coefficient_scale(self) -> float:
        """max_n |c_n|"""
        return max(abs(c) for c in self.coeffs)

    def residual_scale(self, z: complex) -> float:
        """(1 + max_n |c_n|) * (1 + |z|)^degree, inf once it leaves double range"""
        with np.errstate(over="ignore"):
            return float((1.0 + self.coefficient_scale()) * np.float64(1.0 + abs(z)) ** self.degree)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "coefficients": [complex_pair(c) for c in self.coeffs],
        }


# Same type, used where a degree-6 polynomial is expected
MonicSextic = MonicPolynomial


def as_sextic(p: MonicPolynomial) -> MonicPolynomial:
    """Return p unchanged if it is a sextic, raise otherwise."""
    if p.degree != 6:
        raise InvalidPolynomialError(f"Expected a sextic (6 coefficients), got degree {p.degree}")
    return p


def sextic(coeffs: Sequence[complex]) -> MonicPolynomial:
    """Build a monic sextic from c0..c5."""
    return as_sextic(MonicPolynomial.from_sequence(coeffs))


def as_constrainable_sextic(p: MonicPolynomial) -> MonicPolynomial:
    """
    Return p unchanged if it is a sextic whose constraint residuals fit in
    double range, raise otherwise.
    """
    m = as_sextic(p).coefficient_scale()
    if m > MAX_CONSTRAINT_COEFFICIENT:
        raise InvalidPolynomialError(
            f"Coefficient magnitude {m:.3g} exceeds {MAX_CONSTRAINT_COEFFICIENT:g}; "
            f"the constraint residuals would overflow"
        )
    return p


@dataclass(frozen=True)
class RootMultiset:
    """Roots of a polynomial; repeated roots appear repeatedly"""
    roots: Tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(complex(r) for r in self.roots))

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[complex]:
        return iter(self.roots)

    def __getitem__(self, index: int) -> complex:
        return self.roots[index]

    def to_dict(self) -> Dict[str, Any]:
        return {"roots": [complex_pair(r) for r in self.roots]}


@dataclass(frozen=True)
class MatchReport:
    """Optimal pairing between two root multisets"""
    pairing: Tuple[int, ...]  # pairing[i] = index in B matched to A[i]
    max_distance: float
    total_distance: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pairing": list(self.pairing),
            "max_distance": self.max_distance,
            "total_distance": self.total_distance,
        }


@dataclass(frozen=True)
class ConstraintReport:
    """Residuals of a model's two coefficient constraints"""
    model: int
    residual_1: complex
    residual_2: complex
    scale: float
    scale_2: float
    tolerance: float
    satisfied: bool

    @classmethod
    def build(cls, model: int, residual_1: complex, residual_2: complex,
              scale: float, scale_2: float, tolerance: float) -> 'ConstraintReport':
        satisfied = (abs(residual_1) <= tolerance * scale
                     and abs(residual_2) <= tolerance * scale_2)
        return cls(
            model=model,
            residual_1=complex(residual_1),
            residual_2=complex(residual_2),
            scale=scale,
            scale_2=scale_2,
            tolerance=tolerance,
            satisfied=satisfied,
        )

    @property
    def relative_residual(self) -> float:
        """Largest residual measured in units of its own scale"""
        return max(abs(self.residual_1) / self.scale, abs(self.residual_2) / self.scale_2)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model,
            "residual_1": complex_pair(self.residual_1),
            "residual_2": complex_pair(self.residual_2),
            "scale": self.scale,
            "scale_2": self.scale_2,
            "tolerance": self.tolerance,
            "satisfied": self.satisfied,
        }


@dataclass(frozen=True)
class LabeledRoot:
    """One root z_{lam, mu} with its provenance"""
    lam: int  # 1..2
    mu: int   # 1..3
    value: complex

    def to_dict(self) -> Dict[str, Any]:
        return {"lambda": self.lam, "mu": self.mu, "value": complex_pair(self.value)}


@dataclass(frozen=True)
class LabeledResolvent:
    """A root of the intermediate (resolvent) equation"""
    label: int
    value: complex

    def to_dict(self) -> Dict[str, Any]:
        return {"label": self.label, "value": complex_pair(self.value)}


@dataclass(frozen=True)
class SexticRoots:
    """The six labeled roots of a solvable sextic plus the resolvent values"""
    model: int
    roots: Tuple[LabeledRoot, ...]
    resolvents: Tuple[LabeledResolvent, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.roots) != 6:
            raise InvalidPolynomialError(f"A sextic has 6 roots, got {len(self.roots)}")

    def values(self) -> RootMultiset:
        return RootMultiset(tuple(r.value for r in self.roots))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model,
            "roots": [r.to_dict() for r in self.roots],
            "resolvents": [y.to_dict() for y in self.resolvents],
        }
