"""
Closed-form quadratic and cubic solvers over the complex numbers,
plus Newton polishing of individual roots.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from config import POLISH_DERIVATIVE_GUARD
from core.models import MonicPolynomial, complex_pair
from core.poly_core import evaluate, evaluate_with_derivative

logger = logging.getLogger(__name__)

# Primitive cube root of unity exp(2*pi*i/3)
OMEGA = complex(-0.5, math.sqrt(3.0) / 2.0)


@dataclass(frozen=True)
class QuadraticRoots:
    """Roots of y^2 + b1*y + b0 = 0; y1 takes the minus branch, y2 the plus branch"""
    y1: complex
    y2: complex

    def as_tuple(self) -> Tuple[complex, complex]:
        return (self.y1, self.y2)

    def to_dict(self) -> Dict[str, Any]:
        return {"y1": complex_pair(self.y1), "y2": complex_pair(self.y2)}


@dataclass(frozen=True)
class CubicRoots:
    """Roots of z^3 + a2*z^2 + a1*z + a0 = 0, sorted by (re, im)"""
    z1: complex
    z2: complex
    z3: complex

    def as_tuple(self) -> Tuple[complex, complex, complex]:
        return (self.z1, self.z2, self.z3)

    def to_dict(self) -> Dict[str, Any]:
        return {"z1": complex_pair(self.z1), "z2": complex_pair(self.z2), "z3": complex_pair(self.z3)}


def principal_cbrt(w: complex) -> complex:
    """Cube root with argument in (-pi/3, pi/3]."""
    if w == 0:
        return 0j
    angle = cmath.phase(w)
    if angle <= -math.pi:
        # -x - 0j reports -pi; the principal branch wants +pi
        angle = math.pi
    return abs(w) ** (1.0 / 3.0) * cmath.exp(1j * angle / 3.0)


def solve_quadratic(b1: complex, b0: complex) -> QuadraticRoots:
    """
    Solve y^2 + b1*y + b0 = 0.

    y_lam = (-b1 + (-1)^lam * sqrt(b1^2 - 4*b0)) / 2 with the principal
    square root. The larger-magnitude root comes from the formula and the
    other one from the product y1*y2 = b0, which avoids cancellation.
    """
    b1, b0 = complex(b1), complex(b0)
    s = cmath.sqrt(b1 * b1 - 4.0 * b0)
    minus = -b1 - s
    plus = -b1 + s

    if b0 == 0:
        return QuadraticRoots(minus / 2.0, plus / 2.0)
    if abs(minus) >= abs(plus):
        y1 = minus / 2.0
        return QuadraticRoots(y1, b0 / y1)
    y2 = plus / 2.0
    return QuadraticRoots(b0 / y2, y2)


def cardano_branches(a2: complex, a1: complex, a0: complex) -> Tuple[complex, complex, complex]:
    """
    The three Cardano roots of z^3 + a2*z^2 + a1*z + a0 in branch order
    k = 0, 1, 2 (t_k = omega^k * u + omega^-k * v), before sorting.
    """
    a2, a1, a0 = complex(a2), complex(a1), complex(a0)
    shift = a2 / 3.0
    p = a1 - a2 * a2 / 3.0
    q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0

    sqrt_d = cmath.sqrt(q * q / 4.0 + p * p * p / 27.0)
    w_plus = -q / 2.0 + sqrt_d
    w_minus = -q / 2.0 - sqrt_d
    w = w_plus if abs(w_plus) >= abs(w_minus) else w_minus

    if w == 0:
        # p == 0 as well: the depressed cubic is t^3 + q = 0
        u = principal_cbrt(-q)
        t = (u, OMEGA * u, OMEGA * OMEGA * u)
    else:
        u = principal_cbrt(w)
        v = -p / (3.0 * u)
        t = (
            u + v,
            OMEGA * u + OMEGA.conjugate() * v,
            OMEGA.conjugate() * u + OMEGA * v,
        )
    logger.debug("cardano p=%s q=%s u^3=%s", p, q, w)
    return tuple(tk - shift for tk in t)


def solve_cubic(a2: complex, a1: complex, a0: complex) -> CubicRoots:
    """
    Solve z^3 + a2*z^2 + a1*z + a0 = 0 by Cardano's formula.

    Args:
        a2, a1, a0: Complex coefficients

    Returns:
        CubicRoots sorted lexicographically by (re, im)
    """
    roots = sorted(cardano_branches(a2, a1, a0), key=lambda z: (z.real, z.imag))
    return CubicRoots(*roots)


def polish_root(p: MonicPolynomial, z0: complex, max_steps: int) -> complex:
    """
    Apply at most max_steps Newton iterations z <- z - P(z)/P'(z).

    A step is skipped when P'(z) is negligible (near-multiple root) and the
    iteration stops as soon as a step would not reduce |P(z)|.
    """
    z = complex(z0)
    for _ in range(max_steps):
        value, slope = evaluate_with_derivative(p, z)
        if value == 0:
            break
        if abs(slope) < POLISH_DERIVATIVE_GUARD * p.residual_scale(z):
            break
        candidate = z - value / slope
        if abs(evaluate(p, candidate)) >= abs(value):
            break
        z = candidate
    return z
