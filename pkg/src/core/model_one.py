"""
Model one: sextics (z^3 + a2 z^2 + a1 z + a0)^2 + b1 (z^3 + ...) + b0.

The six roots are the roots of the two cubics z^3 + a2 z^2 + a1 z + a0 = y,
one per root y of the quadratic y^2 + b1 y + b0 = 0.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

from config import DEFAULT_FREE_PARAMETER, DEFAULT_TOLERANCE, POLISH_STEPS, RECOVERY_CROSS_CHECK_FACTOR
from core.errors import ConstraintRejectedError, RecoveryInconsistentError
from core.models import (
    ConstraintReport, LabeledResolvent, LabeledRoot, MonicPolynomial,
    SexticRoots, as_constrainable_sextic, complex_pair, sextic,
)
from core.radical_solvers import cardano_branches, polish_root, solve_cubic, solve_quadratic

logger = logging.getLogger(__name__)

MODEL = 1
PARAM_NAMES = ("a0", "a1", "a2", "b0", "b1")


@dataclass(frozen=True)
class ModelOneParams:
    """The five free parameters of model one"""
    a0: complex
    a1: complex
    a2: complex
    b0: complex
    b1: complex

    def __post_init__(self):
        for name in PARAM_NAMES:
            object.__setattr__(self, name, complex(getattr(self, name)))

    @classmethod
    def from_sequence(cls, values: Sequence[complex]) -> 'ModelOneParams':
        """Build from (a0, a1, a2, b0, b1)."""
        if len(values) != 5:
            raise ValueError(f"Model one takes 5 parameters, got {len(values)}")
        return cls(*values)

    def as_tuple(self) -> Tuple[complex, ...]:
        return tuple(getattr(self, name) for name in PARAM_NAMES)

    def to_dict(self) -> Dict[str, Any]:
        return {name: complex_pair(getattr(self, name)) for name in PARAM_NAMES}


def inner_polynomial(p: ModelOneParams) -> MonicPolynomial:
    """z^3 + a2 z^2 + a1 z + a0"""
    return MonicPolynomial((p.a0, p.a1, p.a2))


def resolvent_polynomial(p: ModelOneParams) -> MonicPolynomial:
    """y^2 + b1 y + b0"""
    return MonicPolynomial((p.b0, p.b1))


def coefficients_from_params(p: ModelOneParams) -> MonicPolynomial:
    """Expand the composition into c0..c5."""
    s = 2.0 * p.a0 + p.b1
    return sextic((
        p.a0 * p.a0 + p.a0 * p.b1 + p.b0,
        s * p.a1,
        p.a1 * p.a1 + s * p.a2,
        2.0 * p.a0 + 2.0 * p.a1 * p.a2 + p.b1,
        2.0 * p.a1 + p.a2 * p.a2,
        2.0 * p.a2,
    ))


def params_with_vanishing_c1(a1: complex, a2: complex, b0: complex, b1: complex) -> ModelOneParams:
    """Choose a0 = -b1/2 on the fiber, which makes c1 vanish."""
    return ModelOneParams(a0=-complex(b1) / 2.0, a1=a1, a2=a2, b0=b0, b1=b1)


def solve(p: ModelOneParams, polish_steps: int = POLISH_STEPS) -> SexticRoots:
    """
    Solve the sextic of p by radicals.

    Args:
        p: Model one parameters
        polish_steps: Newton steps applied to each root against the sextic

    Returns:
        SexticRoots labeled (lam, mu): lam indexes the quadratic root,
        mu the sorted cubic root
    """
    target = coefficients_from_params(p)
    ys = solve_quadratic(p.b1, p.b0)

    roots = []
    for lam, y in enumerate(ys.as_tuple(), start=1):
        cubic = solve_cubic(p.a2, p.a1, p.a0 - y)
        for mu, z in enumerate(cubic.as_tuple(), start=1):
            if polish_steps:
                z = polish_root(target, z, polish_steps)
            roots.append(LabeledRoot(lam=lam, mu=mu, value=z))

    return SexticRoots(
        model=MODEL,
        roots=tuple(roots),
        resolvents=(LabeledResolvent(1, ys.y1), LabeledResolvent(2, ys.y2)),
    )


def explicit_root(p: ModelOneParams, lam: int, k: int) -> complex:
    """
    Evaluate the nested radical for one root: the Cardano branch k (0..2)
    of the cubic whose constant term is shifted by y_lam.
    """
    y = solve_quadratic(p.b1, p.b0).as_tuple()[lam - 1]
    return cardano_branches(p.a2, p.a1, p.a0 - y)[k]


def constraint_residuals(c: MonicPolynomial, tol: float = DEFAULT_TOLERANCE) -> ConstraintReport:
    """
    Residuals of the two model one constraints, c1 - RHS1 and c2 - RHS2.

    Both right-hand sides are cubic in the coefficients, so both residuals
    are measured against 1 + max|c_n|^3.
    """
    c0, c1, c2, c3, c4, c5 = as_constrainable_sextic(c).coeffs
    d = 4.0 * c4 - c5 * c5
    rhs1 = d * (c3 - d * c5 / 8.0) / 8.0
    rhs2 = c3 * c5 / 2.0 + d * (4.0 * c4 - 5.0 * c5 * c5) / 64.0
    scale = 1.0 + c.coefficient_scale() ** 3
    return ConstraintReport.build(MODEL, c1 - rhs1, c2 - rhs2, scale, scale, tol)


def recover_params(c: MonicPolynomial,
                   free_a0: complex = DEFAULT_FREE_PARAMETER,
                   tol: float = DEFAULT_TOLERANCE) -> ModelOneParams:
    """
    Recover (a0, a1, a2, b0, b1) from the coefficients of a model one sextic.

    Args:
        c: Monic sextic on the model one constraint variety
        free_a0: Chosen value of the free parameter a0
        tol: Constraint tolerance

    Returns:
        ModelOneParams regenerating c

    Raises:
        ConstraintRejectedError: c is not in the family
        RecoveryInconsistentError: redundant expressions for 2*a0 + b1 disagree
    """
    report = constraint_residuals(c, tol)
    if not report.satisfied:
        raise ConstraintRejectedError(report)

    c0, c1, c2, c3, c4, c5 = c.coeffs
    a2 = c5 / 2.0
    a1 = (4.0 * c4 - c5 * c5) / 8.0
    s = c3 - 2.0 * a1 * a2  # 2*a0 + b1

    # a small divisor amplifies a residual that the constraint test let through
    limit = RECOVERY_CROSS_CHECK_FACTOR * tol * report.scale
    if abs(a2) > tol * report.scale:
        _cross_check("(c2 - a1^2)/a2", s, (c2 - a1 * a1) / a2, limit)
    if abs(a1) > tol * report.scale:
        _cross_check("c1/a1", s, c1 / a1, limit)

    a0 = complex(free_a0)
    b1 = s - 2.0 * a0
    b0 = c0 - (a0 + b1) * a0
    return ModelOneParams(a0=a0, a1=a1, a2=a2, b0=b0, b1=b1)


def _cross_check(which: str, primary: complex, alternative: complex, limit: float):
    discrepancy = abs(alternative - primary)
    logger.debug("cross-check %s: s=%s alt=%s discrepancy=%.3g", which, primary, alternative, discrepancy)
    if discrepancy > limit:
        raise RecoveryInconsistentError(which, primary, alternative, discrepancy, limit)


def solve_coefficients(c: MonicPolynomial,
                       free_a0: complex = DEFAULT_FREE_PARAMETER,
                       tol: float = DEFAULT_TOLERANCE,
                       polish_steps: int = POLISH_STEPS) -> Tuple[ModelOneParams, SexticRoots]:
    """Recover the parameters of c and solve it by radicals."""
    params = recover_params(c, free_a0, tol)
    return params, solve(params, polish_steps)
