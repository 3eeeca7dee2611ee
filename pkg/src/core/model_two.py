"""
Model two: sextics y^3 + a2 y^2 + a1 y + a0 with y = z^2 + b1 z + b0.

The six roots solve the three quadratics z^2 + b1 z + b0 = y, one per root
y of the cubic y^3 + a2 y^2 + a1 y + a0 = 0. The parameter names mirror
model one but their roles differ.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

from config import DEFAULT_FREE_PARAMETER, DEFAULT_TOLERANCE, POLISH_STEPS
from core.errors import ConstraintRejectedError
from core.models import (
    ConstraintReport, LabeledResolvent, LabeledRoot, MonicPolynomial,
    SexticRoots, as_constrainable_sextic, complex_pair, sextic,
)
from core.radical_solvers import cardano_branches, polish_root, solve_cubic, solve_quadratic

logger = logging.getLogger(__name__)

MODEL = 2
PARAM_NAMES = ("a0", "a1", "a2", "b0", "b1")


@dataclass(frozen=True)
class ModelTwoParams:
    """The five free parameters of model two"""
    a0: complex
    a1: complex
    a2: complex
    b0: complex
    b1: complex

    def __post_init__(self):
        for name in PARAM_NAMES:
            object.__setattr__(self, name, complex(getattr(self, name)))

    @classmethod
    def from_sequence(cls, values: Sequence[complex]) -> 'ModelTwoParams':
        """Build from (a0, a1, a2, b0, b1)."""
        if len(values) != 5:
            raise ValueError(f"Model two takes 5 parameters, got {len(values)}")
        return cls(*values)

    def as_tuple(self) -> Tuple[complex, ...]:
        return tuple(getattr(self, name) for name in PARAM_NAMES)

    def to_dict(self) -> Dict[str, Any]:
        return {name: complex_pair(getattr(self, name)) for name in PARAM_NAMES}


def outer_polynomial(p: ModelTwoParams) -> MonicPolynomial:
    """y^3 + a2 y^2 + a1 y + a0"""
    return MonicPolynomial((p.a0, p.a1, p.a2))


def inner_polynomial(p: ModelTwoParams) -> MonicPolynomial:
    """z^2 + b1 z + b0"""
    return MonicPolynomial((p.b0, p.b1))


def coefficients_from_params(p: ModelTwoParams) -> MonicPolynomial:
    """Expand the composition into c0..c5."""
    b1_sq = p.b1 * p.b1
    return sextic((
        p.a0 + p.a1 * p.b0 + p.a2 * p.b0 * p.b0 + p.b0 * p.b0 * p.b0,
        p.a1 * p.b1 + 2.0 * p.a2 * p.b0 * p.b1 + 3.0 * p.b0 * p.b0 * p.b1,
        p.a1 + p.a2 * (2.0 * p.b0 + b1_sq) + 3.0 * p.b0 * (p.b0 + b1_sq),
        (2.0 * p.a2 + 6.0 * p.b0 + b1_sq) * p.b1,
        p.a2 + 3.0 * (p.b0 + b1_sq),
        3.0 * p.b1,
    ))


def solve(p: ModelTwoParams, polish_steps: int = POLISH_STEPS) -> SexticRoots:
    """
    Solve the sextic of p by radicals.

    Args:
        p: Model two parameters
        polish_steps: Newton steps applied to each root against the sextic

    Returns:
        SexticRoots labeled (lam, mu): mu indexes the sorted cubic root,
        lam the quadratic branch
    """
    target = coefficients_from_params(p)
    ys = solve_cubic(p.a2, p.a1, p.a0)

    roots = []
    for mu, y in enumerate(ys.as_tuple(), start=1):
        quadratic = solve_quadratic(p.b1, p.b0 - y)
        for lam, z in enumerate(quadratic.as_tuple(), start=1):
            if polish_steps:
                z = polish_root(target, z, polish_steps)
            roots.append(LabeledRoot(lam=lam, mu=mu, value=z))

    return SexticRoots(
        model=MODEL,
        roots=tuple(roots),
        resolvents=tuple(LabeledResolvent(mu, y) for mu, y in enumerate(ys.as_tuple(), start=1)),
    )


def explicit_root(p: ModelTwoParams, k: int, lam: int) -> complex:
    """
    Evaluate the nested radical for one root: quadratic branch lam of
    z^2 + b1 z + b0 = y, with y the Cardano branch k (0..2) of the cubic.
    """
    y = cardano_branches(p.a2, p.a1, p.a0)[k]
    return solve_quadratic(p.b1, p.b0 - y).as_tuple()[lam - 1]


def constraint_residuals(c: MonicPolynomial, tol: float = DEFAULT_TOLERANCE) -> ConstraintReport:
    """
    Residuals of the two model two constraints.

    residual_1 is 27 c3 - 18 c4 c5 + 5 c5^3 as is (cubic scale);
    residual_2 is c1 - [27 c2 - 3 c4 c5^2 + c5^4] c5 / 81 (quintic scale).
    """
    c0, c1, c2, c3, c4, c5 = as_constrainable_sextic(c).coeffs
    c5_sq = c5 * c5
    residual_1 = 27.0 * c3 - 18.0 * c4 * c5 + 5.0 * c5_sq * c5
    residual_2 = c1 - (27.0 * c2 - 3.0 * c4 * c5_sq + c5_sq * c5_sq) * c5 / 81.0
    m = c.coefficient_scale()
    return ConstraintReport.build(MODEL, residual_1, residual_2, 1.0 + m ** 3, 1.0 + m ** 5, tol)


def direct_a1(c: MonicPolynomial, b0: complex) -> complex:
    """a1 from inverting c2 = a1 + a2 (2 b0 + b1^2) + 3 b0 (b0 + b1^2)."""
    c2, c4, c5 = c.coeffs[2], c.coeffs[4], c.coeffs[5]
    b1 = c5 / 3.0
    a2 = c4 - c5 * c5 / 3.0 - 3.0 * b0
    b1_sq = b1 * b1
    return c2 - a2 * (2.0 * b0 + b1_sq) - 3.0 * b0 * (b0 + b1_sq)


def printed_a1(c: MonicPolynomial, b0: complex) -> complex:
    """
    The closed form for a1 as commonly printed:
    c2 - 2 [3 c4 - 9 b0 - c5^2][18 b0 + c5^2] / 27 - b0 [9 b0 + c5^2] / 3.

    Its middle term is twice a2 (2 b0 + b1^2), so it does not invert the
    forward map; kept for comparison only.
    """
    c2, c4, c5 = c.coeffs[2], c.coeffs[4], c.coeffs[5]
    c5_sq = c5 * c5
    return (c2
            - 2.0 * (3.0 * c4 - 9.0 * b0 - c5_sq) * (18.0 * b0 + c5_sq) / 27.0
            - b0 * (9.0 * b0 + c5_sq) / 3.0)


def recover_params(c: MonicPolynomial,
                   free_b0: complex = DEFAULT_FREE_PARAMETER,
                   tol: float = DEFAULT_TOLERANCE,
                   use_printed_a1: bool = False) -> ModelTwoParams:
    """
    Recover (a0, a1, a2, b0, b1) from the coefficients of a model two sextic.

    Args:
        c: Monic sextic on the model two constraint variety
        free_b0: Chosen value of the free parameter b0
        tol: Constraint tolerance
        use_printed_a1: Use the printed closed form for a1 instead of the
            direct inversion (does not round-trip)

    Returns:
        ModelTwoParams regenerating c

    Raises:
        ConstraintRejectedError: c is not in the family
    """
    report = constraint_residuals(c, tol)
    if not report.satisfied:
        raise ConstraintRejectedError(report)

    c0, c5 = c.coeffs[0], c.coeffs[5]
    b0 = complex(free_b0)
    b1 = c5 / 3.0
    a2 = c.coeffs[4] - c5 * c5 / 3.0 - 3.0 * b0
    a1 = printed_a1(c, b0) if use_printed_a1 else direct_a1(c, b0)
    a0 = c0 - a1 * b0 - a2 * b0 * b0 - b0 * b0 * b0
    logger.debug("model two recovery: b0=%s b1=%s a2=%s a1=%s a0=%s", b0, b1, a2, a1, a0)
    return ModelTwoParams(a0=a0, a1=a1, a2=a2, b0=b0, b1=b1)


def solve_coefficients(c: MonicPolynomial,
                       free_b0: complex = DEFAULT_FREE_PARAMETER,
                       tol: float = DEFAULT_TOLERANCE,
                       polish_steps: int = POLISH_STEPS) -> Tuple[ModelTwoParams, SexticRoots]:
    """Recover the parameters of c and solve it by radicals."""
    params = recover_params(c, free_b0, tol)
    return params, solve(params, polish_steps)
