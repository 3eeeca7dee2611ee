"""
Error types raised by the solver core
"""
from typing import Any, Dict, List, Optional


class SexticError(Exception):
    """Base class for every error raised by the core modules"""


class InvalidPolynomialError(SexticError, ValueError):
    """Wrong degree, wrong coefficient count or non-finite entries"""


class RootCountMismatchError(SexticError, ValueError):
    """Two root multisets of different size were compared"""


class ConstraintRejectedError(SexticError):
    """
    Raised when parameters are requested for coefficients that do not
    lie on the model's constraint variety.
    """

    def __init__(self, report, message: Optional[str] = None):
        self.report = report
        super().__init__(
            message
            or f"Coefficients fail the model {report.model} constraints "
               f"(residuals {abs(report.residual_1):.3g}, {abs(report.residual_2):.3g} "
               f"at tolerance {report.tolerance:g})"
        )


class RecoveryInconsistentError(SexticError):
    """The redundant expressions for 2*a0 + b1 disagree"""

    def __init__(self, which: str, primary: complex, alternative: complex, discrepancy: float, limit: float):
        self.which = which
        self.primary = primary
        self.alternative = alternative
        self.discrepancy = discrepancy
        self.limit = limit
        super().__init__(
            f"Cross-check '{which}' disagrees with c3 - 2*a1*a2: "
            f"discrepancy {discrepancy:.3g} exceeds {limit:.3g}"
        )


class OracleNonConvergenceError(SexticError):
    """Aberth-Ehrlich iteration did not converge"""

    def __init__(self, iterations: int, best_iterate: List[complex], residuals: List[float]):
        self.iterations = iterations
        self.best_iterate = best_iterate
        self.residuals = residuals
        super().__init__(
            f"Oracle did not converge after {iterations} iterations "
            f"(max residual {max(residuals) if residuals else float('nan'):.3g})"
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "iterations": self.iterations,
            "best_iterate": [[z.real, z.imag] for z in self.best_iterate],
            "residuals": list(self.residuals),
        }
