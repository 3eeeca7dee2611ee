"""
Detector - decides which solvable family (if any) a monic sextic belongs to
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict

from config import DEFAULT_TOLERANCE
from core import model_one, model_two
from core.models import ConstraintReport, MonicPolynomial, as_sextic

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    MODEL_ONE = "ModelOne"
    MODEL_TWO = "ModelTwo"
    BOTH = "Both"
    NEITHER = "Neither"

    @classmethod
    def from_flags(cls, one: bool, two: bool) -> 'Verdict':
        if one and two:
            return cls.BOTH
        if one:
            return cls.MODEL_ONE
        if two:
            return cls.MODEL_TWO
        return cls.NEITHER

    def includes(self, model: int) -> bool:
        if self is Verdict.BOTH:
            return True
        return (model == 1 and self is Verdict.MODEL_ONE) or (model == 2 and self is Verdict.MODEL_TWO)


@dataclass(frozen=True)
class Classification:
    """Outcome of running both models' constraint checks"""
    verdict: Verdict
    report_one: ConstraintReport
    report_two: ConstraintReport
    tolerance_used: float

    def preferred_model(self) -> int:
        """Model to solve with: model one when both apply, 0 when neither does."""
        if self.verdict.includes(1):
            return 1
        if self.verdict.includes(2):
            return 2
        return 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "report_one": self.report_one.to_dict(),
            "report_two": self.report_two.to_dict(),
            "tolerance_used": self.tolerance_used,
        }


def classify(c: MonicPolynomial, tol: float = DEFAULT_TOLERANCE) -> Classification:
    """
    Test c against both constraint varieties.

    Args:
        c: Monic sextic
        tol: Relative tolerance applied to each model's own residual scale

    Returns:
        Classification with the verdict and both reports
    """
    if not tol > 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    as_sextic(c)
    report_one = model_one.constraint_residuals(c, tol)
    report_two = model_two.constraint_residuals(c, tol)
    verdict = Verdict.from_flags(report_one.satisfied, report_two.satisfied)
    logger.debug(
        "classify: verdict=%s rel1=%.3g rel2=%.3g",
        verdict.value, report_one.relative_residual, report_two.relative_residual,
    )
    return Classification(verdict, report_one, report_two, tol)
