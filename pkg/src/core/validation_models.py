"""
Pydantic models for CLI payload validation.
Handles complex values on the wire, vector lengths and per-command requirements.
"""
import cmath
import numbers
from typing import Annotated, Any, Dict, List, Literal, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, field_validator, model_validator

from config import (
    BENCH_DEFAULT_SEED, BENCH_DEFAULT_TRIALS, DEFAULT_FREE_PARAMETER,
    DEFAULT_TOLERANCE, ORACLE_MAX_ITERATIONS,
)

PARAM_ORDER = ("a0", "a1", "a2", "b0", "b1")

# --- Custom Validators ---

def parse_complex(v: Any) -> complex:
    """Accepts [re, im], a bare real, a complex, or a complex literal string"""
    if isinstance(v, bool):
        raise ValueError("Booleans are not numbers")
    if isinstance(v, (list, tuple)):
        if len(v) != 2 or not all(isinstance(x, numbers.Real) and not isinstance(x, bool) for x in v):
            raise ValueError("Complex values are [re, im] pairs of numbers")
        z = complex(float(v[0]), float(v[1]))
    elif isinstance(v, numbers.Number):
        z = complex(v)
    elif isinstance(v, str):
        try:
            z = complex(v.strip().replace(" ", ""))
        except ValueError:
            raise ValueError(f"Not a complex number: {v!r}")
    else:
        raise ValueError(f"Not a complex number: {v!r}")

    if not cmath.isfinite(z):
        raise ValueError("Complex values must be finite")
    return z


ComplexValue = Annotated[complex, BeforeValidator(parse_complex)]

# --- Stdin payload ---

class InputPayload(BaseModel):
    """A JSON object read from stdin, typically emitted by another subcommand"""
    model_config = ConfigDict(extra="ignore")

    schema_version: Optional[int] = Field(None, alias="schema")
    model: Optional[Literal[1, 2]] = None
    params: Optional[List[ComplexValue]] = None
    coefficients: Optional[List[ComplexValue]] = None

    @field_validator('params', mode='before')
    @classmethod
    def params_from_mapping(cls, v):
        if isinstance(v, dict):
            missing = [name for name in PARAM_ORDER if name not in v]
            if missing:
                raise ValueError(f"Missing parameters: {', '.join(missing)}")
            return [v[name] for name in PARAM_ORDER]
        return v

    @field_validator('coefficients', mode='before')
    @classmethod
    def coefficients_from_mapping(cls, v):
        # accept {"degree": n, "coefficients": [...]} as emitted for polynomials
        if isinstance(v, dict) and "coefficients" in v:
            return v["coefficients"]
        return v

    def job_fields(self, subcommand: Optional[str] = None) -> Dict[str, Any]:
        """Fields to merge into a JobSpec; solve on coefficients detects its model itself."""
        model = self.model
        if subcommand == "solve" and self.coefficients is not None:
            model = None
        fields = {"model": model, "params": self.params, "coefficients": self.coefficients}
        return {k: v for k, v in fields.items() if v is not None}

# --- Main Model ---

class JobSpec(BaseModel):
    """One CLI invocation, fully validated"""
    model_config = ConfigDict(extra="forbid")

    subcommand: Literal["gen", "solve", "check", "recover", "oracle", "bench"]
    model: Optional[Literal[1, 2]] = None
    params: Optional[List[ComplexValue]] = None
    coefficients: Optional[List[ComplexValue]] = None
    free_parameter: ComplexValue = DEFAULT_FREE_PARAMETER
    tolerance: float = Field(DEFAULT_TOLERANCE, gt=0, allow_inf_nan=False)
    output_format: Literal["json", "text"] = "json"
    seed: int = Field(BENCH_DEFAULT_SEED, ge=0)
    trials: int = Field(BENCH_DEFAULT_TRIALS, ge=1)
    repeats: Optional[int] = Field(None, ge=1)
    max_iterations: int = Field(ORACLE_MAX_ITERATIONS, ge=1)
    verbose: bool = False

    @field_validator('params')
    @classmethod
    def five_params(cls, v):
        if v is not None and len(v) != 5:
            raise ValueError(f"Expected 5 parameters (a0, a1, a2, b0, b1), got {len(v)}")
        return v

    @model_validator(mode='after')
    def check_requirements(self):
        cmd = self.subcommand
        if cmd == "gen":
            if self.model is None or self.params is None:
                raise ValueError("gen needs --model and --params")
        elif cmd == "solve":
            if self.coefficients is None and self.params is None:
                raise ValueError("solve needs --coeffs (or --params with --model)")
            if self.coefficients is None and self.model is None:
                raise ValueError("solve with explicit parameters needs --model")
        elif cmd == "recover":
            if self.coefficients is None or self.model is None:
                raise ValueError("recover needs --coeffs and --model")
        elif cmd in ("check", "oracle"):
            if self.coefficients is None:
                raise ValueError(f"{cmd} needs --coeffs")

        if self.coefficients is not None:
            if cmd == "oracle":
                if len(self.coefficients) < 1:
                    raise ValueError("oracle needs at least one coefficient")
            elif len(self.coefficients) != 6:
                raise ValueError(f"Expected 6 coefficients (c0..c5), got {len(self.coefficients)}")
        return self
