"""
Sextic Radical Solver - command line front end
Subcommands: gen, solve, check, recover, oracle, bench
"""
import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from config import (
    APP_NAME, APP_VERSION, EXIT_CONSTRAINT_REJECTED, EXIT_OK,
    EXIT_ORACLE_NON_CONVERGENCE, EXIT_VALIDATION, OUTPUT_FORMATS,
)
from core import model_one, model_two
from core.benchmark import max_relative_residual, run_benchmark
from core.detector import classify
from core.errors import (
    ConstraintRejectedError, OracleNonConvergenceError, RecoveryInconsistentError,
)
from core.models import MonicPolynomial, RootMultiset, SexticRoots, complex_pair, sextic
from core.oracle import OracleConfig, oracle_roots
from core.poly_core import evaluate, max_coefficient_difference
from core.validation_models import InputPayload, JobSpec
from utils.json_exporter import JsonExporter

logger = logging.getLogger(__name__)

_MODELS = {1: model_one, 2: model_two}
_PARAMS = {1: model_one.ModelOneParams, 2: model_two.ModelTwoParams}

NOT_IN_FAMILY_NOTICE = "not in either family: roots computed by the iterative oracle"


@dataclass(frozen=True)
class CLIError(RuntimeError):
    """Typed CLI failure with an explicit process exit code."""

    message: str
    exit_code: int = EXIT_VALIDATION

    def __str__(self) -> str:
        return self.message


class _ArgumentParser(argparse.ArgumentParser):
    """argparse reports usage errors through CLIError (exit 1) instead of exiting 2"""

    def error(self, message: str):
        raise CLIError(f"{self.prog}: {message}", EXIT_VALIDATION)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="sextic",
        description=(
            f"{APP_NAME} {APP_VERSION} - build, detect, invert and solve by radicals "
            "the two solvable families of monic sextics.\n\n"
            "Complex values: 1, -2.5, 1+2j, 3j. Vectors are ascending: c0..c5, "
            "parameters are a0 a1 a2 b0 b1.\n"
            "Without --coeffs/--params a JSON object is read from stdin, so\n"
            "  sextic gen --model 1 --params 1 2 3 4 5 | sextic solve | sextic check\n"
            "works."
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default=None,
                        help="Output format (default: json).")
    common.add_argument("--tol", dest="tolerance", type=float, default=None,
                        help="Constraint tolerance relative to the residual scale (default: 1e-9).")
    common.add_argument("--verbose", "-v", action="store_true", default=False,
                        help="Debug logging on stderr.")

    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="COMMAND")

    gen = sub.add_parser("gen", parents=[common], help="Coefficients and roots from parameters.")
    gen.add_argument("--model", type=int, choices=(1, 2), default=None)
    gen.add_argument("--params", nargs=5, metavar="P", default=None)

    solve = sub.add_parser("solve", parents=[common], help="Solve a sextic (detects the family).")
    solve.add_argument("--coeffs", dest="coefficients", nargs=6, metavar="C", default=None)
    solve.add_argument("--params", nargs=5, metavar="P", default=None)
    solve.add_argument("--model", type=int, choices=(1, 2), default=None,
                       help="Force a model instead of detecting it.")
    solve.add_argument("--free", dest="free_parameter", default=None,
                       help="Free fiber coordinate (a0 or b0, default 0).")

    check = sub.add_parser("check", parents=[common], help="Classify a sextic.")
    check.add_argument("--coeffs", dest="coefficients", nargs=6, metavar="C", default=None)

    recover = sub.add_parser("recover", parents=[common], help="Parameters from coefficients.")
    recover.add_argument("--coeffs", dest="coefficients", nargs=6, metavar="C", default=None)
    recover.add_argument("--model", type=int, choices=(1, 2), default=None)
    recover.add_argument("--free", dest="free_parameter", default=None)

    oracle = sub.add_parser("oracle", parents=[common], help="Iterative roots of any monic polynomial.")
    oracle.add_argument("--coeffs", dest="coefficients", nargs="+", metavar="C", default=None)
    oracle.add_argument("--max-iterations", dest="max_iterations", type=int, default=None)

    bench = sub.add_parser("bench", parents=[common], help="Radical vs oracle timing and accuracy.")
    bench.add_argument("--trials", type=int, default=None)
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--repeats", type=int, default=None)

    return parser


# ---------------------------------------------------------------------------
# Request handling
# ---------------------------------------------------------------------------


def _needs_payload(request: Dict[str, Any]) -> bool:
    if request.get("subcommand") == "bench":
        return False
    return request.get("coefficients") is None and request.get("params") is None


def _read_payload(input_stream: Optional[TextIO], subcommand: Optional[str] = None) -> Dict[str, Any]:
    """Read one JSON object from stdin and keep the fields a job can use."""
    if input_stream is None or input_stream.isatty():
        return {}
    text = input_stream.read().strip()
    if not text:
        return {}
    # line-oriented: the first non-empty line carries the object
    first_line = next(line for line in text.splitlines() if line.strip())
    try:
        data = json.loads(first_line)
    except json.JSONDecodeError as exc:
        raise CLIError(f"stdin is not a JSON object: {exc}", EXIT_VALIDATION)
    if not isinstance(data, dict):
        raise CLIError("stdin must hold a JSON object", EXIT_VALIDATION)
    return InputPayload.model_validate(data).job_fields(subcommand)


def load_job_spec(request: Dict[str, Any], input_stream: Optional[TextIO]) -> JobSpec:
    """Merge command-line fields with a stdin payload and validate."""
    fields = {k: v for k, v in request.items() if v is not None}
    if _needs_payload(fields):
        payload = _read_payload(input_stream, fields.get("subcommand"))
        for key, value in payload.items():
            fields.setdefault(key, value)
    return JobSpec.model_validate(fields)


def _common_fields(job: JobSpec) -> Dict[str, Any]:
    return {
        "command": job.subcommand,
        "tolerance": job.tolerance,
        "free_parameter": complex_pair(job.free_parameter),
    }


def _root_residuals(p: MonicPolynomial, roots: RootMultiset) -> List[float]:
    return [abs(evaluate(p, z)) for z in roots]


def _radical_report(job: JobSpec, model: int, params, coefficients: MonicPolynomial,
                    roots: SexticRoots) -> Dict[str, Any]:
    values = roots.values()
    return {
        **_common_fields(job),
        "model": model,
        "method": "radical",
        "params": params.to_dict(),
        "coefficients": [complex_pair(c) for c in coefficients.coeffs],
        "roots": [r.to_dict() for r in roots.roots],
        "resolvents": [y.to_dict() for y in roots.resolvents],
        "residuals": _root_residuals(coefficients, values),
        "max_relative_residual": max_relative_residual(coefficients, values),
    }


def handle_gen(job: JobSpec, error_stream: TextIO) -> Dict[str, Any]:
    module = _MODELS[job.model]
    params = _PARAMS[job.model].from_sequence(job.params)
    coefficients = module.coefficients_from_params(params)
    return _radical_report(job, job.model, params, coefficients, module.solve(params))


def handle_solve(job: JobSpec, error_stream: TextIO) -> Dict[str, Any]:
    if job.coefficients is None:
        return handle_gen(job, error_stream)

    coefficients = sextic(job.coefficients)
    classification = classify(coefficients, job.tolerance)
    model = job.model or classification.preferred_model()

    if model:
        params, roots = _MODELS[model].solve_coefficients(
            coefficients, job.free_parameter, job.tolerance,
        )
        report = _radical_report(job, model, params, coefficients, roots)
        report["verdict"] = classification.verdict.value
        report["forced_model"] = job.model is not None
        return report

    error_stream.write(f"notice: {NOT_IN_FAMILY_NOTICE}\n")
    roots = oracle_roots(coefficients, OracleConfig(max_iterations=job.max_iterations))
    return {
        **_common_fields(job),
        "model": None,
        "method": "oracle",
        "verdict": classification.verdict.value,
        "notice": NOT_IN_FAMILY_NOTICE,
        "coefficients": [complex_pair(c) for c in coefficients.coeffs],
        "roots": [{"value": complex_pair(z)} for z in roots],
        "residuals": _root_residuals(coefficients, roots),
        "max_relative_residual": max_relative_residual(coefficients, roots),
    }


def handle_check(job: JobSpec, error_stream: TextIO) -> Dict[str, Any]:
    coefficients = sextic(job.coefficients)
    classification = classify(coefficients, job.tolerance)
    return {
        **_common_fields(job),
        "coefficients": [complex_pair(c) for c in coefficients.coeffs],
        **classification.to_dict(),
    }


def handle_recover(job: JobSpec, error_stream: TextIO) -> Dict[str, Any]:
    module = _MODELS[job.model]
    coefficients = sextic(job.coefficients)
    params = module.recover_params(coefficients, job.free_parameter, job.tolerance)
    regenerated = module.coefficients_from_params(params)
    return {
        **_common_fields(job),
        "model": job.model,
        "coefficients": [complex_pair(c) for c in coefficients.coeffs],
        "params": params.to_dict(),
        "round_trip_residual": max_coefficient_difference(coefficients, regenerated),
        "constraints": module.constraint_residuals(coefficients, job.tolerance).to_dict(),
    }


def handle_oracle(job: JobSpec, error_stream: TextIO) -> Dict[str, Any]:
    polynomial = MonicPolynomial.from_sequence(job.coefficients)
    roots = oracle_roots(polynomial, OracleConfig(max_iterations=job.max_iterations))
    return {
        **_common_fields(job),
        "degree": polynomial.degree,
        "method": "oracle",
        "coefficients": [complex_pair(c) for c in polynomial.coeffs],
        "roots": [{"value": complex_pair(z)} for z in roots],
        "residuals": _root_residuals(polynomial, roots),
        "max_iterations": job.max_iterations,
    }


def handle_bench(job: JobSpec, error_stream: TextIO) -> Dict[str, Any]:
    return {
        **_common_fields(job),
        **run_benchmark(job.trials, job.seed, job.repeats,
                        OracleConfig(max_iterations=job.max_iterations)),
    }


HANDLERS: Dict[str, Callable[[JobSpec, TextIO], Dict[str, Any]]] = {
    "gen": handle_gen,
    "solve": handle_solve,
    "check": handle_check,
    "recover": handle_recover,
    "oracle": handle_oracle,
    "bench": handle_bench,
}


def _error_object(command: Optional[str], kind: str, message: str, exit_code: int,
                  details: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    error = {"type": kind, "message": message, "exit_code": exit_code}
    if details:
        error["details"] = details
    return {"command": command or "unknown", "error": error}


def _validation_message(exc: ValidationError) -> str:
    parts = []
    for err in exc.errors():
        location = ".".join(str(x) for x in err.get("loc", ()))
        parts.append(f"{location}: {err.get('msg')}" if location else str(err.get("msg")))
    return "; ".join(parts)


def run(request: Dict[str, Any], input_stream: Optional[TextIO],
        output_stream: TextIO, error_stream: TextIO) -> int:
    """
    Execute one job.

    Args:
        request: Raw JobSpec fields (from the command line); missing
            coefficients/params are read from input_stream as JSON
        input_stream: Source of the JSON payload
        output_stream: Report destination
        error_stream: Diagnostics

    Returns:
        Process exit code (0 ok, 1 validation, 2 constraint rejection,
        3 oracle non-convergence)
    """
    command = request.get("subcommand")
    exporter = JsonExporter(request.get("output_format") or "json")

    def fail(kind: str, message: str, exit_code: int, details: Optional[Dict[str, Any]] = None) -> int:
        error_stream.write(f"error: {message}\n")
        if exporter.output_format == "json":
            exporter.export(_error_object(command, kind, message, exit_code, details), output_stream)
        return exit_code

    try:
        job = load_job_spec(request, input_stream)
        logger.debug("job: %s", job.model_dump())
        report = HANDLERS[job.subcommand](job, error_stream)
        exporter.export(report, output_stream)
        return EXIT_OK
    except CLIError as exc:
        return fail("usage", exc.message, exc.exit_code)
    except ValidationError as exc:
        return fail("validation", _validation_message(exc), EXIT_VALIDATION)
    except ConstraintRejectedError as exc:
        return fail("constraint_rejected", str(exc), EXIT_CONSTRAINT_REJECTED,
                    {"report": exc.report.to_dict()})
    except RecoveryInconsistentError as exc:
        return fail("recovery_inconsistent", str(exc), EXIT_CONSTRAINT_REJECTED,
                    {"check": exc.which, "discrepancy": exc.discrepancy, "limit": exc.limit})
    except OracleNonConvergenceError as exc:
        return fail("oracle_non_convergence", str(exc), EXIT_ORACLE_NON_CONVERGENCE, exc.to_dict())
    except (ValueError, OverflowError) as exc:
        return fail("validation", str(exc), EXIT_VALIDATION)


def main(argv: Optional[Sequence[str]] = None,
         input_stream: Optional[TextIO] = None,
         output_stream: Optional[TextIO] = None,
         error_stream: Optional[TextIO] = None) -> int:
    input_stream = sys.stdin if input_stream is None else input_stream
    output_stream = sys.stdout if output_stream is None else output_stream
    error_stream = sys.stderr if error_stream is None else error_stream

    try:
        args = build_parser().parse_args(argv)
    except CLIError as exc:
        error_stream.write(f"error: {exc.message}\n")
        return exc.exit_code

    request = vars(args)
    verbose = request.pop("verbose", False)
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=error_stream,
        format="%(levelname)s %(name)s: %(message)s",
    )
    request["verbose"] = verbose
    return run(request, input_stream, output_stream, error_stream)
