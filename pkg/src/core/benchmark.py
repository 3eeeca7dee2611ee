"""
Benchmark - timing and accuracy of the radical solvers against the oracle
on seeded random in-family instances.
"""
import logging
import math
import time
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from config import BENCH_MIN_SOLVES
from core import model_one, model_two
from core.models import MonicPolynomial, RootMultiset
from core.oracle import OracleConfig, oracle_roots
from core.poly_core import evaluate, match_roots
from utils.sampling import make_rng, random_params

logger = logging.getLogger(__name__)

_MODELS = {1: model_one, 2: model_two}


def max_relative_residual(p: MonicPolynomial, roots: RootMultiset) -> float:
    """max over roots of |P(z)| / residual_scale(z)"""
    return max(abs(evaluate(p, z)) / p.residual_scale(z) for z in roots)


def _time_per_call(fn: Callable[[], Any], repeats: int) -> float:
    start = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - start) / repeats


def _timing_summary(samples: List[float]) -> Dict[str, float]:
    return {
        "median_seconds": float(np.median(samples)),
        "p95_seconds": float(np.percentile(samples, 95)),
    }


def run_benchmark(trials: int, seed: int, repeats: Optional[int] = None,
                  oracle_config: OracleConfig = OracleConfig()) -> Dict[str, Any]:
    """
    Time both methods on `trials` random instances per model.

    Args:
        trials: Instances per model
        seed: Seed of the PCG64 generator drawing the instances
        repeats: Calls per timing sample; defaults so that every method
            runs at least BENCH_MIN_SOLVES times in total

    Returns:
        Report dictionary with per-model timing and accuracy
    """
    if repeats is None:
        repeats = max(1, math.ceil(BENCH_MIN_SOLVES / trials))
    rng = make_rng(seed)

    results = []
    for model, module in _MODELS.items():
        radical_times: List[float] = []
        oracle_times: List[float] = []
        radical_residual = 0.0
        oracle_residual = 0.0
        max_distance = 0.0

        for _ in range(trials):
            params = random_params(rng, model)
            coefficients = module.coefficients_from_params(params)

            radical = module.solve(params).values()
            oracle = oracle_roots(coefficients, oracle_config)
            radical_times.append(_time_per_call(lambda: module.solve(params), repeats))
            oracle_times.append(_time_per_call(lambda: oracle_roots(coefficients, oracle_config), repeats))

            radical_residual = max(radical_residual, max_relative_residual(coefficients, radical))
            oracle_residual = max(oracle_residual, max_relative_residual(coefficients, oracle))
            max_distance = max(max_distance, match_roots(radical, oracle).max_distance)

        logger.info("model %d: %d instances, max matched distance %.3g", model, trials, max_distance)
        results.append({
            "model": model,
            "radical": {**_timing_summary(radical_times), "max_relative_residual": radical_residual},
            "oracle": {**_timing_summary(oracle_times), "max_relative_residual": oracle_residual},
            "max_matched_distance": max_distance,
        })

    return {
        "trials": trials,
        "seed": seed,
        "repeats": repeats,
        "generator": "numpy PCG64",
        "models": results,
    }
